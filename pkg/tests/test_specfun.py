import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypersum.errors import DomainError, PoleError
from hypersum.hyperseries import euler_accelerated_sum
from hypersum.specfun import (
    EULER_GAMMA,
    ConjugatePair,
    digamma,
    gamma,
    gamma_ratio,
    incomplete_beta,
    is_pole,
    log_abs_gamma,
    log_gamma,
    lowercase_beta,
    lowercase_beta_derivative,
    pochhammer,
    pochhammer_ratio_step,
    rgamma,
    root_pair,
    trigamma,
)

# high-precision reference values (mpmath, 30 digits), frozen here
LOG_GAMMA_10_5 = 13.940625219403763633
GAMMA_VALUES = {-2.5: -0.94530872048294188123, 0.1: 9.5135076986687312858, 30.3: 2.4442850291542563295e31}
DIGAMMA_VALUES = {0.3: -3.5025242222001331249, -1.7: -1.4857174995110567089}
TRIGAMMA_VALUES = {0.3: 12.245364546107731301, -1.7: 14.632201633884014385}
BETA_VALUES = {0.75: 0.97499098879872209672, 2.5: 0.23746299346156328590}
BETA_PRIME_075 = -1.5390091687091474290
INC_BETA_09_05_M03 = 4.8331771392719356950


def test_log_gamma_small_integers():
    assert log_gamma(1) == 0.0
    assert log_gamma(2) == 0.0


def test_log_gamma_reference():
    assert log_gamma(10.5) == pytest.approx(LOG_GAMMA_10_5, rel=1e-15, abs=0)


@pytest.mark.parametrize("x,expected", GAMMA_VALUES.items())
def test_gamma_reference(x, expected):
    assert gamma(x) == pytest.approx(expected, rel=1e-13)


def test_gamma_integers_are_factorials():
    for n in range(1, 20):
        assert gamma(n) == math.factorial(n - 1)


def test_gamma_poles_raise():
    for x in (0.0, -1.0, -7.0, -3.0 + 1e-11):
        assert is_pole(x)
        with pytest.raises(PoleError):
            gamma(x)
    assert rgamma(-4.0) == 0.0


def test_log_gamma_rejects_nonpositive():
    with pytest.raises(DomainError):
        log_gamma(-0.5)


def test_gamma_recurrence():
    for x in np.linspace(0.1, 50.0, 400):
        g1 = gamma(x + 1)
        assert abs(g1 - x * gamma(x)) / g1 <= 1e-12


def test_log_abs_gamma_sign():
    for x in (-0.5, -1.5, -2.5, -3.5):
        lg, sg = log_abs_gamma(x)
        assert sg * math.exp(lg) == pytest.approx(gamma(x), rel=1e-13)


def test_gamma_ratio_handles_large_arguments():
    # Gamma(200.5) / Gamma(200) ~ sqrt(200): each factor alone overflows
    assert gamma_ratio([200.5], [200.0]) == pytest.approx(14.1333, rel=1e-4)
    assert gamma_ratio([1.0], [-3.0]) == 0.0


def test_pochhammer_examples():
    assert pochhammer(5.3, 0) == 1.0
    assert pochhammer(3, 4) == 360.0
    assert pochhammer(-2, 4) == 0.0
    assert pochhammer(-2.5, 4) == pytest.approx(-0.9375, rel=1e-15)


def test_pochhammer_overflow_is_signed_infinity():
    assert pochhammer(0.5, 400) == math.inf
    assert pochhammer(-0.5, 400) == -math.inf


def test_pochhammer_concatenation():
    for lam in (-3.7, -0.5, 0.25, 1.0, 2.9):
        for m in range(21):
            for n in range(21):
                lhs = pochhammer(lam, m + n)
                rhs = pochhammer(lam, m) * pochhammer(lam + m, n)
                assert abs(lhs - rhs) <= 1e-13 * abs(lhs) + 1e-300


def test_pochhammer_large_n_matches_product():
    prod = 1.0
    for k in range(80):
        prod *= 0.3 + k
    assert pochhammer(0.3, 80) == pytest.approx(prod, rel=1e-12)


def test_pochhammer_ratio_step_examples():
    assert pochhammer_ratio_step(ConjugatePair(1, 0), 0) == 1.0
    assert pochhammer_ratio_step(ConjugatePair(0.5, 2), 0) == 4.25
    assert pochhammer_ratio_step(ConjugatePair(1.5, 0.5), 3) == 20.5
    with pytest.raises(PoleError):
        pochhammer_ratio_step(ConjugatePair(-2.0, 0.0), 2)


@settings(max_examples=100, deadline=None)
@given(
    re=st.floats(-10, 10),
    im=st.floats(0, 10),
    r=st.integers(0, 50),
)
def test_pochhammer_ratio_step_matches_complex_product(re, im, r):
    pair = ConjugatePair(re, im)
    s1, s2 = pair.as_complex()
    expected = ((s1 + r) * (s2 + r)).real
    if abs(re + r) < 1e-6 and im == 0.0:
        return
    got = pochhammer_ratio_step(pair, r)
    assert abs(got - expected) <= 1e-13 * max(1.0, abs(expected))


def test_root_pair_switches_to_conjugates():
    assert root_pair(1.0, 4.0, 2.0) == [0.0, 2.0]
    (pair,) = root_pair(1.0, -4.0, 2.0)
    assert pair == ConjugatePair(1.0, 1.0)


def test_digamma_examples():
    assert digamma(1) == pytest.approx(-0.57721566490, abs=5e-12)
    assert digamma(1) == pytest.approx(-EULER_GAMMA, abs=1e-14)
    assert digamma(2) == pytest.approx(1 - EULER_GAMMA, abs=1e-14)
    assert digamma(0.5) == pytest.approx(-EULER_GAMMA - 2 * math.log(2), abs=1e-14)


@pytest.mark.parametrize("x,expected", DIGAMMA_VALUES.items())
def test_digamma_reference(x, expected):
    assert digamma(x) == pytest.approx(expected, abs=1e-13)


def test_digamma_matches_defining_series():
    # Psi(x) = -gamma + (x - 1) sum 1/((n+1)(n+x)); sum the tail analytically
    x = 2.7
    n = np.arange(0, 200_000, dtype=float)
    partial = np.sum(1.0 / ((n + 1) * (n + x)))
    tail = 1.0 / 200_000  # sum_{n >= N} 1/n^2 ~ 1/N
    assert digamma(x) == pytest.approx(-EULER_GAMMA + (x - 1) * (partial + tail), abs=1e-9)


def test_digamma_poles():
    with pytest.raises(PoleError):
        digamma(-2.0)


def test_digamma_reflection(grid):
    for x in grid:
        res = digamma(1 - x) - digamma(x) - math.pi / math.tan(math.pi * x)
        assert abs(res) <= 1e-10


def test_digamma_recurrence(grid):
    for x in grid:
        assert abs(digamma(1 + x) - digamma(x) - 1 / x) <= 1e-12


def test_digamma_tangent_identity():
    for x in np.linspace(-0.45, 0.45, 181):
        res = digamma(0.5 + x) - digamma(0.5 - x) - math.pi * math.tan(math.pi * x)
        assert abs(res) <= 1e-10


def test_trigamma_examples():
    assert trigamma(1) == pytest.approx(math.pi**2 / 6, abs=1e-13)
    assert trigamma(2) == pytest.approx(math.pi**2 / 6 - 1, abs=1e-13)
    assert trigamma(0.5) == pytest.approx(math.pi**2 / 2, abs=1e-13)


@pytest.mark.parametrize("x,expected", TRIGAMMA_VALUES.items())
def test_trigamma_reference(x, expected):
    assert trigamma(x) == pytest.approx(expected, rel=1e-13)


def test_trigamma_is_digamma_derivative():
    for x in (0.4, 1.3, 5.0, 17.5):
        h = 1e-4
        fd = (digamma(x + h) - digamma(x - h)) / (2 * h)
        assert trigamma(x) == pytest.approx(fd, rel=1e-7)


def test_lowercase_beta_examples():
    assert lowercase_beta(1) == pytest.approx(math.log(2), abs=1e-14)
    assert lowercase_beta(2) == pytest.approx(1 - math.log(2), abs=1e-14)
    assert lowercase_beta(0.5) == pytest.approx(math.pi / 2, abs=1e-14)


@pytest.mark.parametrize("x,expected", BETA_VALUES.items())
def test_lowercase_beta_reference(x, expected):
    assert lowercase_beta(x) == pytest.approx(expected, abs=1e-14)


def test_lowercase_beta_matches_alternating_sum():
    rng = np.random.default_rng(7)
    for x in rng.uniform(0.1, 5.0, 100):
        k = np.arange(60, dtype=float)
        terms = (-1.0) ** k / (k + x)
        value, _ = euler_accelerated_sum(terms)
        assert abs(lowercase_beta(x) - value) <= 1e-11


def test_lowercase_beta_derivative():
    assert lowercase_beta_derivative(0.75) == pytest.approx(BETA_PRIME_075, abs=1e-9)


def test_incomplete_beta_examples():
    assert incomplete_beta(1, 1, 1) == pytest.approx(1.0, abs=1e-12)
    assert incomplete_beta(0.5, 1, 1) == pytest.approx(0.5, abs=1e-12)
    assert incomplete_beta(0.5, 2, 3) == pytest.approx(11 / 192, abs=1e-12)


def test_incomplete_beta_brute_force_midpoint():
    # 10^6-panel midpoint rule on a smooth integrand
    n = 1_000_000
    t = (np.arange(n) + 0.5) * (0.5 / n)
    brute = np.sum(t * (1 - t) ** 2) * (0.5 / n)
    assert incomplete_beta(0.5, 2, 3) == pytest.approx(brute, abs=1e-10)


def test_incomplete_beta_singular_endpoints():
    assert incomplete_beta(0.9, 0.5, -0.3) == pytest.approx(INC_BETA_09_05_M03, rel=1e-11)
    # B_1(a, b) is the complete beta function
    assert incomplete_beta(1.0, 0.3, 0.6) == pytest.approx(gamma_ratio([0.3, 0.6], [0.9]), rel=1e-11)


def test_incomplete_beta_domain():
    for args in ((0.0, 1, 1), (1.2, 1, 1), (0.5, -1.0, 1.0), (1.0, 1.0, -0.5)):
        with pytest.raises(DomainError):
            incomplete_beta(*args)
