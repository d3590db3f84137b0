import math

import numpy as np
import pytest

from hypersum.errors import DomainError
from hypersum.hyperseries import HypergeometricSpec, euler_accelerated_sum, eval_series, terms
from hypersum.identities import (
    MARGIN,
    ParamPoint,
    check,
    get,
    off_even,
    off_odd,
    off_poles,
    red2_parameters,
    registry,
)
from hypersum.quad import two_f1_minus_one
from hypersum.specfun import lowercase_beta

REQUIRED = [
    "dixon_3f2", "vanishing_3f2", "kummer_type_3f2_neg1", "split_3f2_two_2f1",
    "gauss_combined_3f2_1", "classical_4f3_neg1", "classical_4f3_pos1", "classical_5f4_pos1",
    "trigamma_3f2", "digamma_diff_3f2", "beta_diff_3f2_neg1", "beta_derivative_3f2_neg1",
    "tan_form", "sec_form", "sec_squared_form", "incomplete_beta_2f1",
    "thm1_6F5_neg1", "thm2_6F5_pos1", "thm3_6F5_neg1", "thm4_7F6_pos1", "thm5_7F6_pos1",
    "thm6_7F6_neg1", "thm7_8F7_neg1", "thm8_8F7_pos1", "thm9_8F7_neg1",
    "thm10_3F2_neg1_sec_beta", "thm10_3F2_neg1_digamma", "red1_4F3_pos1", "red2_7F6_neg1",
]


def test_registry_size_and_ids():
    ids = [i.id for i in registry()]
    assert len(ids) >= 30
    assert len(set(ids)) == len(ids)
    for rid in REQUIRED:
        assert rid in ids
    assert all(i.provenance for i in registry())


def test_margin_helpers():
    assert not off_poles(-2.01) and off_poles(-2.03) and off_poles(0.5)
    assert not off_odd(2.99) and off_odd(2.5)
    assert not off_even(-0.01) and off_even(1.0)


def test_dixon_domain_example():
    assert get("dixon_3f2").domain(ParamPoint(a=1, b=0.3, c=0.2))


def test_check_rejects_outside_domain():
    with pytest.raises(DomainError):
        check(get("vanishing_3f2"), ParamPoint(a=0.6, b=0.3))


def test_thm10_example_against_brute_force_euler():
    rec = check(get("thm10_3F2_neg1_sec_beta"), ParamPoint(a=1, b=2))
    expected_rhs = 0.75 * (math.pi / 2 / math.cos(math.pi / 4) - lowercase_beta(0.75))
    assert rec.rhs == pytest.approx(expected_rhs, abs=1e-15)
    # oracle: 3F2(1, 1/4, 3/4; 7/4, 5/4; -1) written out term by term, Euler summed
    k = np.arange(200, dtype=float)
    raw = (-1.0) ** k * (0.25 * 0.75) / ((k + 0.25) * (k + 0.75))
    oracle, _ = euler_accelerated_sum(raw)
    assert rec.lhs == pytest.approx(oracle, abs=1e-9)
    assert abs(rec.lhs - rec.rhs) <= 1e-9


def test_vanishing_example():
    rec = check(get("vanishing_3f2"), ParamPoint(a=0.6, b=-0.5))
    assert rec.rhs == 0.0
    assert abs(rec.lhs) <= 1e-9


def test_digamma_diff_example():
    rec = check(get("digamma_diff_3f2"), ParamPoint(a=1, b=2))
    assert rec.rhs == pytest.approx(2.0, abs=1e-14)
    assert rec.lhs == pytest.approx(2.0, abs=1e-10)


def test_record_residual_invariant():
    rec = check(get("dixon_3f2"), ParamPoint(a=1.3, b=0.3, c=0.2))
    assert rec.rel_residual == pytest.approx(rec.abs_residual / (1 + abs(rec.rhs)), rel=1e-15)
    assert rec.status == "pass"


def test_thm10_forms_agree():
    rng = np.random.default_rng(2024)
    sec_beta = get("thm10_3F2_neg1_sec_beta")
    digam = get("thm10_3F2_neg1_digamma")
    done = 0
    while done < 100:
        a = rng.uniform(0.1, 1.9)
        p = ParamPoint(a=a, b=rng.uniform(a + 0.2, 4.0))
        if not sec_beta.domain(p):
            continue
        x, _ = sec_beta.rhs(p, 1e-12)
        y, _ = digam.rhs(p, 1e-12)
        assert abs(x - y) <= 1e-10
        done += 1


@pytest.mark.parametrize("tid", ["thm1_6F5_neg1", "thm2_6F5_pos1"])
def test_theorem_degeneration_at_equal_rates(tid):
    ident = get(tid)
    a, c, v = 0.4, 1.0, 1.6 if tid.startswith("thm2") else 2.5
    lo = ParamPoint(a=a, b=a * (1 - 1e-4), c=c, v=v)
    hi = ParamPoint(a=a, b=a * (1 + 1e-4), c=c, v=v)
    l1, _ = ident.lhs(lo, 1e-12)
    l2, _ = ident.lhs(hi, 1e-12)
    assert abs(l1 - l2) < 1e-2
    for p in (lo, hi):
        r, _ = ident.rhs(p, 1e-12)
        lhs, _ = ident.lhs(p, 1e-12)
        assert abs(lhs - r) / (1 + abs(r)) <= 1e-8


def test_dixon_specialization_of_4f3():
    # the 4F3(-1) sum with 2d = 1 + a and c = b is the 3F2(-1) sum
    kummer = get("kummer_type_3f2_neg1")
    four = get("classical_4f3_neg1")
    rng = np.random.default_rng(99)
    done = 0
    while done < 25:
        a, b = rng.uniform(0.1, 3.0), rng.uniform(-1.5, 0.45)
        p3 = ParamPoint(a=a, b=b)
        p4 = ParamPoint(a=a, c=b, d=(1 + a) / 2)
        if not (kummer.domain(p3) and four.domain(p4)):
            continue
        v3, _ = kummer.rhs(p3, 1e-12)
        v4, _ = four.rhs(p4, 1e-12)
        assert v3 == pytest.approx(v4, rel=1e-12)
        l3, _ = kummer.lhs(p3, 1e-12)
        assert l3 == pytest.approx(v4, rel=1e-8)
        done += 1


@pytest.mark.parametrize("z", [0.3, -0.3, 1.0, -1.0, 1.4, -1.4])
def test_sec_squared(z):
    rec = check(get("sec_squared_form"), ParamPoint(z=z))
    assert abs(rec.lhs - 1 / math.cos(z) ** 2) <= 1e-9


def test_red2_constituents_match_integrals():
    ident = get("red2_7F6_neg1")
    p = ParamPoint(a=0.5, b=0.8, c=1.0, v=1.5)
    assert ident.domain(p)
    for _, _, lower in red2_parameters(p):
        s = two_f1_minus_one(p.v, lower, "series")
        i = two_f1_minus_one(p.v, lower, "integral")
        assert abs(s - i) <= 1e-8
    rec = check(ident, p, quad_tol=1e-10)
    assert rec.status == "pass"
    assert rec.integral_residual <= 1e-8


def test_thm4_both_sigma_regimes():
    ident = get("thm4_7F6_pos1")
    for a, b in ((0.9, 0.3), (0.3, 0.9)):
        rec = check(ident, ParamPoint(a=a, b=b, c=1.0, v=1.5))
        assert rec.status == "pass", rec


def test_thm9_is_always_conditional():
    ident = get("thm9_8F7_neg1")
    p = ParamPoint(a=0.3, b=1.0, c=0.4)
    assert ident.omega(p) == pytest.approx(0.0, abs=1e-14)
    assert ident.conditional_at(p)
    assert check(ident, p).status == "pass"


def test_trigamma_at_one_against_basel_sum():
    k = np.arange(1, 2_000_001, dtype=float)
    oracle = np.sum(1.0 / k**2) + 1.0 / 2_000_000  # tail ~ 1/N
    rec = check(get("trigamma_3f2"), ParamPoint(x=1.0))
    assert abs(rec.lhs - oracle) <= 1e-10
    assert abs(rec.rhs - math.pi**2 / 6) <= 1e-12


def test_integral_identity_has_three_legs():
    rec = check(get("integral_cosh_over_cosh_sec"), ParamPoint(a=0.5, b=1.0), quad_tol=1e-10)
    assert rec.integral is not None
    assert rec.integral == pytest.approx(math.pi / 2 / math.cos(math.pi / 4), abs=1e-9)


def test_margin_is_enforced_for_trig_zero():
    ident = get("thm2_6F5_pos1")
    assert not ident.domain(ParamPoint(a=0.2, b=0.3, c=1.0, v=1.0 + MARGIN / 2))
    assert ident.domain(ParamPoint(a=0.2, b=0.3, c=1.0, v=1.0 + 2 * MARGIN))
