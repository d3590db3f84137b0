"""Scalar special functions: gamma family, Pochhammer symbols, digamma,
trigamma, the lowercase beta function and the incomplete beta integral.

Everything here works on plain Python floats and is free of shared state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleError
from .gk import adaptive_gk

EULER_GAMMA = 0.57721566490153286060651209008240243

# Points closer than this to a nonpositive integer are treated as poles.
POLE_TOL = 1e-9

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_GAMMA_MAX = 171.61447887182298


def is_pole(x: float, tol: float = POLE_TOL) -> bool:
    """True when ``x`` lies within ``tol`` of an element of {0, -1, -2, ...}."""
    r = round(x)
    return r <= 0 and abs(x - r) < tol


def _sinpi(x: float) -> float:
    # argument reduction keeps full relative accuracy near the integers
    r = round(x)
    s = math.sin(math.pi * (x - r))
    return -s if r % 2 else s


def _lanczos_sum(x: float) -> float:
    # x is the shifted argument (Gamma(x + 1) convention)
    acc = _LANCZOS_COEF[0]
    for i in range(1, 9):
        acc += _LANCZOS_COEF[i] / (x + i)
    return acc


def gamma(x: float) -> float:
    """Gamma function for real ``x``.

    Lanczos approximation (g = 7, nine coefficients), with the reflection
    formula for ``x < 0.5``.
    """
    x = float(x)
    if is_pole(x):
        raise PoleError(f"gamma has a pole at x={x!r}")
    if x < 0.5:
        return math.pi / (_sinpi(x) * gamma(1.0 - x))
    if x > _GAMMA_MAX:
        raise OverflowError(f"gamma({x!r}) exceeds the double range")
    if x == math.floor(x) and x <= 23:
        return float(math.factorial(int(x) - 1))
    if x > 24.0:
        # walk up from [12, 13) by multiplication; cheaper in rounding
        # error than one huge power
        steps = int(x) - 12
        base = x - steps
        prod = gamma(base)
        for k in range(steps):
            prod *= base + k
        return prod
    y = x - 1.0
    t = y + _LANCZOS_G + 0.5
    half_power = t ** (0.5 * (y + 0.5))
    return math.sqrt(2.0 * math.pi) * half_power * (half_power * math.exp(-t)) * _lanczos_sum(y)


def log_abs_gamma(x: float) -> tuple[float, float]:
    """Return ``(ln|Gamma(x)|, sign(Gamma(x)))`` for any non-pole real ``x``."""
    x = float(x)
    if is_pole(x):
        raise PoleError(f"gamma has a pole at x={x!r}")
    if x < 0.5:
        s = _sinpi(x)
        lg, sg = log_abs_gamma(1.0 - x)
        return math.log(math.pi) - math.log(abs(s)) - lg, math.copysign(1.0, s) * sg
    if x < 12.0:
        return math.log(gamma(x)), 1.0
    y = x - 1.0
    t = y + _LANCZOS_G + 0.5
    return _LOG_SQRT_2PI + (y + 0.5) * math.log(t) - t + math.log(_lanczos_sum(y)), 1.0


def log_gamma(x: float) -> float:
    """Natural log of Gamma for ``x > 0``."""
    x = float(x)
    if not x > 0:
        raise DomainError(f"log_gamma needs x > 0, got {x!r}")
    if x == 1.0 or x == 2.0:
        return 0.0
    return log_abs_gamma(x)[0]


def rgamma(x: float) -> float:
    """Reciprocal gamma, an entire function (zero at the poles of Gamma)."""
    if is_pole(x):
        return 0.0
    lg, sg = log_abs_gamma(x)
    return sg * math.exp(-lg)


def gamma_ratio(num, den) -> float:
    """``prod(Gamma(num)) / prod(Gamma(den))`` evaluated in log space.

    A pole in ``den`` contributes an exact zero; a pole in ``num`` raises.
    """
    for x in den:
        if is_pole(x):
            for y in num:
                if is_pole(y):
                    raise PoleError("indeterminate gamma ratio (poles above and below)")
            return 0.0
    log_mag = 0.0
    sign = 1.0
    for x in num:
        lg, sg = log_abs_gamma(x)
        log_mag += lg
        sign *= sg
    for x in den:
        lg, sg = log_abs_gamma(x)
        log_mag -= lg
        sign *= sg
    if log_mag > 709.0:
        raise OverflowError("gamma ratio exceeds the double range")
    return sign * math.exp(log_mag)


def pochhammer(lam: float, n: int) -> float:
    """Rising factorial ``lam (lam + 1) ... (lam + n - 1)``; ``(lam)_0 = 1``.

    Overflow yields a signed infinity.
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"pochhammer needs a nonnegative integer n, got {n!r}")
    n = int(n)
    lam = float(lam)
    if n == 0:
        return 1.0
    # exact zero whenever one of the factors vanishes
    r = round(lam)
    if r <= 0 and lam == r and -r < n:
        return 0.0
    near_zero_factor = r <= 0 and -r < n and abs(lam - r) < 1e-6
    if n > 50 and not near_zero_factor:
        lg1, s1 = log_abs_gamma(lam + n)
        lg0, s0 = log_abs_gamma(lam)
        mag = lg1 - lg0
        if mag > 709.78:
            return math.copysign(math.inf, s1 * s0)
        return s1 * s0 * math.exp(mag)
    prod = 1.0
    for k in range(n):
        prod *= lam + k
    return prod


@dataclass(frozen=True)
class ConjugatePair:
    """The parameter pair ``re + i*im`` and ``re - i*im`` (stored with im >= 0).

    Counts as two hypergeometric parameters; every product over the pair is real.
    """

    re: float
    im: float

    def __post_init__(self):
        object.__setattr__(self, "re", float(self.re))
        object.__setattr__(self, "im", abs(float(self.im)))

    def as_complex(self) -> tuple[complex, complex]:
        return complex(self.re, self.im), complex(self.re, -self.im)

    def shifted(self, k: float) -> "ConjugatePair":
        return ConjugatePair(self.re + k, self.im)


def root_pair(center: float, disc: float, scale: float):
    """The two numbers ``center -/+ sqrt(disc) / scale``.

    Returns two floats when ``disc >= 0`` and a :class:`ConjugatePair`
    otherwise.
    """
    if disc >= 0:
        r = math.sqrt(disc) / scale
        return [center - r, center + r]
    return [ConjugatePair(center, math.sqrt(-disc) / scale)]


def pochhammer_ratio_step(pair: ConjugatePair, r: int) -> float:
    """Real product ``(s1 + r)(s2 + r) = (re + r)^2 + im^2`` for a conjugate pair."""
    shifted = pair.re + r
    if pair.im == 0.0 and abs(shifted) < POLE_TOL:
        raise PoleError(f"pair {pair!r} hits zero at step r={r}")
    return shifted * shifted + pair.im * pair.im


# Bernoulli-number coefficients for the asymptotic expansions.
_PSI_ASYM = (1 / 12, -1 / 120, 1 / 252, -1 / 240, 1 / 132, -691 / 32760, 1 / 12)
_TRIGAMMA_ASYM = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6)
_SHIFT_TO = 10.0


def _cot_pi(x: float) -> float:
    # reduce first so sin/cos keep full relative accuracy near integers
    r = x - round(x)
    return math.cos(math.pi * r) / math.sin(math.pi * r)


def digamma(x: float) -> float:
    """Psi(x) = d/dx ln Gamma(x).

    Recurrence shift to ``x >= 10`` followed by the asymptotic series;
    reflection for negative arguments.
    """
    x = float(x)
    if is_pole(x):
        raise PoleError(f"digamma has a pole at x={x!r}")
    if x <= 0.0:
        return digamma(1.0 - x) - math.pi * _cot_pi(x)
    acc = 0.0
    while x < _SHIFT_TO:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for c in _PSI_ASYM:
        series += c * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x - series


def trigamma(x: float) -> float:
    """Psi'(x) = sum_{k>=0} 1/(x+k)^2.

    Direct sum up to ``x >= 10`` and an Euler-Maclaurin tail; reflection for
    negative arguments.
    """
    x = float(x)
    if is_pole(x):
        raise PoleError(f"trigamma has a pole at x={x!r}")
    if x <= 0.0:
        s = _sinpi(x)
        return math.pi**2 / (s * s) - trigamma(1.0 - x)
    acc = 0.0
    while x < _SHIFT_TO:
        acc += 1.0 / (x * x)
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    series = 0.0
    power = inv2 * inv
    for c in _TRIGAMMA_ASYM:
        series += c * power
        power *= inv2
    return acc + inv + 0.5 * inv2 + series


def lowercase_beta(x: float) -> float:
    """beta(x) = sum_k (-1)^k/(k+x) = [Psi((1+x)/2) - Psi(x/2)] / 2."""
    x = float(x)
    if is_pole(x):
        raise PoleError(f"lowercase beta has a pole at x={x!r}")
    return 0.5 * (digamma(0.5 * (1.0 + x)) - digamma(0.5 * x))


def lowercase_beta_derivative(x: float, h: float = 1e-5) -> float:
    """d/dx beta(x) by central differences with one Richardson step."""
    d1 = (lowercase_beta(x + h) - lowercase_beta(x - h)) / (2 * h)
    d2 = (lowercase_beta(x + 2 * h) - lowercase_beta(x - 2 * h)) / (4 * h)
    return (4.0 * d1 - d2) / 3.0


def incomplete_beta(z: float, alpha: float, beta_p: float, tol: float = 1e-12) -> float:
    """B_z(alpha, beta) = integral_0^z t^(alpha-1) (1-t)^(beta-1) dt.

    Endpoint singularities are removed by the substitutions ``t = u^(1/alpha)``
    near 0 and ``1 - t = w^(1/beta)`` near 1.
    """
    z, alpha, beta_p = float(z), float(alpha), float(beta_p)
    if not 0.0 < z <= 1.0:
        raise DomainError(f"incomplete_beta needs 0 < z <= 1, got z={z!r}")
    if not alpha > 0:
        raise DomainError(f"incomplete_beta needs alpha > 0, got {alpha!r}")
    if z == 1.0 and not beta_p > 0:
        raise DomainError(f"B_1 needs beta > 0, got {beta_p!r}")
    split = min(z, 0.5)

    def left(u):
        # t = u^(1/alpha), dt = t^(1-alpha) du / alpha
        t = u ** (1.0 / alpha)
        return np.power(1.0 - t, beta_p - 1.0) / alpha

    total, _, _ = adaptive_gk(left, 0.0, split**alpha, tol=tol, rtol=tol)
    if z > 0.5:
        if beta_p > 0:
            def right(w):
                s = w ** (1.0 / beta_p)
                return np.power(1.0 - s, alpha - 1.0) / beta_p

            lo = (1.0 - z) ** beta_p
            hi = 0.5**beta_p
            part, _, _ = adaptive_gk(right, lo, hi, tol=tol, rtol=tol)
        else:
            def right(t):
                return np.power(t, alpha - 1.0) * np.power(1.0 - t, beta_p - 1.0)

            part, _, _ = adaptive_gk(right, 0.5, z, tol=tol, rtol=tol)
        total += part
    return total
