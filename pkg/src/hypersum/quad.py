"""Semi-infinite integrals of hyperbolic quotients.

Families (``f`` over ``[0, inf)``)::

    SinhSinhOverCoshV   sinh(ax) sinh(bx) / cosh(cx)**v
    SinhSinhOverSinhV   sinh(ax) sinh(bx) / sinh(cx)**v
    SinhCoshOverCoshV   sinh(ax) cosh(bx) / cosh(cx)**v
    SinhCoshOverSinhV   sinh(ax) cosh(bx) / sinh(cx)**v
    CoshCoshOverCoshV   cosh(ax) cosh(bx) / cosh(cx)**v
    CoshCoshOverSinhV   cosh(ax) cosh(bx) / sinh(cx)**v
    CosOverCoshPi       cos(2ax) / cosh(pi x)

Each integral is available three ways: adaptive quadrature
(:func:`integrate`), an elementary or Gamma-function closed form
(:func:`closed_form`) and a prefactor times a hypergeometric series at
z = +-1 (:func:`series_form`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DecayError, DomainError, SingularityError
from .gk import adaptive_gk
from .hyperseries import HypergeometricSpec, eval_series
from .specfun import ConjugatePair, digamma, gamma_ratio, lowercase_beta, root_pair

FAMILIES = (
    "SinhSinhOverCoshV",
    "SinhSinhOverSinhV",
    "SinhCoshOverCoshV",
    "SinhCoshOverSinhV",
    "CoshCoshOverCoshV",
    "CoshCoshOverSinhV",
    "CosOverCoshPi",
)

_LN2 = math.log(2.0)

# numerator kinds and denominator kind per family
_SHAPES = {
    "SinhSinhOverCoshV": ("sinh", "sinh", "cosh"),
    "SinhSinhOverSinhV": ("sinh", "sinh", "sinh"),
    "SinhCoshOverCoshV": ("sinh", "cosh", "cosh"),
    "SinhCoshOverSinhV": ("sinh", "cosh", "sinh"),
    "CoshCoshOverCoshV": ("cosh", "cosh", "cosh"),
    "CoshCoshOverSinhV": ("cosh", "cosh", "sinh"),
}


@dataclass(frozen=True)
class IntegralSpec:
    """Integrand family and its real parameters.

    ``CosOverCoshPi`` reads only ``a``.
    """

    family: str
    a: float
    b: float = 0.0
    c: float = 1.0
    v: float = 1.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown integrand family {self.family!r}")
        for name in ("a", "b", "c", "v"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def decay_rate(self) -> float:
        """Exponential decay rate ``vc - |a| - |b|`` of the integrand."""
        if self.family == "CosOverCoshPi":
            return math.pi
        return self.v * self.c - abs(self.a) - abs(self.b)

    @property
    def origin_exponent(self) -> float:
        """``e`` with integrand ~ const * x**e as x -> 0 (sinh denominators)."""
        if self.family == "CosOverCoshPi" or _SHAPES[self.family][2] == "cosh":
            return 0.0
        kinds = _SHAPES[self.family]
        n_sinh = sum(1 for k, p in zip(kinds[:2], (self.a, self.b)) if k == "sinh")
        return n_sinh - self.v

    def vanishes(self) -> bool:
        if self.family == "CosOverCoshPi":
            return False
        kinds = _SHAPES[self.family]
        return any(k == "sinh" and p == 0.0 for k, p in zip(kinds[:2], (self.a, self.b)))


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    evaluations: int
    truncation_point: float


def validate(spec: IntegralSpec) -> None:
    """Raise unless the integral over (0, inf) converges."""
    if spec.family == "CosOverCoshPi":
        return
    if not spec.c > 0:
        raise DecayError(f"need c > 0, got c={spec.c}")
    if not spec.decay_rate > 0:
        raise DecayError(
            f"integrand does not decay: vc - |a| - |b| = {spec.decay_rate:.6g} <= 0"
        )
    if not spec.vanishes() and spec.origin_exponent <= -1.0:
        raise SingularityError(
            f"{spec.family} behaves like x^{spec.origin_exponent:g} at 0 (not integrable)"
        )


def _log_abs_sinh(y):
    y = np.abs(y)
    return y + np.log(-np.expm1(-2.0 * y)) - _LN2


def _log_cosh(y):
    y = np.abs(y)
    return y + np.log1p(np.exp(-2.0 * y)) - _LN2


def _log_integrand(spec: IntegralSpec):
    """``(log|f|, sign)`` as a function of a positive abscissa array."""
    if spec.family == "CosOverCoshPi":
        def logf(x):
            cosv = np.cos(2.0 * spec.a * x)
            with np.errstate(divide="ignore"):
                return np.log(np.abs(cosv)) - _log_cosh(math.pi * x), np.sign(cosv)
        return logf

    k1, k2, kd = _SHAPES[spec.family]
    sign = 1.0
    for k, p in ((k1, spec.a), (k2, spec.b)):
        if k == "sinh" and p < 0:
            sign = -sign
    log_num = {"sinh": _log_abs_sinh, "cosh": _log_cosh}
    log_den = log_num[kd]
    a, b, c, v = spec.a, spec.b, spec.c, spec.v

    def logf(x):
        with np.errstate(divide="ignore"):
            out = log_num[k1](a * x) + log_num[k2](b * x) - v * log_den(c * x)
        return out, sign

    return logf


def _as_function(logf, power=None):
    """Turn a log-form integrand into a plain one, optionally under x = u**power."""
    if power is None:
        def f(x):
            lf, s = logf(x)
            with np.errstate(invalid="ignore", over="ignore"):
                out = s * np.exp(lf)
            return np.where(np.isfinite(out), out, 0.0)
        return f

    log_m = math.log(power)

    def g(u):
        x = u**power
        lf, s = logf(x)
        with np.errstate(invalid="ignore", over="ignore", divide="ignore"):
            out = s * np.exp(lf + log_m + (power - 1.0) * np.log(u))
        return np.where(np.isfinite(out), out, 0.0)

    return g


def truncation_point(spec: IntegralSpec, tol: float) -> float:
    """X beyond which the neglected tail is below ``tol / 10``.

    Uses |sinh y|, cosh y <= e^|y| and cosh y >= e^y / 2; for sinh
    denominators sinh y >= (1 - e^{-2y}) e^y / 2 adds a correction factor.
    """
    delta = spec.decay_rate
    v = 1.0 if spec.family == "CosOverCoshPi" else spec.v
    c = math.pi if spec.family == "CosOverCoshPi" else spec.c
    sinh_den = spec.family != "CosOverCoshPi" and _SHAPES[spec.family][2] == "sinh"
    target = tol / 10.0
    x = math.log(2.0**v / (delta * target)) / delta
    if sinh_den:
        for _ in range(4):
            x = max(x, 1.0 / c)
            kappa = (1.0 - math.exp(-2.0 * c * x)) ** (-v)
            x = math.log(2.0**v * kappa / (delta * target)) / delta
    return max(x, 1.0 / c)


def integrate(spec: IntegralSpec, tol: float = 1e-10, truncation: float | None = None) -> QuadratureResult:
    """Adaptive Gauss-Kronrod quadrature of ``spec`` over (0, inf).

    The range is cut at :func:`truncation_point`. When the integrand blows
    up like x**e (-1 < e < 0) at the origin, the first panel is mapped by
    x = u**(1/(1+e)), which makes it bounded.
    """
    validate(spec)
    if spec.vanishes():
        return QuadratureResult(0.0, 0.0, 0, 0.0)
    big_x = truncation_point(spec, tol) if truncation is None else float(truncation)
    logf = _log_integrand(spec)
    c = math.pi if spec.family == "CosOverCoshPi" else spec.c
    split = min(big_x, 1.0 / c)
    e = spec.origin_exponent
    if e < 0:
        power = 1.0 / (1.0 + e)
        head, head_err, n1 = adaptive_gk(
            _as_function(logf, power), 0.0, split ** (1.0 / power), tol=0.3 * tol, rtol=1e-14
        )
    else:
        head, head_err, n1 = adaptive_gk(_as_function(logf), 0.0, split, tol=0.3 * tol, rtol=1e-14)
    body, body_err, n2 = adaptive_gk(_as_function(logf), split, big_x, tol=0.6 * tol, rtol=1e-14)
    tail_bound = tol / 10.0 if truncation is None else 0.0
    return QuadratureResult(head + body, head_err + body_err + tail_bound, n1 + n2, big_x)


# ---------------------------------------------------------------------------
# closed forms


def _near_int(x: float, tol: float = 1e-9) -> bool:
    return abs(x - round(x)) < tol


def _gamma_pair_products(spec):
    a, b, c, v = spec.a, spec.b, spec.c, spec.v
    vc = v * c
    plus = gamma_ratio([(vc + a + b) / (2 * c), (vc - a - b) / (2 * c)], [v])
    minus = gamma_ratio([(vc + a - b) / (2 * c), (vc - a + b) / (2 * c)], [v])
    return plus, minus, 2.0 ** (v - 3.0) / c


def two_f1_minus_one(a: float, b: float, method: str = "auto", tol: float = 1e-12) -> float:
    """2F1(a, b; 1 + b; -1), by series or via b * int_0^1 t^(b-1) (1+t)^(-a) dt.

    ``auto`` uses the series where it converges (a < 2) and the integral
    otherwise.
    """
    if method == "auto":
        method = "series" if a < 2.0 else "integral"
    if method == "series":
        return eval_series(HypergeometricSpec((a, b), (1.0 + b,), -1.0), tol).value
    if method != "integral":
        raise ValueError(f"unknown method {method!r}")
    if not b > 0:
        raise DomainError(f"integral representation needs b > 0, got {b!r}")
    # t = u^(1/b) absorbs the t^(b-1) factor
    val, _, _ = adaptive_gk(lambda u: (1.0 + u ** (1.0 / b)) ** (-a), 0.0, 1.0, tol=tol, rtol=tol)
    return val


def _ss_sinh_sinh_cosh(spec):
    plus, minus, pre = _gamma_pair_products(spec)
    return pre * (plus - minus)


def _sinh_sinh_sinh_v1(spec):
    # limit of the cosine-weighted form at v = 1: both Gamma-cosine
    # products equal pi there, and L'Hopital turns their v-derivatives
    # into digamma values
    a, b, c = spec.a, spec.b, spec.c
    x, y = (a + b) / (2 * c), (a - b) / (2 * c)
    return -(digamma(0.5 + x) + digamma(0.5 - x) - digamma(0.5 + y) - digamma(0.5 - y)) / (4 * c)


def _ss_sinh_sinh_sinh(spec):
    if _near_int((spec.v - 1.0) / 2.0):
        # v = 1 is a removable 0/0 point; larger odd v are not integrable
        return _sinh_sinh_sinh_v1(spec)
    cv = math.cos(spec.v * math.pi / 2)
    plus, minus, pre = _gamma_pair_products(spec)
    a, b, c = spec.a, spec.b, spec.c
    return pre * (plus * math.cos((a + b) * math.pi / (2 * c)) - minus * math.cos((a - b) * math.pi / (2 * c))) / cv


def _ss_sinh_cosh_sinh(spec):
    if _near_int(spec.v / 2.0):
        raise DomainError("sin(v pi / 2) = 0 in the closed form")
    sv = math.sin(spec.v * math.pi / 2)
    plus, minus, pre = _gamma_pair_products(spec)
    a, b, c = spec.a, spec.b, spec.c
    return pre * (plus * math.sin((a + b) * math.pi / (2 * c)) + minus * math.sin((a - b) * math.pi / (2 * c))) / sv


def _ss_cosh_cosh_cosh(spec):
    plus, minus, pre = _gamma_pair_products(spec)
    return pre * (plus + minus)


def _ss_cosh_cosh_sinh(spec):
    if _near_int((spec.v - 1.0) / 2.0):
        raise DomainError("cos(v pi / 2) = 0 in the closed form")
    cv = math.cos(spec.v * math.pi / 2)
    plus, minus, pre = _gamma_pair_products(spec)
    a, b, c = spec.a, spec.b, spec.c
    return pre * (plus * math.cos((a + b) * math.pi / (2 * c)) + minus * math.cos((a - b) * math.pi / (2 * c))) / cv


def _two_f1_combination(spec):
    a, b, c, v = spec.a, spec.b, spec.c, spec.v
    vc = v * c
    total = 0.0
    for s, m in ((1.0, vc - a - b), (-1.0, vc + a + b), (1.0, vc - a + b), (-1.0, vc + a - b)):
        total += s * two_f1_minus_one(v, m / (2 * c)) / m
    return 2.0 ** (v - 2.0) * total


def _require_v(spec, value):
    if abs(spec.v - value) > 1e-12:
        raise DomainError(f"this closed form needs v = {value:g}, got v = {spec.v!r}")


def _trig_den(spec):
    a, b, c = spec.a, spec.b, spec.c
    den = math.cos(b * math.pi / c) + math.cos(a * math.pi / c)
    if abs(den) < 1e-12:
        raise DomainError("cos(b pi / c) + cos(a pi / c) vanishes")
    return den


def _v1_sinh_sinh_cosh(spec):
    _require_v(spec, 1.0)
    a, b, c = spec.a, spec.b, spec.c
    return (math.pi / c) * math.sin(a * math.pi / (2 * c)) * math.sin(b * math.pi / (2 * c)) / _trig_den(spec)


def _v1_sinh_cosh_cosh(spec):
    _require_v(spec, 1.0)
    a, b, c = spec.a, spec.b, spec.c
    trig = (math.pi / c) * math.cos(a * math.pi / (2 * c)) * math.cos(b * math.pi / (2 * c)) / _trig_den(spec)
    betas = lowercase_beta((a + c + b) / (2 * c)) + lowercase_beta((a + c - b) / (2 * c))
    return trig - betas / (2 * c)


def _v1_sinh_cosh_sinh(spec):
    _require_v(spec, 1.0)
    a, c = spec.a, spec.c
    return (math.pi / (2 * c)) * math.sin(a * math.pi / c) / _trig_den(spec)


def _v1_cosh_cosh_cosh(spec):
    _require_v(spec, 1.0)
    a, b, c = spec.a, spec.b, spec.c
    return (math.pi / c) * math.cos(a * math.pi / (2 * c)) * math.cos(b * math.pi / (2 * c)) / _trig_den(spec)


def _v2_sec(spec):
    _require_v(spec, 2.0)
    if spec.b != spec.c:
        raise DomainError("this closed form needs b = c")
    a, b = spec.a, spec.b
    return a * math.pi / (2 * b * b) / math.cos(math.pi * a / (2 * b))


def _v2_tan(spec):
    _require_v(spec, 2.0)
    if spec.b != spec.c:
        raise DomainError("this closed form needs b = c")
    a, b = spec.a, spec.b
    return math.pi / (2 * b) * math.tan(math.pi * a / (2 * b))


def _v2_cot(spec):
    # int sinh^2(ax)/sinh^2(cx) dx = (1/c) * (1 - r pi cot(r pi)) / 2, r = a/c
    _require_v(spec, 2.0)
    if spec.a != spec.b:
        raise DomainError("this closed form needs a = b")
    r = spec.a / spec.c
    if r == 0.0:
        return 0.0
    if _near_int(r):
        raise DomainError("cot(a pi / c) is singular")
    return 0.5 * (1.0 - r * math.pi / math.tan(r * math.pi)) / spec.c


def _sech(spec):
    return 0.5 / math.cosh(spec.a)


CLOSED_FORMS = {
    "SinhSinhOverCoshV": {"gamma_difference": _ss_sinh_sinh_cosh, "trig_quotient_v1": _v1_sinh_sinh_cosh, "sec_v2": _v2_sec},
    "SinhSinhOverSinhV": {"gamma_difference_cos": _ss_sinh_sinh_sinh, "tan_v2": _v2_tan, "cot_v2": _v2_cot},
    "SinhCoshOverCoshV": {"two_f1_sum": _two_f1_combination, "trig_beta_v1": _v1_sinh_cosh_cosh},
    "SinhCoshOverSinhV": {"gamma_sum_sin": _ss_sinh_cosh_sinh, "trig_quotient_v1": _v1_sinh_cosh_sinh},
    "CoshCoshOverCoshV": {"gamma_sum": _ss_cosh_cosh_cosh, "trig_quotient_v1": _v1_cosh_cosh_cosh},
    "CoshCoshOverSinhV": {"gamma_sum_cos": _ss_cosh_cosh_sinh},
    "CosOverCoshPi": {"sech": _sech},
}


def closed_form(spec: IntegralSpec, form: str | None = None) -> float:
    """Closed-form value of the integral.

    ``form`` picks a named formula from ``CLOSED_FORMS[spec.family]``; the
    default is the first (general-v) one.
    """
    validate(spec)
    forms = CLOSED_FORMS[spec.family]
    if form is None:
        form = next(iter(forms))
    if form not in forms:
        raise DomainError(f"{spec.family} has no closed form named {form!r}")
    if spec.vanishes():
        return 0.0
    return forms[form](spec)


# ---------------------------------------------------------------------------
# series forms


def _sigmas(a, b, c, v):
    h = v / 2.0
    return [h - (a + b) / (2 * c), h + (a + b) / (2 * c), h - (a - b) / (2 * c), h + (a - b) / (2 * c)]


def _shift(params, k):
    return [p.shifted(k) if isinstance(p, ConjugatePair) else p + k for p in params]


def hyperbolic_series(numerators: tuple, a: float, b: float, c: float, v: float, z: float):
    """``(prefactor, pFq spec)`` for the numerator pair ``numerators`` over
    ``cosh(cx)**v`` (z = -1) or ``sinh(cx)**v`` (z = +1).

    ``numerators`` is one of ("sinh", "sinh"), ("sinh", "cosh"),
    ("cosh", "cosh"). No domain checks are made.
    """
    vc = v * c
    d = (vc - a - b) * (vc + a + b) * (vc - a + b) * (vc + a - b)
    sig = _sigmas(a, b, c, v)
    if numerators == ("sinh", "sinh"):
        prefactor = 2.0 ** (v + 1) * v * a * b * c / d
        num = [v, 1 + v / 2] + sig
        den = [v / 2] + _shift(sig, 1)
    elif numerators == ("sinh", "cosh"):
        prefactor = 2.0**v * (v * v * a * c * c - a**3 + a * b * b) / d
        pair = root_pair(v / 2, a * a - b * b, 2 * c)
        num = [v] + _shift(pair, 1) + sig
        den = pair + _shift(sig, 1)
    elif numerators == ("cosh", "cosh"):
        prefactor = 2.0**v * (v**3 * c**3 - a * a * vc - b * b * vc) / d
        lam = root_pair(v / 2, a * a + b * b, 2 * c)
        num = [v, 1 + v / 2] + _shift(lam, 1) + sig
        den = [v / 2] + lam + _shift(sig, 1)
    else:
        raise ValueError(f"unknown numerator kinds {numerators!r}")
    return prefactor, HypergeometricSpec(tuple(num), tuple(den), z)


def series_form(spec: IntegralSpec) -> tuple[float, HypergeometricSpec]:
    """``(prefactor, pFq spec)`` with integral = prefactor * pFq."""
    validate(spec)
    if spec.family == "CosOverCoshPi":
        # sec-type 4F3(-1) at the imaginary ratio 2ia / pi
        t = spec.a / math.pi
        prefactor = 2.0 * math.pi / (math.pi**2 + 4.0 * spec.a**2)
        num = (1.0, 1.5, ConjugatePair(0.5, t))
        den = (0.5, ConjugatePair(1.5, t))
        return prefactor, HypergeometricSpec(num, den, -1.0)
    kinds = _SHAPES[spec.family]
    z = -1.0 if kinds[2] == "cosh" else 1.0
    return hyperbolic_series(kinds[:2], spec.a, spec.b, spec.c, spec.v, z)


def series_value(spec: IntegralSpec, tol: float = 1e-12, max_terms: int = 20_000) -> float:
    """prefactor * pFq for ``spec``."""
    prefactor, hspec = series_form(spec)
    if prefactor == 0.0:
        return 0.0
    return prefactor * eval_series(hspec, tol, max_terms).value
