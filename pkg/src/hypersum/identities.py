"""Registry of hypergeometric summation identities and hyperbolic integrals.

Each :class:`Identity` pairs a left-hand recipe (normally a series summed
term by term) with an independently computed right-hand recipe (Gamma
functions, trigonometric ratios, digamma or the lowercase beta function).
Integral entries also carry a quadrature leg.

Domains are plain real inequalities. Every excluded hyperplane (denominator
parameters on the nonpositive integers, zeros of trigonometric denominators,
coincident parameters in difference quotients) is kept at distance
``MARGIN`` so that fixed tolerances stay meaningful.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable

from .errors import DomainError
from .hyperseries import Convergence, HypergeometricSpec, classify, eval_series
from .quad import IntegralSpec, closed_form, hyperbolic_series, integrate, series_form, two_f1_minus_one
from .specfun import (
    digamma,
    gamma_ratio,
    incomplete_beta,
    lowercase_beta,
    lowercase_beta_derivative,
    trigamma,
)

MARGIN = 0.02
DEFAULT_THRESHOLD = 1e-8
QUAD_THRESHOLD = 1e-6

PI = math.pi


@dataclass(frozen=True)
class ParamPoint:
    a: float | None = None
    b: float | None = None
    c: float | None = None
    d: float | None = None
    e: float | None = None
    v: float | None = None
    x: float | None = None
    z: float | None = None

    def as_dict(self) -> dict:
        return {k: val for k, val in asdict(self).items() if val is not None}


# A recipe maps (point, series tolerance) to (value, terms summed).
Recipe = Callable[[ParamPoint, float], tuple]


@dataclass(frozen=True)
class Identity:
    id: str
    lhs: Recipe
    rhs: Recipe
    domain: Callable[[ParamPoint], bool]
    provenance: str
    params: tuple
    tol: float = DEFAULT_THRESHOLD
    integral: Callable[[ParamPoint, float], float] | None = None
    lhs_spec: Callable[[ParamPoint], HypergeometricSpec] | None = None
    exclude_conditional: bool = False
    group: str = "classical"

    def omega(self, p: ParamPoint):
        """Convergence exponent of the left-hand series, when there is one."""
        if self.lhs_spec is None:
            return None
        return self.lhs_spec(p).omega

    def conditional_at(self, p: ParamPoint) -> bool:
        if self.lhs_spec is None:
            return False
        return classify(self.lhs_spec(p)).tag is Convergence.CONDITIONAL


@dataclass
class VerificationRecord:
    identity_id: str
    index: int
    point: dict
    lhs: float
    rhs: float
    integral: float | None
    abs_residual: float
    rel_residual: float
    integral_residual: float | None
    terms_used: int
    status: str
    message: str = ""


# ---------------------------------------------------------------------------
# domain helpers


def off_poles(*xs: float) -> bool:
    """None of ``xs`` lies within MARGIN of {0, -1, -2, ...}."""
    for x in xs:
        r = round(x)
        if r <= 0 and abs(x - r) < MARGIN:
            return False
    return True


def off_odd(*rs: float) -> bool:
    """None of ``rs`` lies within MARGIN of an odd integer."""
    for r in rs:
        h = (r - 1.0) / 2.0
        if 2.0 * abs(h - round(h)) < MARGIN:
            return False
    return True


def off_even(*rs: float) -> bool:
    """None of ``rs`` lies within MARGIN of an even integer."""
    for r in rs:
        h = r / 2.0
        if 2.0 * abs(h - round(h)) < MARGIN:
            return False
    return True


def apart(x: float, y: float) -> bool:
    return abs(x - y) >= MARGIN


def _pos(*xs: float) -> bool:
    return all(x > MARGIN for x in xs)


# ---------------------------------------------------------------------------
# evaluation helpers


def _series(spec: HypergeometricSpec, tol: float):
    r = eval_series(spec, tol)
    return r.value, r.terms_used


def _pfq(num, den, z):
    return HypergeometricSpec(tuple(num), tuple(den), z)


def _scaled(factor: float, spec_fn):
    """Recipe ``factor(p) * pFq(spec_fn(p))``."""
    def recipe(p, tol):
        value, terms = _series(spec_fn(p), tol)
        return factor(p) * value, terms
    return recipe


def _closed(fn):
    return lambda p, tol: (fn(p), 0)


def _from_series(spec_fn):
    return lambda p, tol: _series(spec_fn(p), tol)


def _four_products(a, b, c, v):
    vc = v * c
    return (vc - a - b) * (vc + a + b) * (vc - a + b) * (vc + a - b)


def _gamma_pairs(a, b, c, v):
    """Gamma(p+)Gamma(q+)/Gamma(v) and Gamma(p-)Gamma(q-)/Gamma(v)."""
    vc = v * c
    plus = gamma_ratio([(vc + a + b) / (2 * c), (vc - a - b) / (2 * c)], [v])
    minus = gamma_ratio([(vc + a - b) / (2 * c), (vc - a + b) / (2 * c)], [v])
    return plus, minus


def _sigma_guard(a, b, c, v):
    h = v / 2.0
    return off_poles(*(1 + h + s * a / (2 * c) + t * b / (2 * c) for s in (1, -1) for t in (1, -1)))


def _decays(a, b, c, v):
    return c > MARGIN and v * c - abs(a) - abs(b) > MARGIN


def _trig_quotient_den(a, b, c):
    # cos(c pi / b) + cos(a pi / b), with b the denominator scale
    return math.cos(c * PI / b) + math.cos(a * PI / b)


# ---------------------------------------------------------------------------
# classical results


def _dixon_spec(p):
    return _pfq([p.a, p.b, p.c], [1 + p.a - p.b, 1 + p.a - p.c], 1.0)


def _dixon_rhs(p):
    a, b, c = p.a, p.b, p.c
    return gamma_ratio(
        [1 + a - b, 1 + a - c, 1 + a / 2, 1 + a / 2 - b - c],
        [1 + a / 2 - b, 1 + a / 2 - c, 1 + a, 1 + a - b - c],
    )


def _dixon_domain(p):
    a, b, c = p.a, p.b, p.c
    return (
        a - 2 * b - 2 * c > -2 + MARGIN
        and off_poles(1 + a - b, 1 + a - c, 1 + a / 2, 1 + a / 2 - b - c)
    )


def _wp3_spec(z):
    return lambda p: _pfq([p.a, 1 + p.a / 2, p.b], [p.a / 2, 1 + p.a - p.b], z)


def _vanishing_domain(p):
    return p.b < -MARGIN and off_poles(p.a / 2, 1 + p.a - p.b)


def _kummer_rhs(p):
    a, b = p.a, p.b
    return gamma_ratio([1 + a - b, (1 + a) / 2], [(1 + a) / 2 - b, 1 + a])


def _kummer_domain(p):
    a, b = p.a, p.b
    return b < 0.5 - MARGIN and off_poles(a / 2, 1 + a - b, (1 + a) / 2, 1 + a)


def _split_spec(p):
    return _pfq([p.a, p.b, p.c], [1 + p.b, 1 + p.c], p.z)


def _split_rhs(p, tol):
    a, b, c, z = p.a, p.b, p.c, p.z
    f1, n1 = _series(_pfq([a, b], [1 + b], z), tol)
    f2, n2 = _series(_pfq([a, c], [1 + c], z), tol)
    return c / (c - b) * f1 - b / (c - b) * f2, n1 + n2


def _split_domain(p):
    ok = apart(p.b, p.c) and off_poles(1 + p.b, 1 + p.c)
    if p.z == -1.0:
        # the 2F1(-1) pieces need 1 - a > -1
        ok = ok and p.a < 2.0 - MARGIN
    elif p.z == 1.0:
        ok = ok and p.a < 1.0 - MARGIN
    return ok and abs(p.z) <= 1.0


def _gauss_combined_rhs(p):
    a, b, c = p.a, p.b, p.c
    g = gamma_ratio([b], [1 + b - a]) - gamma_ratio([c], [1 + c - a])
    return b * c / (c - b) * gamma_ratio([1 - a], []) * g


def _gauss_combined_domain(p):
    return p.a < 1 - MARGIN and apart(p.b, p.c) and off_poles(p.b, p.c, 1 + p.b, 1 + p.c)


def _wp4_spec(z):
    return lambda p: _pfq([p.a, 1 + p.a / 2, p.c, p.d], [p.a / 2, 1 + p.a - p.c, 1 + p.a - p.d], z)


def _wp4_neg_rhs(p):
    a, c, d = p.a, p.c, p.d
    return gamma_ratio([1 + a - c, 1 + a - d], [1 + a, 1 + a - c - d])


def _wp4_neg_domain(p):
    a, c, d = p.a, p.c, p.d
    return a - 2 * c - 2 * d > -2 + MARGIN and off_poles(a / 2, 1 + a - c, 1 + a - d, 1 + a)


def _wp4_pos_rhs(p):
    a, c, d = p.a, p.c, p.d
    h = (1 + a) / 2
    return gamma_ratio([1 + a - c, 1 + a - d, h, h - c - d], [1 + a, h - d, h - c, 1 + a - c - d])


def _wp4_pos_domain(p):
    a, c, d = p.a, p.c, p.d
    h = (1 + a) / 2
    return 2 * c + 2 * d - a < 1 - MARGIN and off_poles(a / 2, 1 + a - c, 1 + a - d, h, h - c - d, 1 + a)


def _wp5_spec(p):
    a, c, d, e = p.a, p.c, p.d, p.e
    return _pfq([a, 1 + a / 2, c, d, e], [a / 2, 1 + a - c, 1 + a - d, 1 + a - e], 1.0)


def _wp5_rhs(p):
    a, c, d, e = p.a, p.c, p.d, p.e
    return gamma_ratio(
        [1 + a - c, 1 + a - d, 1 + a - e, 1 + a - c - d - e],
        [1 + a, 1 + a - d - e, 1 + a - c - e, 1 + a - c - d],
    )


def _wp5_domain(p):
    a, c, d, e = p.a, p.c, p.d, p.e
    return a - c - d - e > -1 + MARGIN and off_poles(
        a / 2, 1 + a - c, 1 + a - d, 1 + a - e, 1 + a - c - d - e, 1 + a
    )


def _harmonic_spec(z):
    return lambda p: _pfq([1.0, p.a, p.b], [1 + p.a, 1 + p.b], z)


def _diagonal_spec(z):
    return lambda p: _pfq([1.0, p.x, p.x], [1 + p.x, 1 + p.x], z)


def _positive_pair_domain(p):
    return _pos(p.a, p.b) and apart(p.a, p.b)


def _tan_spec(p):
    t = p.z / PI
    return _pfq([1.0, 0.5 + t, 0.5 - t], [1.5 + t, 1.5 - t], 1.0)


def _sec_spec(p):
    t = p.z / PI
    return _pfq([1.0, 1.5, 0.5 + t, 0.5 - t], [0.5, 1.5 + t, 1.5 - t], -1.0)


def _sec_squared_lhs(p, tol):
    t = p.z / PI
    lo, n1 = _series(_pfq([1.0, 0.5 - t, 0.5 - t], [1.5 - t, 1.5 - t], 1.0), tol)
    hi, n2 = _series(_pfq([1.0, 0.5 + t, 0.5 + t], [1.5 + t, 1.5 + t], 1.0), tol)
    return 4 / (2 * p.z - PI) ** 2 * lo + 4 / (2 * p.z + PI) ** 2 * hi, n1 + n2


def _trig_domain(p):
    return off_odd(2 * p.z / PI)


def _incomplete_beta_rhs(p):
    return p.b * p.z ** (-p.b) * incomplete_beta(p.z, p.b, 1 - p.a)


def _incomplete_beta_domain(p):
    if not (0 < p.z <= 1 and p.b > MARGIN):
        return False
    return p.z < 1 or p.a < 1 - MARGIN


def _classical() -> list:
    return [
        Identity(
            "dixon_3f2", _from_series(_dixon_spec), _closed(_dixon_rhs), _dixon_domain,
            "Dixon's well-poised 3F2 sum at unit argument", ("a", "b", "c"), lhs_spec=_dixon_spec,
        ),
        Identity(
            "vanishing_3f2", _from_series(_wp3_spec(1.0)), _closed(lambda p: 0.0), _vanishing_domain,
            "Dixon's sum with c = 1 + a/2: the 3F2(1) vanishes", ("a", "b"), lhs_spec=_wp3_spec(1.0),
        ),
        Identity(
            "kummer_type_3f2_neg1", _from_series(_wp3_spec(-1.0)), _closed(_kummer_rhs), _kummer_domain,
            "well-poised 3F2 at z = -1 (4F3(-1) sum with 2d = 1 + a, c = b)", ("a", "b"),
            lhs_spec=_wp3_spec(-1.0),
        ),
        Identity(
            "split_3f2_two_2f1", _from_series(_split_spec), _split_rhs, _split_domain,
            "3F2(a, b, c; 1+b, 1+c; z) as a weighted difference of two 2F1", ("a", "b", "c", "z"),
            lhs_spec=_split_spec,
        ),
        Identity(
            "gauss_combined_3f2_1", _from_series(lambda p: _split_spec(ParamPoint(p.a, p.b, p.c, z=1.0))),
            _closed(_gauss_combined_rhs), _gauss_combined_domain,
            "3F2(a, b, c; 1+b, 1+c; 1) through Gauss's 2F1(1) sum", ("a", "b", "c"),
            lhs_spec=lambda p: _split_spec(ParamPoint(p.a, p.b, p.c, z=1.0)),
        ),
        Identity(
            "classical_4f3_neg1", _from_series(_wp4_spec(-1.0)), _closed(_wp4_neg_rhs), _wp4_neg_domain,
            "very-well-poised 4F3 sum at z = -1", ("a", "c", "d"), lhs_spec=_wp4_spec(-1.0),
        ),
        Identity(
            "classical_4f3_pos1", _from_series(_wp4_spec(1.0)), _closed(_wp4_pos_rhs), _wp4_pos_domain,
            "very-well-poised 4F3 sum at z = 1 (5F4 sum with e = (1+a)/2)", ("a", "c", "d"),
            lhs_spec=_wp4_spec(1.0),
        ),
        Identity(
            "classical_5f4_pos1", _from_series(_wp5_spec), _closed(_wp5_rhs), _wp5_domain,
            "very-well-poised 5F4 sum at z = 1", ("a", "c", "d", "e"), lhs_spec=_wp5_spec,
        ),
        Identity(
            "trigamma_3f2", _from_series(_diagonal_spec(1.0)), _closed(lambda p: p.x**2 * trigamma(p.x)),
            lambda p: _pos(p.x), "3F2(1, x, x; 1+x, 1+x; 1) = x^2 trigamma(x)", ("x",),
            lhs_spec=_diagonal_spec(1.0),
        ),
        Identity(
            "digamma_diff_3f2", _from_series(_harmonic_spec(1.0)),
            _closed(lambda p: p.a * p.b / (p.b - p.a) * (digamma(p.b) - digamma(p.a))),
            _positive_pair_domain, "3F2(1, a, b; 1+a, 1+b; 1) as a digamma difference", ("a", "b"),
            lhs_spec=_harmonic_spec(1.0),
        ),
        Identity(
            "beta_diff_3f2_neg1", _from_series(_harmonic_spec(-1.0)),
            _closed(lambda p: p.a * p.b / (p.b - p.a) * (lowercase_beta(p.a) - lowercase_beta(p.b))),
            _positive_pair_domain, "3F2(1, a, b; 1+a, 1+b; -1) as a lowercase-beta difference", ("a", "b"),
            lhs_spec=_harmonic_spec(-1.0),
        ),
        Identity(
            "beta_derivative_3f2_neg1", _from_series(_diagonal_spec(-1.0)),
            _closed(lambda p: -p.x**2 * lowercase_beta_derivative(p.x)),
            lambda p: p.x > 0.05, "3F2(1, x, x; 1+x, 1+x; -1) = -x^2 beta'(x)", ("x",),
            lhs_spec=_diagonal_spec(-1.0),
        ),
        Identity(
            "tan_form", _scaled(lambda p: 8 * p.z / (PI**2 - 4 * p.z**2), _tan_spec),
            _closed(lambda p: math.tan(p.z)), _trig_domain, "tan(z) as a 3F2(1)", ("z",), lhs_spec=_tan_spec,
        ),
        Identity(
            "sec_form", _scaled(lambda p: 4 * PI / (PI**2 - 4 * p.z**2), _sec_spec),
            _closed(lambda p: 1 / math.cos(p.z)), _trig_domain, "sec(z) as a 4F3(-1)", ("z",),
            lhs_spec=_sec_spec,
        ),
        Identity(
            "sec_squared_form", _sec_squared_lhs, _closed(lambda p: 1 / math.cos(p.z) ** 2), _trig_domain,
            "sec^2(z) as a sum of two 3F2(1)", ("z",),
        ),
        Identity(
            "incomplete_beta_2f1", _from_series(lambda p: _pfq([p.a, p.b], [1 + p.b], p.z)),
            _closed(_incomplete_beta_rhs), _incomplete_beta_domain,
            "2F1(a, b; 1+b; z) = b z^-b B_z(b, 1-a)", ("a", "b", "z"),
            lhs_spec=lambda p: _pfq([p.a, p.b], [1 + p.b], p.z),
        ),
    ]


# ---------------------------------------------------------------------------
# summation theorems for the well-poised 6F5, 7F6, 8F7 and 3F2 series


def _hyp(kinds, z, swap=False, unit_v=False):
    """LHS spec builder; ``swap`` reads (a, c) as numerators and b as scale."""
    def build(p):
        if swap:
            a, b, c, v = p.a, p.c, p.b, 1.0
        else:
            a, b, c, v = p.a, p.b, p.c, (1.0 if unit_v else p.v)
        return hyperbolic_series(kinds, a, b, c, v, z)[1]
    return build


def _general_domain(v_max, trig=None, conj=False, lam=False):
    """Condition line shared by the (a, b, c, v) theorems."""
    def domain(p):
        a, b, c, v = p.a, p.b, p.c, p.v
        if not (v < v_max - MARGIN and v > MARGIN and _decays(a, b, c, v)):
            return False
        if not (_sigma_guard(a, b, c, v) and _pos(abs(a)) and apart(abs(a), abs(b))):
            return False
        if trig == "cos" and not off_odd(v):
            return False
        if trig == "sin" and not off_even(v):
            return False
        if lam:
            r = math.sqrt(a * a + b * b) / (2 * c)
            if not off_poles(v / 2 - r, v / 2 + r, v / 2):
                return False
        if conj and a * a >= b * b:
            r = math.sqrt(a * a - b * b) / (2 * c)
            if not off_poles(v / 2 - r, v / 2 + r):
                return False
        return True
    return domain


def _thm1_rhs(p):
    a, b, c, v = p.a, p.b, p.c, p.v
    plus, minus = _gamma_pairs(a, b, c, v)
    return _four_products(a, b, c, v) / (16 * v * a * b * c * c) * (plus - minus)


def _thm2_rhs(p):
    a, b, c, v = p.a, p.b, p.c, p.v
    plus, minus = _gamma_pairs(a, b, c, v)
    bracket = plus * math.cos((a + b) * PI / (2 * c)) - minus * math.cos((a - b) * PI / (2 * c))
    return _four_products(a, b, c, v) / (16 * v * a * b * c * c) * bracket / math.cos(v * PI / 2)


def _thm4_rhs(p):
    # overall constant 8, fixed by matching the series sum
    a, b, c, v = p.a, p.b, p.c, p.v
    plus, minus = _gamma_pairs(a, b, c, v)
    bracket = plus * math.sin((a + b) * PI / (2 * c)) + minus * math.sin((a - b) * PI / (2 * c))
    den = 8 * (v * v * a * c**3 - a**3 * c + a * b * b * c)
    return _four_products(a, b, c, v) / den * bracket / math.sin(v * PI / 2)


def _thm7_rhs(p):
    a, b, c, v = p.a, p.b, p.c, p.v
    plus, minus = _gamma_pairs(a, b, c, v)
    den = 8 * (v**3 * c**4 - a * a * v * c * c - b * b * v * c * c)
    return _four_products(a, b, c, v) / den * (plus + minus)


def _thm8_rhs(p):
    a, b, c, v = p.a, p.b, p.c, p.v
    plus, minus = _gamma_pairs(a, b, c, v)
    bracket = plus * math.cos((a + b) * PI / (2 * c)) + minus * math.cos((a - b) * PI / (2 * c))
    den = 8 * (v**3 * c**4 - a * a * v * c * c - b * b * v * c * c)
    return _four_products(a, b, c, v) / den * bracket / math.cos(v * PI / 2)


def _unit_products(a, b, c):
    # (b-a-c)(b+a+c)(b-a+c)(b+a-c), b the denominator scale
    return _four_products(a, c, b, 1.0)


def _thm3_rhs(p):
    a, b, c = p.a, p.b, p.c
    trig = math.sin(a * PI / (2 * b)) * math.sin(c * PI / (2 * b)) / _trig_quotient_den(a, b, c)
    return PI * _unit_products(a, b, c) / (4 * a * c * b * b) * trig


def _thm5_rhs(p):
    a, b, c = p.a, p.b, p.c
    trig = math.sin(a * PI / b) / _trig_quotient_den(a, b, c)
    return PI * _unit_products(a, b, c) / (4 * (a * b**3 - a**3 * b + a * b * c * c)) * trig


def _thm6_rhs(p):
    a, b, c = p.a, p.b, p.c
    k = _unit_products(a, b, c) / (a * b**3 - a**3 * b + a * b * c * c)
    trig = math.cos(a * PI / (2 * b)) * math.cos(c * PI / (2 * b)) / _trig_quotient_den(a, b, c)
    betas = lowercase_beta((a + b + c) / (2 * b)) + lowercase_beta((a + b - c) / (2 * b))
    return PI * k / 2 * trig - k / 4 * betas


def _thm9_rhs(p):
    a, b, c = p.a, p.b, p.c
    trig = math.cos(a * PI / (2 * b)) * math.cos(c * PI / (2 * b)) / _trig_quotient_den(a, b, c)
    return PI * _unit_products(a, b, c) / (2 * (b**4 - a * a * b * b - c * c * b * b)) * trig


def _unit_domain(kind):
    """(a, b, c) theorems: b > 0 is the scale, a and c the numerator rates."""
    def domain(p):
        a, b, c = p.a, p.b, p.c
        if not (b > MARGIN and _decays(a, c, b, 1.0) and _pos(abs(a), abs(c))):
            return False
        if not (off_odd((a + c) / b, (a - c) / b) and _sigma_guard(a, c, b, 1.0)):
            return False
        if kind == "sinh_cosh":
            if a * a >= c * c:
                r = math.sqrt(a * a - c * c) / (2 * b)
                if not off_poles(0.5 - r, 0.5 + r):
                    return False
            if not apart(abs(a), abs(c)):
                return False
        if kind == "cosh_cosh":
            r = math.sqrt(a * a + c * c) / (2 * b)
            if not off_poles(0.5 - r, 0.5 + r):
                return False
            if abs(b * b - a * a - c * c) < MARGIN * b * b:
                return False
        return True
    return domain


def _thm10_spec(p):
    t = p.a / (2 * p.b)
    return _pfq([1.0, 0.5 - t, 0.5 + t], [1.5 - t, 1.5 + t], -1.0)


def _thm10_sec_beta(p):
    a, b = p.a, p.b
    return (b * b - a * a) / (2 * a * b) * (PI / 2 / math.cos(PI * a / (2 * b)) - lowercase_beta((a + b) / (2 * b)))


def _thm10_digamma(p):
    a, b = p.a, p.b
    psi = (
        digamma((3 * b - a) / (4 * b)) - digamma((b - a) / (4 * b))
        - digamma((3 * b + a) / (4 * b)) + digamma((b + a) / (4 * b))
    )
    return (b * b - a * a) / (8 * a * b) * psi


def _thm10_domain(p):
    a, b = p.a, p.b
    return b > MARGIN and b - abs(a) > MARGIN and _pos(abs(a)) and off_odd(a / b) and off_poles(1.5 - a / (2 * b), 1.5 + a / (2 * b))


def _theorems() -> list:
    ss, sc, cc = ("sinh", "sinh"), ("sinh", "cosh"), ("cosh", "cosh")
    items = [
        ("thm1_6F5_neg1", _hyp(ss, -1.0), _thm1_rhs, _general_domain(4.0), True,
         "6F5(-1) well-poised sum in Gamma functions (sinh-sinh over cosh^v)"),
        ("thm2_6F5_pos1", _hyp(ss, 1.0), _thm2_rhs, _general_domain(3.0, trig="cos"), False,
         "6F5(1) well-poised sum with cosine weights (sinh-sinh over sinh^v)"),
        ("thm4_7F6_pos1", _hyp(sc, 1.0), _thm4_rhs, _general_domain(2.0, trig="sin", conj=True), False,
         "7F6(1) sum with sine weights (sinh-cosh over sinh^v)"),
        ("thm7_8F7_neg1", _hyp(cc, -1.0), _thm7_rhs, _general_domain(2.0, lam=True), True,
         "8F7(-1) sum as a Gamma-product sum (cosh-cosh over cosh^v)"),
        ("thm8_8F7_pos1", _hyp(cc, 1.0), _thm8_rhs, _general_domain(1.0, trig="cos", lam=True), False,
         "8F7(1) sum with cosine weights (cosh-cosh over sinh^v)"),
    ]
    out = []
    for tid, spec_fn, rhs, dom, excl, prov in items:
        out.append(Identity(
            tid, _from_series(spec_fn), _closed(rhs), dom, prov, ("a", "b", "c", "v"),
            lhs_spec=spec_fn, exclude_conditional=excl, group="theorem",
        ))
    unit_items = [
        ("thm3_6F5_neg1", _hyp(ss, -1.0, swap=True), _thm3_rhs, _unit_domain("sinh_sinh"),
         "6F5(-1) at v = 1 as a sine-product quotient"),
        ("thm5_7F6_pos1", _hyp(sc, 1.0, swap=True), _thm5_rhs, _unit_domain("sinh_cosh"),
         "7F6(1) at v = 1 as a sine quotient"),
        ("thm6_7F6_neg1", _hyp(sc, -1.0, swap=True), _thm6_rhs, _unit_domain("sinh_cosh"),
         "7F6(-1) at v = 1: cosine quotient minus two lowercase-beta terms"),
        ("thm9_8F7_neg1", _hyp(cc, -1.0, swap=True), _thm9_rhs, _unit_domain("cosh_cosh"),
         "8F7(-1) at v = 1 as a cosine-product quotient"),
    ]
    for tid, spec_fn, rhs, dom, prov in unit_items:
        out.append(Identity(
            tid, _from_series(spec_fn), _closed(rhs), dom, prov, ("a", "b", "c"),
            lhs_spec=spec_fn, group="theorem",
        ))
    out.append(Identity(
        "thm10_3F2_neg1_sec_beta", _from_series(_thm10_spec), _closed(_thm10_sec_beta), _thm10_domain,
        "3F2(-1) through sec and the lowercase beta function", ("a", "b"),
        lhs_spec=_thm10_spec, group="theorem",
    ))
    out.append(Identity(
        "thm10_3F2_neg1_digamma", _from_series(_thm10_spec), _closed(_thm10_digamma), _thm10_domain,
        "3F2(-1) through four digamma values", ("a", "b"),
        lhs_spec=_thm10_spec, group="theorem",
    ))
    return sorted(out, key=lambda i: i.id)


# ---------------------------------------------------------------------------
# reduction formulas


def _red1_lhs_spec(p):
    t = p.a / (2 * p.b)
    return _pfq([2.0, 2.0, 0.5 + t, 0.5 - t], [1.0, 2.5 + t, 2.5 - t], 1.0)


def _red1_rhs(p, tol):
    t = p.a / (2 * p.b)
    value, terms = _series(_pfq([1.0, 0.5 - t, 0.5 + t], [1.5 - t, 1.5 + t], 1.0), tol)
    return (9 * p.b**2 - p.a**2) / (8 * p.b**2) * value, terms


def _red1_domain(p):
    a, b = p.a, p.b
    return b > MARGIN and b - abs(a) > MARGIN and off_odd(a / b) and off_poles(1.5 - a / (2 * b), 1.5 + a / (2 * b))


def red2_parameters(p: ParamPoint):
    """The four ``(sign, scale, lower parameter)`` triples of the 2F1(-1) bracket."""
    a, b, c, v = p.a, p.b, p.c, p.v
    vc = v * c
    out = []
    for sign, m in ((1.0, vc - a - b), (-1.0, vc + a + b), (1.0, vc - a + b), (-1.0, vc + a - b)):
        out.append((sign, m, m / (2 * c)))
    return out


def _red2_prefactor(p):
    a, b, c, v = p.a, p.b, p.c, p.v
    return _four_products(a, b, c, v) / (4 * (v * v * a * c * c - a**3 + a * b * b))


def _red2_rhs(p, tol):
    total, terms = 0.0, 0
    for sign, m, lower in red2_parameters(p):
        value, n = _series(_pfq([p.v, lower], [1 + lower], -1.0), tol)
        total += sign * value / m
        terms += n
    return _red2_prefactor(p) * total, terms


def _red2_integral(p, tol):
    total = 0.0
    for sign, m, lower in red2_parameters(p):
        total += sign * two_f1_minus_one(p.v, lower, method="integral", tol=tol) / m
    return _red2_prefactor(p) * total


def _red2_domain(p):
    a, b, c, v = p.a, p.b, p.c, p.v
    if not (MARGIN < v < 2.0 - MARGIN and _decays(a, b, c, v) and _pos(abs(a))):
        return False
    if abs(v * v * c * c - a * a + b * b) < MARGIN:
        return False
    if not _sigma_guard(a, b, c, v):
        return False
    if a * a >= b * b:
        r = math.sqrt(a * a - b * b) / (2 * c)
        if not off_poles(v / 2 - r, v / 2 + r):
            return False
    return True


def _reductions() -> list:
    red2_spec = _hyp(("sinh", "cosh"), -1.0)
    return [
        Identity(
            "red1_4F3_pos1", _from_series(_red1_lhs_spec), _red1_rhs, _red1_domain,
            "4F3(1) reduced to a multiple of 3F2(1)", ("a", "b"),
            lhs_spec=_red1_lhs_spec, group="reduction",
        ),
        Identity(
            "red2_7F6_neg1", _from_series(red2_spec), _red2_rhs, _red2_domain,
            "7F6(-1) reduced to four 2F1(-1); integral leg uses the Euler integral of each 2F1",
            ("a", "b", "c", "v"), tol=1e-7, integral=_red2_integral, lhs_spec=red2_spec, group="reduction",
        ),
    ]


# ---------------------------------------------------------------------------
# hyperbolic integrals


def _family_spec(family):
    return lambda p: IntegralSpec(family, p.a, p.b, p.c, p.v)


def _quad_leg(spec_fn):
    return lambda p, tol: integrate(spec_fn(p), tol).value


def _family_series(spec_fn):
    def recipe(p, tol):
        prefactor, hspec = series_form(spec_fn(p))
        value, terms = _series(hspec, tol)
        return prefactor * value, terms
    return recipe


def _triangle_domain(family, v_max, trig=None):
    spec_fn = _family_spec(family)
    base = _general_domain(v_max, trig=trig, conj=family.startswith("SinhCosh"),
                           lam=family.startswith("CoshCosh"))

    def domain(p):
        if not base(p):
            return False
        s = spec_fn(p)
        return s.vanishes() or s.origin_exponent > -1 + MARGIN
    return domain


def _triangles() -> list:
    rows = [
        ("integral_sinh_sinh_over_cosh_pow", "SinhSinhOverCoshV", 4.0, None,
         "int sinh(ax) sinh(bx) / cosh^v(cx): 6F5(-1) vs Gamma difference"),
        ("integral_sinh_sinh_over_sinh_pow", "SinhSinhOverSinhV", 3.0, "cos",
         "int sinh(ax) sinh(bx) / sinh^v(cx): 6F5(1) vs cosine-weighted Gamma difference"),
        ("integral_sinh_cosh_over_cosh_pow", "SinhCoshOverCoshV", 3.0, None,
         "int sinh(ax) cosh(bx) / cosh^v(cx): 7F6(-1) vs four 2F1(-1)"),
        ("integral_sinh_cosh_over_sinh_pow", "SinhCoshOverSinhV", 2.0, "sin",
         "int sinh(ax) cosh(bx) / sinh^v(cx): 7F6(1) vs sine-weighted Gamma sum"),
        ("integral_cosh_cosh_over_cosh_pow", "CoshCoshOverCoshV", 2.0, None,
         "int cosh(ax) cosh(bx) / cosh^v(cx): 8F7(-1) vs Gamma sum"),
        ("integral_cosh_cosh_over_sinh_pow", "CoshCoshOverSinhV", 1.0, "cos",
         "int cosh(ax) cosh(bx) / sinh^v(cx): 8F7(1) vs cosine-weighted Gamma sum"),
    ]
    out = []
    for iid, family, v_max, trig, prov in rows:
        spec_fn = _family_spec(family)
        out.append(Identity(
            iid, _family_series(spec_fn), _closed(lambda p, f=spec_fn: closed_form(f(p))),
            _triangle_domain(family, v_max, trig), prov, ("a", "b", "c", "v"),
            integral=_quad_leg(spec_fn), lhs_spec=lambda p, f=spec_fn: series_form(f(p))[1],
            group="integral",
        ))
    return out


def _ratio_domain(p):
    # b is the scale, a the rate: b > |a| and a/b off the odd integers
    a, b = p.a, p.b
    return b > MARGIN and b - abs(a) > MARGIN and off_odd(a / b) and off_poles(1.5 - a / (2 * b), 1.5 + a / (2 * b))


def _special_integrals() -> list:
    out = []

    def add(iid, lhs_spec_fn, prefactor, rhs, domain, spec_fn, prov, params):
        out.append(Identity(
            iid, _scaled(prefactor, lhs_spec_fn), _closed(rhs), domain, prov, params,
            integral=_quad_leg(spec_fn), lhs_spec=lhs_spec_fn, group="integral",
        ))

    def half_ratio(p):
        return p.a / (2 * p.b)

    # sinh(ax) sinh(bx) / cosh^2(bx)
    add(
        "integral_sinh_tanh_sech_sec",
        lambda p: _pfq([2.0, 2.0, 0.5 + half_ratio(p), 0.5 - half_ratio(p)], [1.0, 2.5 + half_ratio(p), 2.5 - half_ratio(p)], -1.0),
        lambda p: 16 * p.a * p.b**2 / ((p.b**2 - p.a**2) * (9 * p.b**2 - p.a**2)),
        lambda p: p.a * PI / (2 * p.b**2) / math.cos(PI * p.a / (2 * p.b)),
        lambda p: _ratio_domain(p) and off_poles(2.5 - half_ratio(p), 2.5 + half_ratio(p)),
        lambda p: IntegralSpec("SinhSinhOverCoshV", p.a, p.b, p.b, 2.0),
        "int sinh(ax) sinh(bx) / cosh^2(bx) = (a pi / 2b^2) sec(pi a / 2b) via 4F3(-1)", ("a", "b"),
    )
    # sinh(ax) / sinh(bx), two series
    add(
        "integral_sinh_over_sinh_tan_4f3",
        lambda p: _pfq([2.0, 2.0, 0.5 + half_ratio(p), 0.5 - half_ratio(p)], [1.0, 2.5 + half_ratio(p), 2.5 - half_ratio(p)], 1.0),
        lambda p: 16 * p.a * p.b**2 / ((p.b**2 - p.a**2) * (9 * p.b**2 - p.a**2)),
        lambda p: PI / (2 * p.b) * math.tan(PI * p.a / (2 * p.b)),
        lambda p: _ratio_domain(p) and off_poles(2.5 - half_ratio(p), 2.5 + half_ratio(p)),
        lambda p: IntegralSpec("SinhSinhOverSinhV", p.a, p.b, p.b, 2.0),
        "int sinh(ax) / sinh(bx) = (pi / 2b) tan(pi a / 2b) via 4F3(1)", ("a", "b"),
    )
    add(
        "integral_sinh_over_sinh_tan_3f2",
        lambda p: _pfq([1.0, 0.5 - half_ratio(p), 0.5 + half_ratio(p)], [1.5 - half_ratio(p), 1.5 + half_ratio(p)], 1.0),
        lambda p: 2 * p.a / (p.b**2 - p.a**2),
        lambda p: PI / (2 * p.b) * math.tan(PI * p.a / (2 * p.b)),
        _ratio_domain,
        lambda p: IntegralSpec("SinhCoshOverSinhV", p.a, 0.0, p.b, 1.0),
        "int sinh(ax) / sinh(bx) = (pi / 2b) tan(pi a / 2b) via 3F2(1)", ("a", "b"),
    )
    # sinh^2(ax) / sinh^2(x)
    add(
        "integral_sinh_sq_over_sinh_sq_cot",
        lambda p: _pfq([1.0, 1 - p.a, 1 + p.a], [2 - p.a, 2 + p.a], 1.0),
        lambda p: p.a**2 / (1 - p.a**2),
        lambda p: 0.5 * (1 - p.a * PI / math.tan(p.a * PI)),
        lambda p: 1 - abs(p.a) > MARGIN and _pos(abs(p.a)),
        lambda p: IntegralSpec("SinhSinhOverSinhV", p.a, p.a, 1.0, 2.0),
        "int sinh^2(ax) / sinh^2(x) = (1 - a pi cot(a pi)) / 2", ("a",),
    )
    out.append(Identity(
        "integral_sinh_sq_over_sinh_sq_digamma",
        _scaled(lambda p: p.a**2 / (1 - p.a**2), lambda p: _pfq([1.0, 1 - p.a, 1 + p.a], [2 - p.a, 2 + p.a], 1.0)),
        _closed(lambda p: p.a / 2 * (digamma(1 + p.a) - digamma(1 - p.a))),
        lambda p: 1 - abs(p.a) > MARGIN and _pos(abs(p.a)),
        "int sinh^2(ax) / sinh^2(x) = (a/2) [digamma(1+a) - digamma(1-a)]", ("a",),
        integral=_quad_leg(lambda p: IntegralSpec("SinhSinhOverSinhV", p.a, p.a, 1.0, 2.0)),
        lhs_spec=lambda p: _pfq([1.0, 1 - p.a, 1 + p.a], [2 - p.a, 2 + p.a], 1.0), group="integral",
    ))

    # cosh(ax) sinh(bx) / cosh^2(bx) through a 5F4(-1)
    def fa001_spec(p):
        a, b = p.a, p.b
        r = math.sqrt(b * b - a * a) / (2 * b)
        t = half_ratio(p)
        return _pfq([2.0, 2 - r, 2 + r, 0.5 - t, 0.5 + t], [1 - r, 1 + r, 2.5 + t, 2.5 - t], -1.0)

    add(
        "integral_cosh_sinh_over_cosh_sq_5f4", fa001_spec,
        lambda p: (12 * p.b**3 + 4 * p.a**2 * p.b) / ((p.b**2 - p.a**2) * (9 * p.b**2 - p.a**2)),
        lambda p: closed_form(IntegralSpec("SinhCoshOverCoshV", p.b, p.a, p.b, 2.0)),
        lambda p: _ratio_domain(p) and off_poles(1 - math.sqrt(max(p.b**2 - p.a**2, 0.0)) / (2 * p.b)),
        lambda p: IntegralSpec("SinhCoshOverCoshV", p.b, p.a, p.b, 2.0),
        "int cosh(ax) sinh(bx) / cosh^2(bx) via 5F4(-1), against the four-2F1 form", ("a", "b"),
    )

    # single-factor integrals over cosh^v / sinh^v
    def single3(z):
        def build(p):
            h, t = p.v / 2, p.a / (2 * p.c)
            return _pfq([p.v, h - t, h + t], [1 + h - t, 1 + h + t], z)
        return build

    def single4(z):
        def build(p):
            h, t = p.v / 2, p.a / (2 * p.c)
            return _pfq([p.v, 1 + h, h - t, h + t], [h, 1 + h - t, 1 + h + t], z)
        return build

    def single_domain(v_max, trig=None):
        def domain(p):
            a, c, v = p.a, p.c, p.v
            if not (MARGIN < v < v_max - MARGIN and c > MARGIN and v * c - abs(a) > MARGIN):
                return False
            h, t = v / 2, a / (2 * c)
            if not off_poles(1 + h - t, 1 + h + t, h, h - t, h + t):
                return False
            if trig == "sin" and not off_even(v):
                return False
            if trig == "cos" and not off_odd(v):
                return False
            return True
        return domain

    def gamma_single(p):
        h, t = p.v / 2, p.a / (2 * p.c)
        return 2 ** (p.v - 2) / p.c * gamma_ratio([h + t, h - t], [p.v])

    def two_f1_pair(p):
        v, a, c = p.v, p.a, p.c
        lo, hi = (v * c - a) / (2 * c), (v * c + a) / (2 * c)
        return 2 ** (v - 1) * (two_f1_minus_one(v, lo) / (v * c - a) - two_f1_minus_one(v, hi) / (v * c + a))

    add(
        "integral_sinh_over_cosh_pow_2f1", single3(-1.0),
        lambda p: 2**p.v * p.a / ((p.v * p.c) ** 2 - p.a**2), two_f1_pair,
        lambda p: single_domain(3.0)(p) and _pos(abs(p.a)) and p.v < 2.0 - MARGIN,
        lambda p: IntegralSpec("SinhCoshOverCoshV", p.a, 0.0, p.c, p.v),
        "int sinh(ax) / cosh^v(cx): 3F2(-1) vs two 2F1(-1)", ("a", "c", "v"),
    )
    add(
        "integral_sinh_over_sinh_pow_gamma", single3(1.0),
        lambda p: 2**p.v * p.a / ((p.v * p.c) ** 2 - p.a**2),
        lambda p: gamma_single(p) * math.sin(p.a * PI / (2 * p.c)) / math.sin(p.v * PI / 2),
        lambda p: single_domain(2.0, "sin")(p) and _pos(abs(p.a)),
        lambda p: IntegralSpec("SinhCoshOverSinhV", p.a, 0.0, p.c, p.v),
        "int sinh(ax) / sinh^v(cx): 3F2(1) vs Gamma product with sine ratio", ("a", "c", "v"),
    )
    add(
        "integral_cosh_over_cosh_pow_gamma", single4(-1.0),
        lambda p: 2**p.v * p.v * p.c / ((p.v * p.c) ** 2 - p.a**2), gamma_single,
        single_domain(2.0),
        lambda p: IntegralSpec("CoshCoshOverCoshV", p.a, 0.0, p.c, p.v),
        "int cosh(ax) / cosh^v(cx): 4F3(-1) vs Gamma product", ("a", "c", "v"),
    )
    add(
        "integral_cosh_over_sinh_pow_gamma", single4(1.0),
        lambda p: 2**p.v * p.v * p.c / ((p.v * p.c) ** 2 - p.a**2),
        lambda p: gamma_single(p) * math.cos(p.a * PI / (2 * p.c)) / math.cos(p.v * PI / 2),
        single_domain(1.0, "cos"),
        lambda p: IntegralSpec("CoshCoshOverSinhV", p.a, 0.0, p.c, p.v),
        "int cosh(ax) / sinh^v(cx): 4F3(1) vs Gamma product with cosine ratio", ("a", "c", "v"),
    )

    # cosh(ax) / cosh(bx), sinh(ax) / cosh(bx)
    def sec_spec(p):
        t = half_ratio(p)
        return _pfq([1.0, 1.5, 0.5 - t, 0.5 + t], [0.5, 1.5 - t, 1.5 + t], -1.0)

    def beta_spec(p):
        t = half_ratio(p)
        return _pfq([1.0, 0.5 - t, 0.5 + t], [1.5 - t, 1.5 + t], -1.0)

    add(
        "integral_cosh_over_cosh_sec", sec_spec, lambda p: 2 * p.b / (p.b**2 - p.a**2),
        lambda p: PI / (2 * p.b) / math.cos(PI * p.a / (2 * p.b)), _ratio_domain,
        lambda p: IntegralSpec("CoshCoshOverCoshV", p.a, 0.0, p.b, 1.0),
        "int cosh(ax) / cosh(bx) = (pi / 2b) sec(pi a / 2b)", ("a", "b"),
    )
    add(
        "integral_sinh_over_cosh_sec_beta", beta_spec, lambda p: 2 * p.a / (p.b**2 - p.a**2),
        lambda p: PI / (2 * p.b) / math.cos(PI * p.a / (2 * p.b)) - lowercase_beta((p.a + p.b) / (2 * p.b)) / p.b,
        lambda p: _ratio_domain(p) and _pos(abs(p.a)),
        lambda p: IntegralSpec("SinhCoshOverCoshV", p.a, 0.0, p.b, 1.0),
        "int sinh(ax) / cosh(bx) = (pi / 2b) sec(pi a / 2b) - beta((a+b)/2b) / b", ("a", "b"),
    )
    add(
        "integral_sinh_over_cosh_digamma", beta_spec, lambda p: 2 * p.a / (p.b**2 - p.a**2),
        lambda p: PI / (2 * p.b) / math.cos(PI * p.a / (2 * p.b))
        - (digamma((p.a + 3 * p.b) / (4 * p.b)) - digamma((p.a + p.b) / (4 * p.b))) / (2 * p.b),
        lambda p: _ratio_domain(p) and _pos(abs(p.a)),
        lambda p: IntegralSpec("SinhCoshOverCoshV", p.a, 0.0, p.b, 1.0),
        "int sinh(ax) / cosh(bx) with the beta term written as a digamma difference", ("a", "b"),
    )

    def sech_spec(p):
        from .specfun import ConjugatePair

        t = p.a / PI
        return HypergeometricSpec((1.0, 1.5, ConjugatePair(0.5, t)), (0.5, ConjugatePair(1.5, t)), -1.0)

    add(
        "integral_cos_over_cosh_pi_sech", sech_spec,
        lambda p: 2 * PI / (PI**2 + 4 * p.a**2), lambda p: 0.5 / math.cosh(p.a),
        lambda p: True, lambda p: IntegralSpec("CosOverCoshPi", p.a),
        "int cos(2ax) / cosh(pi x) = sech(a) / 2 (Ramanujan)", ("a",),
    )

    # v = 1 product-formula closed forms, (a, c) rates over the scale b
    def unit_spec(kinds, z):
        return lambda p: hyperbolic_series(kinds, p.a, p.c, p.b, 1.0, z)[1]

    def unit_prefactor(kinds):
        return lambda p: hyperbolic_series(kinds, p.a, p.c, p.b, 1.0, 1.0)[0]

    rows = [
        ("integral_sinh_sinh_over_cosh_trig", ("sinh", "sinh"), -1.0, "SinhSinhOverCoshV", "sinh_sinh",
         "int sinh(ax) sinh(cx) / cosh(bx) as a sine-product quotient"),
        ("integral_sinh_cosh_over_cosh_trig_beta", ("sinh", "cosh"), -1.0, "SinhCoshOverCoshV", "sinh_cosh",
         "int sinh(ax) cosh(cx) / cosh(bx): cosine quotient minus lowercase-beta terms"),
        ("integral_sinh_cosh_over_sinh_trig", ("sinh", "cosh"), 1.0, "SinhCoshOverSinhV", "sinh_cosh",
         "int sinh(ax) cosh(cx) / sinh(bx) as a sine quotient"),
        ("integral_cosh_cosh_over_cosh_trig", ("cosh", "cosh"), -1.0, "CoshCoshOverCoshV", "cosh_cosh",
         "int cosh(ax) cosh(cx) / cosh(bx) as a cosine-product quotient"),
    ]
    form = {"SinhSinhOverCoshV": "trig_quotient_v1", "SinhCoshOverCoshV": "trig_beta_v1",
            "SinhCoshOverSinhV": "trig_quotient_v1", "CoshCoshOverCoshV": "trig_quotient_v1"}
    for iid, kinds, z, family, kind, prov in rows:
        spec_fn = (lambda f: lambda p: IntegralSpec(f, p.a, p.c, p.b, 1.0))(family)
        add(
            iid, unit_spec(kinds, z), unit_prefactor(kinds),
            (lambda f, s: lambda p: closed_form(s(p), form[f]))(family, spec_fn),
            _unit_domain(kind), spec_fn, prov, ("a", "b", "c"),
        )
    return out


def registry() -> list:
    """Every registered identity, ordered by id."""
    items = _classical() + _theorems() + _reductions() + _triangles() + _special_integrals()
    ids = [i.id for i in items]
    if len(set(ids)) != len(ids):
        raise RuntimeError("duplicate identity ids")
    return sorted(items, key=lambda i: i.id)


def get(identity_id: str) -> Identity:
    for ident in registry():
        if ident.id == identity_id:
            return ident
    raise KeyError(identity_id)


def check(
    identity: Identity,
    p: ParamPoint,
    series_tol: float = 1e-12,
    quad_tol: float | None = None,
    pass_threshold: float | None = None,
    quad_threshold: float = QUAD_THRESHOLD,
    index: int = 0,
) -> VerificationRecord:
    """Evaluate both sides of ``identity`` at ``p`` (and the quadrature leg
    when ``quad_tol`` is given and the identity has one).

    Raises DomainError off the domain; NonConvergedError propagates.
    """
    if not identity.domain(p):
        raise DomainError(f"{identity.id}: point {p.as_dict()} is outside the domain")
    lhs, n1 = identity.lhs(p, series_tol)
    rhs, n2 = identity.rhs(p, series_tol)
    abs_res = abs(lhs - rhs)
    rel_res = abs_res / (1.0 + abs(rhs))
    threshold = identity.tol if pass_threshold is None else max(pass_threshold, identity.tol)
    ok = rel_res <= threshold
    integral = integral_res = None
    if quad_tol is not None and identity.integral is not None:
        integral = identity.integral(p, quad_tol)
        integral_res = abs(integral - rhs)
        ok = ok and integral_res <= quad_threshold
    if not (math.isfinite(lhs) and math.isfinite(rhs)):
        ok = False
    return VerificationRecord(
        identity.id, index, p.as_dict(), lhs, rhs, integral, abs_res, rel_res, integral_res,
        n1 + n2, "pass" if ok else "fail",
    )
