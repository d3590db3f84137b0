"""Term-by-term evaluation of generalized hypergeometric series pFq(z).

Terms follow the multiplicative recurrence

    t[n+1] = t[n] * prod(a_i + n) / prod(b_j + n) * z / (n + 1),

with conjugate-pair parameters contributing the real factor
``(re + n)**2 + im**2``. On the unit circle the raw partial sums converge
slowly, so alternating series (z = -1) are finished with an Euler transform
of the tail and z = +1 series with Richardson extrapolation of the partial
sums in the known powers ``N**-(omega + k)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DivergentError, DomainError, NonConvergedError, NotAlternatingError
from .specfun import POLE_TOL, ConjugatePair, is_pole

DEFAULT_TOL = 1e-12
DEFAULT_MAX_TERMS = 20_000

_EPS = np.finfo(float).eps


class Convergence(str, Enum):
    ENTIRE = "EntireArgument"
    INSIDE_DISK = "InsideDisk"
    ABSOLUTE_ON_CIRCLE = "AbsolutelyConvergentOnCircle"
    CONDITIONAL = "ConditionallyConvergent"
    DIVERGENT = "Divergent"


@dataclass(frozen=True)
class ConvergenceClass:
    tag: Convergence
    omega: float


def _count(params) -> int:
    return sum(2 if isinstance(x, ConjugatePair) else 1 for x in params)


def _param_sum(params) -> float:
    return sum(2.0 * x.re if isinstance(x, ConjugatePair) else x for x in params)


def _coerce(x):
    if isinstance(x, ConjugatePair):
        return x
    if isinstance(x, complex):
        if x.imag == 0:
            return float(x.real)
        return ConjugatePair(x.real, x.imag)
    return float(x)


@dataclass(frozen=True)
class HypergeometricSpec:
    """Numerator and denominator parameters plus the argument ``z``.

    A :class:`ConjugatePair` entry stands for two parameters.
    """

    numerators: tuple
    denominators: tuple
    z: float

    def __post_init__(self):
        num = tuple(_coerce(x) for x in self.numerators)
        den = tuple(_coerce(x) for x in self.denominators)
        object.__setattr__(self, "numerators", num)
        object.__setattr__(self, "denominators", den)
        object.__setattr__(self, "z", float(self.z))
        for b in den:
            re = b.re if isinstance(b, ConjugatePair) else b
            im = b.im if isinstance(b, ConjugatePair) else 0.0
            if im == 0.0 and is_pole(re):
                raise DomainError(f"denominator parameter {b!r} is a nonpositive integer")
        if self.p > self.q + 1 and terminating_degree(self) is None:
            raise DomainError(f"p={self.p} exceeds q+1={self.q + 1}")

    @property
    def p(self) -> int:
        return _count(self.numerators)

    @property
    def q(self) -> int:
        return _count(self.denominators)

    @property
    def omega(self) -> float:
        return _param_sum(self.denominators) - _param_sum(self.numerators)

    def __str__(self):
        def fmt(x):
            if isinstance(x, ConjugatePair):
                return f"{x.re:g}±{x.im:g}i"
            return f"{x:g}"

        num = ", ".join(fmt(x) for x in self.numerators)
        den = ", ".join(fmt(x) for x in self.denominators)
        return f"{self.p}F{self.q}({num}; {den}; {self.z:g})"


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    error_estimate: float
    convergence: ConvergenceClass
    accelerated: bool = False


def pfq(numerators, denominators, z) -> HypergeometricSpec:
    """Shorthand constructor for a :class:`HypergeometricSpec`."""
    return HypergeometricSpec(tuple(numerators), tuple(denominators), z)


def terminating_degree(spec: HypergeometricSpec):
    """Degree ``m`` when some numerator equals ``-m``, else None."""
    degrees = []
    for a in spec.numerators:
        if isinstance(a, ConjugatePair):
            if a.im == 0.0 and is_pole(a.re):
                degrees.append(-round(a.re))
        elif is_pole(a):
            degrees.append(-round(a))
    return min(degrees) if degrees else None


def classify(spec: HypergeometricSpec) -> ConvergenceClass:
    """Place ``spec`` in the convergence trichotomy for |z| <= 1."""
    omega = spec.omega
    z = spec.z
    p, q = spec.p, spec.q
    if p <= q:
        tag = Convergence.ENTIRE
    elif p > q + 1:
        tag = Convergence.ENTIRE if z == 0 else Convergence.DIVERGENT
    elif abs(z) < 1:
        tag = Convergence.INSIDE_DISK
    elif abs(z) > 1:
        tag = Convergence.DIVERGENT
    elif omega > 0:
        tag = Convergence.ABSOLUTE_ON_CIRCLE
    elif z == -1.0 and omega > -1:
        tag = Convergence.CONDITIONAL
    else:
        tag = Convergence.DIVERGENT
    return ConvergenceClass(tag, omega)


def _split_params(params):
    reals = np.array([x for x in params if not isinstance(x, ConjugatePair)], dtype=float)
    pairs = [x for x in params if isinstance(x, ConjugatePair)]
    pre = np.array([x.re for x in pairs], dtype=float)
    pim2 = np.array([x.im * x.im for x in pairs], dtype=float)
    return reals, pre, pim2


class _TermGenerator:
    """Vectorised term recurrence, producing terms in contiguous blocks."""

    def __init__(self, spec: HypergeometricSpec):
        self.z = spec.z
        self.num = _split_params(spec.numerators)
        self.den = _split_params(spec.denominators)
        self.last = 1.0  # t[n] for the next block start
        self.n = 0

    @staticmethod
    def _factor(params, n):
        reals, pre, pim2 = params
        out = np.ones_like(n)
        for a in reals:
            out = out * (a + n)
        for re, im2 in zip(pre, pim2):
            s = re + n
            out = out * (s * s + im2)
        return out

    def ratios(self, n):
        n = np.asarray(n, dtype=float)
        return self._factor(self.num, n) / self._factor(self.den, n) * (self.z / (n + 1.0))

    def block(self, count: int) -> np.ndarray:
        """Terms t[n], ..., t[n+count-1], continuing from the previous block."""
        if count <= 0:
            return np.empty(0)
        n = np.arange(self.n, self.n + count - 1, dtype=float)
        with np.errstate(over="ignore", invalid="ignore"):
            tail = self.last * np.cumprod(self.ratios(n))
        out = np.empty(count)
        out[0] = self.last
        out[1:] = tail
        with np.errstate(over="ignore", invalid="ignore"):
            self.last = float(out[-1] * self.ratios(float(self.n + count - 1)))
        self.n += count
        return out


def terms(spec: HypergeometricSpec, count: int) -> np.ndarray:
    """The first ``count`` terms of the series."""
    return _TermGenerator(spec).block(count)


def _scale_of(partials: np.ndarray) -> np.ndarray:
    # magnitude against which a term counts as negligible; the running
    # maximum keeps the rule meaningful when the sum cancels to ~0
    return np.maximum.accumulate(np.abs(partials))


def _direct(spec, tol, budget, omega, on_circle_plus, geometric=1.0):
    """Plain partial sums with the three-consecutive-small-terms rule.

    Returns ``(value, terms_used, error_estimate, converged)``.
    """
    gen = _TermGenerator(spec)
    total = 0.0
    running_max = 0.0
    used = 0
    small_run = 0
    block = 64
    last_term = 0.0
    while used < budget:
        count = min(block, budget - used)
        t = gen.block(count)
        partial = total + np.cumsum(t)
        scale = np.maximum(_scale_of(partial), running_max)
        idx = np.arange(used, used + count, dtype=float)
        if on_circle_plus:
            # terms decay like n^(-1-omega); the remaining tail is ~ t n / omega
            bound = np.abs(t) * np.maximum(idx, 1.0) / omega
        else:
            # inside the disk the tail is roughly geometric with ratio |z|
            bound = np.abs(t) * geometric
        small = bound < tol * np.maximum(scale, np.finfo(float).tiny)
        for i in range(count):
            small_run = small_run + 1 if small[i] else 0
            if small_run >= 3:
                value = float(partial[i])
                return value, used + i + 1, float(bound[i]), True
        if not np.all(np.isfinite(partial)):
            return float("nan"), used + count, float("inf"), False
        total = float(partial[-1])
        running_max = float(scale[-1])
        last_term = float(bound[-1])
        used += count
        block = min(block * 2, 4096)
    return total, used, last_term, False


def euler_accelerated_sum(terms, start: int = 0):
    """Sum an alternating sequence with the Euler transformation.

    ``terms[:start]`` are added directly; from ``start`` on the signs must
    strictly alternate. Returns ``(value, error_estimate)``, the estimate
    being the size of the last transform increment.
    """
    terms = np.asarray(terms, dtype=float)
    head = float(np.sum(terms[:start])) if start else 0.0
    tail = terms[start:]
    if tail.size == 0 or not np.any(tail):
        return head, 0.0
    if np.any(tail[:-1] * tail[1:] >= 0):
        raise NotAlternatingError("tail signs do not strictly alternate")
    sign0 = math.copysign(1.0, tail[0])
    # u_k >= 0 with tail_k = sign0 * (-1)^k * u_k
    u = np.abs(tail)
    value = 0.0
    inc = 0.0
    prev = 0.0
    diff = u
    scale = 0.5
    for j in range(u.size):
        prev = inc
        inc = (-1) ** j * diff[0] * scale
        value += inc
        diff = np.diff(diff)
        scale *= 0.5
    err = max(abs(inc), abs(prev)) + u.size * _EPS * abs(u[0])
    return head + sign0 * value, float(err)


def _max_param(spec) -> float:
    vals = [0.0]
    for x in spec.numerators + spec.denominators:
        if isinstance(x, ConjugatePair):
            vals.append(abs(x.re) + x.im)
        else:
            vals.append(abs(x))
    return max(vals)


def _euler_series(spec, tol, max_terms):
    """z = -1: direct head plus Euler-transformed tail.

    The split point grows until the transform's increment is below tolerance.
    """
    n0 = max(16, int(math.ceil(2.0 * _max_param(spec))) + 8)
    width = 64
    best = None
    while n0 + width <= max_terms:
        t = terms(spec, n0 + width)
        if not np.all(np.isfinite(t)):
            break
        try:
            value, err = euler_accelerated_sum(t, start=n0)
        except NotAlternatingError:
            n0 *= 2
            continue
        scale = max(float(np.max(np.abs(np.cumsum(t[:n0 + 1])))), abs(value))
        if best is None or err < best[2]:
            best = (value, n0 + width, err)
        if err <= tol * scale:
            break
        n0 *= 2
        width = min(width * 2, 256)
    if best is None:
        raise NonConvergedError(
            f"could not find an alternating tail for {spec}", terms_used=max_terms
        )
    return best


def _richardson_series(spec, omega, tol, max_terms, levels=6):
    """z = +1: extrapolate partial sums S_N with N = N0 * 2**j.

    S - S_N has an asymptotic expansion in N**-(omega + k), k = 0, 1, ...
    """
    n_min = max(32, int(math.ceil(4.0 * _max_param(spec))))
    while levels > 2 and (max_terms >> levels) < n_min:
        levels -= 1
    n0 = max_terms >> levels
    if n0 < 8:
        raise NonConvergedError(f"max_terms={max_terms} too small to extrapolate", terms_used=0)
    total = n0 << levels
    t = terms(spec, total)
    partial = np.cumsum(t)
    sums = [float(partial[(n0 << j) - 1]) for j in range(levels + 1)]
    table = [sums]
    for k in range(1, levels + 1):
        f = 2.0 ** (omega + k - 1)
        prev = table[-1]
        table.append([(f * prev[j + 1] - prev[j]) / (f - 1.0) for j in range(len(prev) - 1)])
    value = table[-1][0]
    err = abs(value - table[-2][1])
    # floating point noise in the partial sums, amplified by the extrapolation
    amp = 1.0
    for k in range(1, levels + 1):
        f = 2.0 ** (omega + k - 1)
        amp *= (f + 1.0) / (f - 1.0)
    noise = amp * _EPS * float(np.max(np.abs(partial))) * math.sqrt(total)
    return value, total, max(err, noise), float(np.max(np.abs(partial)))


def eval_series(
    spec: HypergeometricSpec,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
    accelerate=None,
) -> SeriesResult:
    """Evaluate ``spec`` by summing its terms.

    ``accelerate`` is None (automatic), False (plain partial sums only) or
    True (always use the unit-circle acceleration when it applies).
    """
    cls = classify(spec)
    m = terminating_degree(spec)
    if m is not None:
        count = m + 1
        t = terms(_snapped(spec), count)
        value = float(np.sum(t))
        err = count * _EPS * float(np.sum(np.abs(t)))
        return SeriesResult(value, count, err, cls, False)
    if cls.tag is Convergence.DIVERGENT:
        raise DivergentError(f"{spec} diverges (omega={cls.omega:g})")
    if spec.z == 0.0:
        return SeriesResult(1.0, 1, 0.0, cls, False)

    on_circle = cls.tag in (Convergence.ABSOLUTE_ON_CIRCLE, Convergence.CONDITIONAL)
    if not on_circle or accelerate is False:
        plus = on_circle and spec.z > 0
        geometric = 1.0 / (1.0 - abs(spec.z)) if cls.tag is Convergence.INSIDE_DISK else 1.0
        value, used, err, ok = _direct(spec, tol, max_terms, cls.omega, plus, geometric)
        return _finish(spec, cls, value, used, err, ok, tol, False)

    if spec.z > 0:
        if not accelerate:
            budget = min(max_terms, 2000)
            value, used, err, ok = _direct(spec, tol, budget, cls.omega, True)
            if ok:
                return SeriesResult(value, used, err, cls, False)
        value, used, err, scale = _richardson_series(spec, cls.omega, tol, max_terms)
        ok = err <= tol * max(scale, abs(value))
        return _finish(spec, cls, value, used, err, ok, tol, True, scale)

    if cls.tag is Convergence.ABSOLUTE_ON_CIRCLE and not accelerate:
        budget = min(max_terms, 500)
        value, used, err, ok = _direct(spec, tol, budget, cls.omega, False)
        if ok:
            return SeriesResult(value, used, err, cls, False)
    value, used, err = _euler_series(spec, tol, max_terms)
    return _finish(spec, cls, value, used, err, err <= tol * max(1.0, abs(value)), tol, True)


def _finish(spec, cls, value, used, err, ok, tol, accelerated, scale=None):
    if not math.isfinite(value):
        raise NonConvergedError(f"{spec}: terms overflowed", value, err, used)
    if not ok:
        ref = max(abs(value), scale or 0.0, np.finfo(float).tiny)
        if err > 100.0 * tol * ref:
            raise NonConvergedError(
                f"{spec}: error estimate {err:.3g} after {used} terms", value, err, used
            )
    return SeriesResult(float(value), int(used), float(err), cls, accelerated)


def _snapped(spec: HypergeometricSpec) -> HypergeometricSpec:
    # replace near-integer terminating numerators by the exact integer
    def snap(a):
        if not isinstance(a, ConjugatePair) and round(a) <= 0 and abs(a - round(a)) < POLE_TOL:
            return float(round(a))
        return a

    return HypergeometricSpec(tuple(snap(a) for a in spec.numerators), spec.denominators, spec.z)


def hyp(numerators, denominators, z, tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS) -> float:
    """Value of pFq(numerators; denominators; z)."""
    return eval_series(pfq(numerators, denominators, z), tol, max_terms).value
