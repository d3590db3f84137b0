"""Numerical verification of generalized hypergeometric summation theorems
and the hyperbolic integrals they evaluate."""

from .errors import (
    DecayError,
    DivergentError,
    DomainError,
    DomainTooThinError,
    HypersumError,
    NonConvergedError,
    NotAlternatingError,
    PoleError,
    SingularityError,
)
from .hyperseries import HypergeometricSpec, SeriesResult, classify, eval_series, hyp
from .identities import Identity, ParamPoint, VerificationRecord, check, registry
from .quad import IntegralSpec, QuadratureResult, closed_form, integrate, series_form
from .specfun import ConjugatePair, digamma, gamma, log_gamma, lowercase_beta, pochhammer, trigamma

__all__ = [
    "ConjugatePair",
    "DecayError",
    "DivergentError",
    "DomainError",
    "DomainTooThinError",
    "HypergeometricSpec",
    "HypersumError",
    "Identity",
    "IntegralSpec",
    "NonConvergedError",
    "NotAlternatingError",
    "ParamPoint",
    "PoleError",
    "QuadratureResult",
    "SeriesResult",
    "SingularityError",
    "VerificationRecord",
    "check",
    "classify",
    "closed_form",
    "digamma",
    "eval_series",
    "gamma",
    "hyp",
    "integrate",
    "log_gamma",
    "lowercase_beta",
    "pochhammer",
    "registry",
    "series_form",
    "trigamma",
]
