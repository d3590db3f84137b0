"""Exception types raised across the package."""


class HypersumError(Exception):
    """Base class for all errors raised by hypersum."""


class PoleError(HypersumError, ValueError):
    """An argument sits on (or within tolerance of) a pole."""


class DomainError(HypersumError, ValueError):
    """Arguments fall outside an operation's region of validity."""


class DivergentError(HypersumError):
    """The requested series does not converge at the given argument."""


class NonConvergedError(HypersumError):
    """Summation hit its term cap before reaching the requested tolerance."""

    def __init__(self, message, value=None, error_estimate=None, terms_used=None):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
        self.terms_used = terms_used


class NotAlternatingError(HypersumError, ValueError):
    """Euler acceleration was given a sequence whose signs do not alternate."""


class DecayError(HypersumError, ValueError):
    """Integrand does not decay at infinity for the given parameters."""


class SingularityError(HypersumError, ValueError):
    """Integrand has a non-integrable singularity at the origin."""


class DomainTooThinError(HypersumError):
    """Rejection sampling could not find enough admissible points."""
