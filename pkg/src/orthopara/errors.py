"""Exception types shared across the package."""


class PoleError(ValueError):
    """Argument sits on (or within tolerance of) a gamma-function pole."""


class DomainError(ValueError):
    """Argument violates a validity precondition (positivity, domain membership)."""


class DenominatorPoleError(PoleError):
    """A hypergeometric denominator parameter hits a non-positive integer
    before the series terminates."""


class NonTerminatingError(ValueError):
    """Series has no termination certificate and the convergence condition fails."""


class QuadratureNonConvergence(RuntimeError):
    """Successive quadrature refinements failed to agree to the requested tolerance."""


class ConfigError(ValueError):
    """Sweep configuration is malformed or violates an invariant."""


class ParseError(ValueError):
    """Command-line point/parameter specification could not be parsed."""
