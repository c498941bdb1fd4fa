"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested function."""


class ConvergenceError(RuntimeError):
    """An iterative method failed to reach its tolerance."""


class UnsupportedVariantError(ValueError):
    """The operation has no definition for the requested problem variant."""


class ExactModeUnavailable(RuntimeError):
    """Exact computation refused because N exceeds the configured cap.

    Raised by the quadratic-cost distribution routines; callers should fall
    back to :func:`stopdur.duration.asymptotic_report`.
    """
