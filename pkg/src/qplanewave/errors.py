"""Exception hierarchy shared by all modules."""


class QNumericsError(Exception):
    """Base class for every error raised by the package."""


class ParameterError(QNumericsError, ValueError):
    """A parameter invariant was violated (bad q, order, window, ...)."""


class NonConvergent(QNumericsError):
    """A series or product did not reach its tail tolerance within max_terms."""


class DivergentSeries(QNumericsError):
    """A basic hypergeometric series is outside its domain of convergence."""


class PoleInParameters(QNumericsError):
    """A lower parameter hits q^{-m} before the series terminates."""


class WindowTooSmall(QNumericsError):
    """Boundary terms of a lattice sum are not negligible."""


class LatticeWindowError(QNumericsError, LookupError):
    """A lattice function was evaluated outside its window."""


class BranchCut(QNumericsError):
    """Non-integer power requested on the negative real axis."""


class ZeroArgument(ParameterError):
    pass


class DomainError(ParameterError):
    pass


class ConvergenceViolation(ParameterError):
    pass


class NoValidBranch(QNumericsError):
    pass
