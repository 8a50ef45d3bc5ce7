"""Exception types shared across the package."""


class HyptileError(Exception):
    """Base class for all package-specific errors."""


class SingularMatrixError(HyptileError, ValueError):
    """An exact solve or lattice comparison received a singular matrix."""


class RankDeficientError(HyptileError, ValueError):
    """Hermite normal form requires a full-rank integer matrix."""


class InvalidParamsError(HyptileError, ValueError):
    """Tiling or torus parameters violate their preconditions."""


class DimensionMismatchError(HyptileError, ValueError):
    """A vector or matrix has the wrong dimension for the operation."""


class TooLargeError(HyptileError, ValueError):
    """A brute-force enumeration would exceed its hard ceiling (n > 6)."""


class BudgetExceededError(HyptileError, RuntimeError):
    """A configurable work budget (cells, candidates) would be exceeded."""


class CoverViolationError(HyptileError, RuntimeError):
    """A torus construction produced a doubly assigned or missed cell.

    This signals a construction bug: it must not occur for valid parameters.
    """
