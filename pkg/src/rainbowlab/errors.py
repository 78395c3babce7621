"""Exception types shared across the package."""


class RainbowLabError(Exception):
    """Base class for package-specific failures."""


class NonBipartiteError(RainbowLabError):
    """Raised when an operation requires a bipartition and the graph has none."""


class BudgetExceededError(RainbowLabError):
    """Raised when an exact search would exceed its declared size or time budget.

    This is an explicit refusal, never a silent approximation.
    """


class CertificationError(RainbowLabError):
    """Raised when a coloring that must be rainbow-free fails certification."""
