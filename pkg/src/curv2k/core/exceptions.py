class Curv2kError(Exception):
    """Base class for every error raised by curv2k."""

    pass


class InvalidDimensionError(Curv2kError):
    """Custom exception for dimensions outside an operation's range."""

    pass


class DimensionMismatchError(Curv2kError):
    """Custom exception for operands living in different dimensions."""

    pass


class SymmetryError(Curv2kError):
    """Custom exception for index-symmetry or first Bianchi violations."""

    pass


class ConvergenceError(Curv2kError):
    """Custom exception for eigensolver failures."""

    pass


class NotEinsteinError(Curv2kError):
    """Custom exception for Einstein-only operations applied to non-Einstein tensors."""

    pass


class DegenerateEigenspaceError(Curv2kError):
    """Custom exception for basis-dependent quantities requested on degenerate eigenspaces."""

    pass


class InvalidParameterError(Curv2kError):
    """Custom exception for out-of-range numeric parameters."""

    pass


class ModelSpecError(Curv2kError):
    """Custom exception for unparsable or infeasible model specifications."""

    pass
