"""Exception hierarchy. The CLI maps any SsmQuantError to a nonzero exit."""


class SsmQuantError(Exception):
    """Base class for all package errors."""


class ShapeError(SsmQuantError, ValueError):
    """Operand shapes are inconsistent."""


class LayoutError(SsmQuantError, ValueError):
    """A scale layout does not cover the target tensor, or is invalid."""


class ArchiveError(SsmQuantError, ValueError):
    """Archive file is malformed, truncated, or violates format invariants."""


class CalibrationError(SsmQuantError, ValueError):
    """Calibration statistics are missing, empty, or inconsistent."""


class PipelineError(SsmQuantError, RuntimeError):
    """Pipeline stage ordering or configuration violation."""
