"""Exception types shared across the package."""


class LayoutError(ValueError):
    """Base class for every domain error raised by cuberow."""


class RowSizeError(LayoutError):
    """Node count is not a supported power of two."""


class InvalidCutError(LayoutError):
    """Cut position (or terminal slot) outside its legal range."""


class InvalidDimensionError(LayoutError):
    """Link dimension outside 1..dims."""


class DegenerateRowError(LayoutError):
    """Operation needs at least two nodes."""


class NetlistFormatError(LayoutError):
    """Malformed netlist or track-assignment text."""


class IncompleteAssignmentError(LayoutError):
    """Track assignment is missing at least one routed wire."""


class TooManyWiresError(LayoutError):
    """Instance exceeds the exact-search size cap."""


class RenderSizeError(LayoutError):
    """Requested drawing exceeds the renderer's size cap."""
