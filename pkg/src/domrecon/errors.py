"""Exception types shared across the package."""


class DomreconError(Exception):
    """Base class for all domain errors."""


class GraphConstructionError(DomreconError, ValueError):
    """Invalid vertex count, loop edge, or out-of-range endpoint."""


class SizeLimit(DomreconError):
    """An input or derived structure exceeds a configured size bound."""


class NotDominating(DomreconError, ValueError):
    """A vertex set required to dominate the host graph does not."""


class NotMinimal(DomreconError, ValueError):
    """A vertex set required to be a minimal dominating set is not."""


class UniversalVertexPresent(DomreconError, ValueError):
    """A construction that requires universal-vertex-free inputs got one."""


class FormatError(DomreconError, ValueError):
    """Malformed graph6, edge-list, or family-spec text."""
