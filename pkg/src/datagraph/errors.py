"""Exception types raised across the package.

Everything derives from :class:`DataGraphError` so callers can catch one
base class. Indices quoted in messages are 1-based.
"""


class DataGraphError(Exception):
    """Base class for all errors raised by this package."""


class SelfLoopError(DataGraphError):
    """Edge endpoints resolve to the same node."""


class UnknownNodeError(DataGraphError, KeyError):
    """Node key is not registered in the graph."""


class UnknownEdgeError(DataGraphError, KeyError):
    """Edge is not registered in the graph."""


class UnknownAttributeError(DataGraphError, KeyError):
    """Attribute name is not present on the queried table."""


class LengthMismatchError(DataGraphError, ValueError):
    """Bulk dataset length does not match the entity count."""


class KindMismatchError(DataGraphError, TypeError):
    """Operation requires the other graph kind (directed vs undirected)."""


class DuplicateKeyError(DataGraphError, ValueError):
    """A key is already taken by a different entity."""


class EmptySetError(DataGraphError, ValueError):
    """A node set argument was empty."""


class DimensionError(DataGraphError, ValueError):
    """Array input has an unsupported number of dimensions."""


class NotSquareError(DataGraphError, ValueError):
    """Matrix input must be square."""


class NotSymmetricError(DataGraphError, ValueError):
    """Matrix input deviates from symmetry beyond tolerance."""


class NotFiniteError(DataGraphError, ValueError):
    """Array input contains NaN or infinite entries."""


class DisconnectedError(DataGraphError, ValueError):
    """Operation requires a connected graph."""


class EmptyGraphError(DataGraphError, ValueError):
    """Operation is undefined on an empty graph."""


class BadKError(DataGraphError, ValueError):
    """Clique percolation needs k >= 2."""


class UnsortedThresholdsError(DataGraphError, ValueError):
    """Threshold grid must be sorted ascending."""


class ShapeMismatchError(DataGraphError, ValueError):
    """Samples in a batch do not share a common shape."""


class BadWindowError(DataGraphError, ValueError):
    """Sliding window length is out of range for the series."""


class RaggedError(DataGraphError, ValueError):
    """Delimited file rows have inconsistent lengths."""


class ParseError(DataGraphError, ValueError):
    """Delimited file contains an unparseable cell."""


class VersionError(DataGraphError, ValueError):
    """Archive version is not supported by this reader."""


class CorruptError(DataGraphError, ValueError):
    """Archive file is malformed or truncated."""


class DuplicateKeyWarning(UserWarning):
    """A table file repeats a key; later rows win."""
