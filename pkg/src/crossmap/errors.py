"""Exception taxonomy shared by all crossmap modules."""


class CrossmapError(Exception):
    """Base class for all crossmap errors."""


# --- engine ---------------------------------------------------------------

class TooManyDimensions(CrossmapError):
    """More dimensions requested than the 64-bit record mask can hold."""


class MissingColumn(CrossmapError):
    pass


class IncompatibleColumnKind(CrossmapError):
    pass


class UnknownDimension(CrossmapError):
    pass


class IllegalFilterKind(CrossmapError):
    """Filter variant is not legal for the target dimension kind."""


class InvalidFilterSpec(CrossmapError):
    """Filter violates its own invariants (lo > hi, inverted bbox, ...)."""


class IllegalReducer(CrossmapError):
    pass


class NotScalarDimension(CrossmapError):
    pass


class NonPositiveWidth(CrossmapError):
    pass


class NotHierarchyDimension(CrossmapError):
    pass


class UnknownSortColumn(CrossmapError):
    pass


class NoTextDimension(CrossmapError):
    pass


# --- geo ------------------------------------------------------------------

class NonFiniteInput(CrossmapError):
    pass


class InvalidBbox(CrossmapError):
    pass


# --- ingest ---------------------------------------------------------------

class MalformedInput(CrossmapError):
    pass


class TypeCoercionFailure(CrossmapError):
    pass


class LatLonOutOfRange(CrossmapError):
    pass


class NonPointGeometry(CrossmapError):
    pass


class EmptySample(CrossmapError):
    pass
