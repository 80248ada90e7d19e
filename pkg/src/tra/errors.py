"""Exception hierarchy shared by all modules."""


class TraError(Exception):
    """Base class for every error raised by this package."""


class ScaleMismatchError(TraError):
    """An ordinal value was used with a scale it does not belong to."""


class UnknownLabelError(TraError, KeyError):
    """A criticality or level label is not known to the matrix or scale."""

    def __str__(self) -> str:
        return Exception.__str__(self)


class MonotonicityError(TraError, ValueError):
    """A risk matrix lowers the band when likelihood or impact increases."""


class OutOfRangeError(TraError, ValueError):
    """A score or level lies outside its admissible range."""


class ModelError(TraError, ValueError):
    """A system model, scenario or catalog violates a structural invariant."""


class UnknownObjectError(TraError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class MissingSLError(TraError, KeyError):
    """A scenario targets a zone or conduit that has no assigned SL vector."""

    def __str__(self) -> str:
        return Exception.__str__(self)
