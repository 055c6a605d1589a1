"""Exception hierarchy shared by every module."""


class HyperhomError(ValueError):
    """Base class for all library errors."""


class UnknownVertexError(HyperhomError):
    pass


class DuplicateVertexError(HyperhomError):
    pass


class DimensionOutOfRangeError(HyperhomError):
    pass


class VertexSetMismatchError(HyperhomError):
    pass


class TooManyVerticesError(HyperhomError):
    pass


class GradeMismatchError(HyperhomError):
    """Two path vectors of different grades were combined."""


class NotSimplicialError(HyperhomError):
    pass


class NotCosimplicialError(HyperhomError):
    pass


class GradeParityError(HyperhomError):
    """An operator has the wrong grade parity for its role."""


class NotAChainMapError(HyperhomError):
    pass


class ParseError(HyperhomError):
    pass


class KindMismatchError(HyperhomError):
    pass
