"""Exception hierarchy shared by all modules."""


class ChiralisError(Exception):
    """Base class for all package errors."""


class UnknownGenerator(ChiralisError):
    pass


class MixedAlgebras(ChiralisError):
    pass


class GradeError(ChiralisError):
    pass


class GradeMismatch(GradeError):
    pass


class NotNilpotent(ChiralisError):
    pass


class InfinitePiece(ChiralisError):
    pass


class DegenerateForm(ChiralisError):
    pass


class InvalidLieData(ChiralisError):
    pass


class NoValidDifferential(ChiralisError):
    pass


class LieMismatch(ChiralisError):
    pass


class NotAbelian(ChiralisError):
    pass


class NotSemisimple(ChiralisError):
    pass


class NotFaithful(ChiralisError):
    pass


class WrongWeight(ChiralisError):
    pass


class NotClosed(ChiralisError):
    pass


class NotInSubspace(ChiralisError):
    pass


class NotWellDefined(ChiralisError):
    pass


class NoFixture(ChiralisError):
    pass


class HypothesisFailed(ChiralisError):
    pass


class CacheCorrupt(ChiralisError):
    pass


class ExprSyntaxError(ChiralisError):
    """Parse failure; carries the source position."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class UnknownName(ChiralisError):
    pass
