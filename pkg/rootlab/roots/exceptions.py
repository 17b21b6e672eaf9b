class RootLabError(Exception):
    """Базовая ошибка вычислений rootlab."""


class SingularMatrix(RootLabError):
    pass


class ZeroVector(RootLabError):
    pass


class InvalidRank(RootLabError, ValueError):
    pass


class IndexOutOfRange(RootLabError, ValueError):
    pass


class NotARoot(RootLabError):
    pass


class NonSimpleLetter(RootLabError, ValueError):
    pass


class NotAFacetIndex(RootLabError):
    pass


class RankTooLargeForFullArrangement(RootLabError):
    pass


class GeneratorSetTooLarge(RootLabError):
    pass


class WrongType(RootLabError):
    pass


class NotAZonotopeType(RootLabError):
    pass


class MissingWitnessRow(RootLabError):
    pass


class RankTooLarge(RootLabError):
    pass
