"""Exception hierarchy shared by all modules."""


class ModelError(Exception):
    """Base class for errors raised by this package."""


class NotFiniteType(ModelError, ValueError):
    pass


class RankZero(ModelError, ValueError):
    pass


class NotDominant(ModelError, ValueError):
    pass


class DuplicateKey(ModelError, AssertionError):
    """Two chain indices produced the same lexicographic key (should be impossible)."""


class PositionOutOfRange(ModelError, IndexError):
    pass


class SizeCapExceeded(ModelError, RuntimeError):
    def __init__(self, what, cap):
        super().__init__(f"{what} exceeds the size cap of {cap}")
        self.what = what
        self.cap = cap


class InvalidColor(ModelError, ValueError):
    pass


class InternalInconsistency(ModelError, AssertionError):
    """A computed quantity contradicts a proven identity; indicates a bug."""


class NotIrreducible(ModelError, ValueError):
    pass


class ShiViolation(InternalInconsistency):
    pass


class NotLexChain(ModelError, ValueError):
    pass


class NotAdmissible(ModelError, ValueError):
    pass
