"""Exception types shared across firlab."""


class FirlabError(Exception):
    pass


class FieldMismatchError(FirlabError, ValueError):
    """Operands live over different coefficient fields."""


class InfiniteFieldError(FirlabError, ValueError):
    """Operation needs an enumerable (finite) coefficient field."""


class NotComputable(FirlabError, ArithmeticError):
    """Right-ideal computation needs S^{-1} of an element outside S(K)."""


class ParseError(FirlabError, ValueError):
    def __init__(self, message, text="", pos=None):
        self.text = text
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class NotAnAtom(FirlabError, ValueError):
    pass


class NotFullyReducible(FirlabError, ValueError):
    def __init__(self, poly, rank, length):
        self.rank = rank
        self.length = length
        super().__init__(
            f"{poly} is not fully reducible: rank V = {rank} < length = {length}"
        )


class InvariantViolation(FirlabError, AssertionError):
    """An internal consistency check failed; this is a bug or a theorem violation."""
