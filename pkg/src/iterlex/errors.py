"""Exception hierarchy shared by every module of the package."""


class IterlexError(Exception):
    """Base class for all errors raised by :mod:`iterlex`."""


class InputError(IterlexError):
    """Bad user input (the CLI maps these to exit code 1)."""


class ParseError(InputError, ValueError):
    pass


class DivisionByZero(IterlexError, ZeroDivisionError):
    pass


class FieldMismatch(InputError):
    pass


class DimensionMismatch(InputError, ValueError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class DuplicatePoint(InputError):
    def __init__(self, index, other=None):
        self.index = index
        self.other = other
        msg = f"point {index} duplicates an earlier point"
        if other is not None:
            msg = f"point {index} duplicates point {other}"
        super().__init__(msg)


class NotOrderIdeal(InputError):
    pass


class NotAdmissible(InputError):
    pass


class InvalidPosition(IterlexError):
    pass


class SamePoint(InputError):
    pass


class InternalError(IterlexError):
    """An invariant that holds for valid input was violated (exit code 2)."""


class NoAntecedent(InternalError):
    pass


class InconsistentState(InternalError):
    pass


class SingularPivot(InternalError):
    pass
