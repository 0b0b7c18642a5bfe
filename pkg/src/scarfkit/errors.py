class ScarfkitError(Exception):
    """Base class for library errors."""


class IdealError(ScarfkitError, ValueError):
    pass


class ZeroIdealError(IdealError):
    pass


class UnitIdealError(IdealError):
    pass


class ParseError(ScarfkitError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class PreconditionError(ScarfkitError, ValueError):
    """A theorem checker was handed an input outside its hypotheses."""


class CutoffExceeded(ScarfkitError):
    """A size cap was hit; the answer is indeterminate rather than false."""


class ConsistencyError(ScarfkitError, AssertionError):
    """Two independent computation paths disagreed."""
