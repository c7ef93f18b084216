"""Exception types raised across the package."""


class RedundancyError(Exception):
    """Base class for all errors raised by this package."""


class TautologyError(RedundancyError, ValueError):
    def __init__(self, literals, line=None):
        self.literals = tuple(literals)
        self.line = line
        where = f" at line {line}" if line is not None else ""
        super().__init__(f"tautological clause{where}: {list(self.literals)}")


class ParseError(RedundancyError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownClauseId(RedundancyError, KeyError):
    def __str__(self):
        return f"unknown clause id {self.args[0]!r}"


class CapExceeded(RedundancyError):
    """An exhaustive procedure would enumerate more points than allowed."""


class ScopeError(RedundancyError, ValueError):
    pass


class InconsistentRevisor(RedundancyError, ValueError):
    pass


class SharedVariablesError(RedundancyError, ValueError):
    pass


class PreconditionError(RedundancyError, ValueError):
    pass
