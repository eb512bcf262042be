"""Exception hierarchy shared by every module."""


class FreeMeixnerError(Exception):
    """Base class for all errors raised by this package."""


class ArgumentError(FreeMeixnerError, ValueError):
    """An argument is malformed or outside an operation's precondition."""


class DomainError(FreeMeixnerError, ValueError):
    """A parameter lies outside the admissible range of a law or theorem."""


class DegenerateBranchError(DomainError):
    """The moment recursion loses its pivot and cannot pick a branch."""


class SingularityError(FreeMeixnerError, ZeroDivisionError):
    """A series operation needs a nonzero constant term and got zero."""


class BranchError(FreeMeixnerError, ValueError):
    """Only the principal square-root jet (constant term 1) is supported."""


class ResourceLimitError(FreeMeixnerError, RuntimeError):
    """An enumeration would exceed its configured cap."""
