"""Exception types shared across the package."""


class GroupError(ValueError):
    """Base class for invalid group input."""


class NotClosed(GroupError):
    pass


class NotAssociative(GroupError):
    pass


class NoIdentity(GroupError):
    pass


class NoInverse(GroupError):
    pass


class NotNormal(GroupError):
    pass


class NotCoprime(GroupError):
    pass


class InvalidSpec(GroupError):
    pass


class FileFormatError(GroupError):
    pass


class ClosureCapExceeded(GroupError):
    pass


class SearchBudgetExceeded(RuntimeError):
    """A backtracking search ran out of nodes before finishing."""


class IllDefined(RuntimeError):
    """Internal consistency failure: a map on cosets depends on the representative."""
