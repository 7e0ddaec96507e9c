"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph input or an operation applied outside its precondition."""


class DomainError(ValueError):
    """A closed-form formula was evaluated outside the range where it holds."""
