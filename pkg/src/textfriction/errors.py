class DomainError(ValueError):
    """An input violates an operation's contract (bad range, empty data, ...)."""
