"""Exception types shared across the package."""


class InvalidPartition(ValueError):
    """Blocks violate a partition invariant; the message names which one."""


class InvalidWord(ValueError):
    """A signed restricted growth word violates one of its clauses."""

    def __init__(self, clause: int, message: str):
        super().__init__(f"clause {clause}: {message}")
        self.clause = clause


class LimitExceeded(ValueError):
    """Requested enumeration is larger than the configured limit."""
