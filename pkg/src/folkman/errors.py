"""Exception types shared across the toolkit."""


class FolkmanError(Exception):
    """Base class for all toolkit errors."""


class Graph6Error(FolkmanError, ValueError):
    """Malformed graph6 input.  Carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class SizeLimitError(FolkmanError, ValueError):
    """An operation would exceed a hard size cap (64-vertex graphs, oracle caps)."""


class PreconditionError(FolkmanError, ValueError):
    """A documented precondition of an operation was violated."""


class ContractViolation(FolkmanError, ValueError):
    """Caller passed data that breaks an operation's input contract."""


class ValidationError(FolkmanError, ValueError):
    """Batch input validation failure; names the offending index and predicate."""

    def __init__(self, index: int, predicate: str):
        super().__init__(f"input graph {index} violates predicate '{predicate}'")
        self.index = index
        self.predicate = predicate


class DataError(FolkmanError, ValueError):
    """Unusable external data: unreadable files, hash mismatches, bad lines."""
