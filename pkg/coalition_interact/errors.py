"""Exception hierarchy. Each class carries the CLI exit code it maps to."""
from __future__ import annotations

from typing import Optional

# Exit code of verify and independence when a verdict differs from the expected one
VERDICT_MISMATCH_EXIT_CODE = 4


class CoalitionInteractError(Exception):
    """Base class for every error raised by the toolkit."""

    exit_code = 1


class ValidationError(CoalitionInteractError, ValueError):
    """Input violates a documented precondition."""

    exit_code = 2


class NonZeroEmptyCoalition(ValidationError):
    pass


class SizeMismatch(ValidationError):
    pass


class EmptyCoalition(ValidationError):
    pass


class OverlappingArguments(ValidationError):
    pass


class PlayerOutOfRange(ValidationError):
    pass


class NoSuchEdge(ValidationError):
    pass


class EdgeAlreadyPresent(ValidationError):
    pass


class LoopEdge(ValidationError):
    pass


class DuplicateEdge(ValidationError):
    pass


class UnknownKind(ValidationError):
    pass


class OrderOutOfRange(ValidationError):
    pass


class PreconditionViolated(ValidationError):
    pass


class NotATree(ValidationError):
    pass


class NotAVetoGraphPartnership(ValidationError):
    pass


class ParseError(ValidationError):
    """Malformed game or graph file. Carries the file and the offending field."""

    def __init__(
        self,
        message: str,
        path: Optional[str] = None,
        field: Optional[str] = None,
        line: Optional[int] = None,
    ):
        self.path = path
        self.field = field
        self.line = line
        where = []
        if path:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")


class SizeCapExceeded(CoalitionInteractError):
    """Exact computation refused because n exceeds a configured cap."""

    exit_code = 3

    def __init__(self, n: int, cap: int, what: str = "computation"):
        self.n = n
        self.cap = cap
        super().__init__(
            f"{what} needs n={n} players but the cap is {cap}; "
            f"raise it with --max-n or COALITION_INTERACT_MAX_N if you can afford O(2^n) work"
        )
