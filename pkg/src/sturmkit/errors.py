"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SturmKitError(Exception):
    """Base class for all library errors."""


class PermutationError(SturmKitError, ValueError):
    """Malformed one-line permutation (duplicates, gaps, bad text)."""


class ParseError(SturmKitError, ValueError):
    """Grammar violation in signature text, carrying the offending offset."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class ValidationError(SturmKitError, ValueError):
    """A signature violates one or more axioms.

    ``violations`` holds (axiom, location) pairs, axiom as a roman numeral.
    """

    def __init__(self, violations: list[tuple[str, str]]) -> None:
        text = "; ".join(f"({ax}) {loc}" for ax, loc in violations)
        super().__init__(f"invalid signature: {text}")
        self.violations = list(violations)


class InternalInvariantError(SturmKitError, RuntimeError):
    """A guaranteed identity failed; indicates a bug, not bad input."""


class NotSturmError(SturmKitError, ValueError):
    pass


class NotIntegrableError(SturmKitError, ValueError):
    def __init__(self, clause: str, detail: str = "") -> None:
        super().__init__(f"not an integrable involution: {clause}" + (f" ({detail})" if detail else ""))
        self.clause = clause


class CycleError(SturmKitError, ValueError):
    """Graph operation needed a DAG but found a directed cycle."""


class LimitExceededError(SturmKitError, ValueError):
    pass
