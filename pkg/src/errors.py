"""Error types shared across the engine.

Everything derived from ``InputError`` is a problem with what the caller
handed in (exit code 1 at the CLI). ``VerificationError`` marks a failed
mathematical check (exit code 2).
"""

from typing import Optional, Sequence, Tuple


class InputError(ValueError):
    """Invalid input: bad degree, malformed description, wrong group kind."""


class DegreeError(InputError):
    """Degree outside the range an operation accepts."""

    def __init__(self, degree: int, low: int, high: int, what: str = "degree"):
        self.degree = degree
        self.low = low
        self.high = high
        super().__init__(f"{what} {degree} out of range [{low}, {high}]")


class ComplexError(InputError):
    """Cell data does not form a cochain complex."""


class SubspaceError(InputError):
    """Subspace fails a structural requirement (e.g. not differential-closed)."""


class CollarError(InputError):
    """Marked cell set is not closed under taking faces."""


class ActionValidationError(InputError):
    """Action data inconsistent with the complex or with declared relations."""

    def __init__(self, message: str, degree: Optional[int] = None, relation: Optional[str] = None):
        self.degree = degree
        self.relation = relation
        super().__init__(message)


class GroupError(InputError):
    """Unknown group element, or a finite group was required."""


class InnerProductError(InputError):
    """Pairing is not positive or not preserved by the action."""


class SupportError(InputError):
    """Cochain support violates a support condition (collar, nonzero average)."""


class WindowTooSmallError(InputError):
    """Window radius cannot hold the requested cutoff support."""

    def __init__(self, radius: int, required_radius: int):
        self.radius = radius
        self.required_radius = required_radius
        super().__init__(
            f"window radius {radius} too small; radius {required_radius} required"
        )


class UnsupportedGeometryError(InputError):
    """Operation only supported on a specific family of covers."""


class DescriptionError(InputError):
    """Malformed complex, action, cover, pairing or scenario document."""

    def __init__(self, source: str, message: str, line: Optional[int] = None,
                 column: Optional[int] = None, field: Optional[str] = None):
        self.source = source
        self.line = line
        self.column = column
        self.field = field
        location = source
        if line is not None:
            location += f":{line}"
            if column is not None:
                location += f":{column}"
        if field:
            location += f" [{field}]"
        super().__init__(f"{location}: {message}")


class ScenarioError(InputError):
    """Scenario references an unknown name or an out-of-bounds parameter."""


class VerificationError(RuntimeError):
    """A mathematical verification failed.

    ``failures`` holds every failing (operation, invariant, witness) of the run;
    ``invariant`` and ``witness`` describe the first of them.
    """

    def __init__(self, invariant: str, witness: Optional[str] = None,
                 failures: Sequence[Tuple[str, str, Optional[str]]] = ()):
        self.invariant = invariant
        self.witness = witness
        self.failures = list(failures)
        message = f"verification failed: {invariant}"
        if witness:
            message += f" (witness: {witness})"
        super().__init__(message)
