"""Exception hierarchy shared by all chanuq modules.

The CLI maps these onto exit codes, so the distinctions matter:
schema problems (malformed input files), physical-validation failures
(with the offending residual attached), dimension mismatches, and
numeric/verification failures are all separate classes.
"""

from __future__ import annotations


class ChanuqError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(ChanuqError):
    """Operands act on Hilbert spaces of different dimension."""


class SchemaError(ChanuqError):
    """An input document does not match the expected JSON layout."""


class ValidationError(ChanuqError):
    """A physical-validity check failed.

    Carries the name of the violated property and the measured residual
    so callers (and the CLI) can report how far the input was from valid.
    """

    def __init__(self, property_name: str, residual: float, message: str | None = None):
        self.property_name = property_name
        self.residual = float(residual)
        if message is None:
            message = f"{property_name} violated (residual {residual:.3e})"
        super().__init__(message)


class NotHermitianError(ValidationError):
    def __init__(self, residual: float):
        super().__init__("hermiticity", residual)


class NotPositiveError(ValidationError):
    def __init__(self, residual: float):
        super().__init__("positive-semidefiniteness", residual,
                         f"matrix has eigenvalue {residual:.3e} below tolerance")


class TraceError(ValidationError):
    def __init__(self, residual: float):
        super().__init__("unit trace", residual,
                         f"trace differs from 1 by {residual:.3e}")


class CompletenessError(ValidationError):
    def __init__(self, residual: float):
        super().__init__("Kraus completeness", residual,
                         f"sum of E_i^dag E_i differs from identity by {residual:.3e} (Frobenius)")


class NumericError(ChanuqError):
    """A computation produced a value that violates an internal consistency check."""


class BoundViolationError(ChanuqError):
    """A quantity fell below one of its proven lower bounds beyond tolerance."""

    def __init__(self, bound_name: str, lhs: float, bound: float):
        self.bound_name = bound_name
        self.lhs = float(lhs)
        self.bound = float(bound)
        super().__init__(
            f"bound '{bound_name}' exceeds its left-hand side: "
            f"lhs={lhs!r}, bound={bound!r}, slack={lhs - bound!r}"
        )
