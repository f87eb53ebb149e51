"""Axiom reports."""

from __future__ import annotations

from typing import TYPE_CHECKING

from pydantic import BaseModel, Field

from xmodalg.core.linalg import first_mismatch, nested

if TYPE_CHECKING:
    from collections.abc import Sequence

    from xmodalg.types import IntArray


class Violation(BaseModel):
    """First failing instance of an axiom."""

    axiom: str = Field(..., description="Axiom identifier, e.g. 'PL3'")
    indices: tuple[int, ...] = Field(
        default=(), description="Basis tuple of the first failing instance"
    )
    lhs: tuple[int, ...] = Field(default=(), description="Evaluated left-hand side")
    rhs: tuple[int, ...] = Field(default=(), description="Evaluated right-hand side")
    count: int = Field(default=1, ge=1, description="Number of failing instances")
    detail: str = Field(default="", description="Human-readable explanation")


class Report(BaseModel):
    """Outcome of an axiom suite or a categorical check."""

    subject: str = Field(..., description="What was checked")
    violations: list[Violation] = Field(default_factory=list)
    stats: dict[str, int | bool | str] = Field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """Whether every checked axiom holds."""
        return not self.violations

    @property
    def failed_axioms(self) -> list[str]:
        """Identifiers of the failed axioms, in report order."""
        return [violation.axiom for violation in self.violations]

    def first(self, axiom: str) -> Violation | None:
        """Return the violation recorded for an axiom, if any.

        Args:
            axiom: Axiom identifier

        Returns:
            The recorded violation or None
        """
        for violation in self.violations:
            if violation.axiom == axiom:
                return violation
        return None

    def expect_equal(
        self,
        axiom: str,
        lhs: IntArray,
        rhs: IntArray,
        prime: int,
        *,
        index_dims: int,
        detail: str = "",
    ) -> bool:
        """Compare two arrays of axiom values and record the first mismatch.

        Args:
            axiom: Axiom identifier
            lhs: Left-hand values indexed by basis tuples
            rhs: Right-hand values of the same shape
            prime: Field characteristic
            index_dims: Number of leading axes that index basis tuples
            detail: Explanation attached to a violation

        Returns:
            True if the axiom holds everywhere
        """
        mismatch = first_mismatch(lhs, rhs, prime, index_dims)
        if mismatch is None:
            return True
        where, left, right, count = mismatch
        self.violations.append(
            Violation(
                axiom=axiom,
                indices=where,
                lhs=_flat(left),
                rhs=_flat(right),
                count=count,
                detail=detail,
            )
        )
        return False

    def expect(
        self,
        axiom: str,
        condition: bool,  # noqa: FBT001
        *,
        indices: Sequence[int] = (),
        lhs: Sequence[int] = (),
        rhs: Sequence[int] = (),
        detail: str = "",
    ) -> bool:
        """Record a violation unless a condition holds.

        Args:
            axiom: Axiom identifier
            condition: Whether the axiom holds
            indices: Basis tuple of the failing instance
            lhs: Left-hand value
            rhs: Right-hand value
            detail: Explanation attached to a violation

        Returns:
            The condition
        """
        if not condition:
            self.violations.append(
                Violation(
                    axiom=axiom,
                    indices=tuple(indices),
                    lhs=tuple(lhs),
                    rhs=tuple(rhs),
                    detail=detail,
                )
            )
        return condition

    def merge(self, other: Report, *, prefix: str = "") -> Report:
        """Append another report's violations and stats.

        Args:
            other: Report to absorb
            prefix: Prepended to the absorbed axiom identifiers and stat keys

        Returns:
            This report
        """
        for violation in other.violations:
            self.violations.append(
                violation.model_copy(update={"axiom": prefix + violation.axiom})
            )
        for key, value in other.stats.items():
            self.stats[prefix + key] = value
        return self


def _flat(values: IntArray) -> tuple[int, ...]:
    flat = nested(values.reshape(-1))
    return tuple(flat)
