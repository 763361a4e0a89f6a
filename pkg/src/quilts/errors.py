"""Shared exception types."""

from __future__ import annotations

from dataclasses import dataclass


class QuiltsError(Exception):
    """Base class for all errors raised by this package."""


class PosetError(QuiltsError, ValueError):
    """Invalid poset data or a violated poset precondition."""


class TractabilityError(QuiltsError, RuntimeError):
    """An operation would exceed its enumeration cap; aborted, not approximated."""


@dataclass(frozen=True)
class Violation:
    """First failing quilt axiom, in canonical scan order.

    kind is one of 'zero_border', 'corner', 'growth'.  coords names the cell
    (p_index, q_index); for growth violations, edge names the offending cover
    edge ((p,q) lower, (p,q) upper) in the product order.
    """

    kind: str
    coords: tuple[int, int]
    edge: tuple[tuple[int, int], tuple[int, int]] | None = None

    def describe(self) -> str:
        if self.kind == "growth" and self.edge is not None:
            return f"growth violated on cover {self.edge[0]} -> {self.edge[1]}"
        return f"{self.kind} violated at cell {self.coords}"


class QuiltValidationError(QuiltsError, ValueError):
    """A value table failed one of the three quilt axioms."""

    def __init__(self, violation: Violation):
        super().__init__(violation.describe())
        self.violation = violation
