from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True, order=True)
class Violation:
    """One failed check: where (vertex, colour), which rule, and what was seen."""

    vertex: str
    color: int | None
    axiom: str
    detail: str

    def to_json(self) -> dict:
        return asdict(self)

    def __str__(self):
        where = self.vertex if self.color is None else f"{self.vertex} i={self.color}"
        return f"[{self.axiom}] {where}: {self.detail}"


class ConsistencyError(RuntimeError):
    """An upstream invariant broke in a way that makes further results meaningless."""
