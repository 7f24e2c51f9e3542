"""Outcome records shared by the obstruction checks and the L-space verifier."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


class Status(enum.Enum):
    OBSTRUCTED = "obstructed"
    CONSISTENT = "consistent"
    INCONCLUSIVE = "inconclusive"
    BY_CITATION = "by_citation"


Obstructed = Status.OBSTRUCTED
ConsistentWith = Status.CONSISTENT
Inconclusive = Status.INCONCLUSIVE
ByCitation = Status.BY_CITATION


def jsonable(x: Any) -> Any:
    """Integers stay integers; other rationals become ``"a/b"`` strings."""
    if isinstance(x, bool) or x is None or isinstance(x, (str, int)):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    raise TypeError(f"cannot serialize {type(x).__name__}")


@dataclass(frozen=True)
class Verdict:
    status: Status
    check: str
    reason: str
    witness: dict = field(default_factory=dict)
    citation: str | None = None

    @property
    def obstructed(self) -> bool:
        return self.status is Status.OBSTRUCTED

    def to_json(self) -> dict:
        out = {
            "status": self.status.value,
            "check": self.check,
            "reason": self.reason,
            "witness": jsonable(self.witness),
        }
        if self.citation is not None:
            out["citation"] = self.citation
        return out
