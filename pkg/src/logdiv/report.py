"""Serializable results shared by the certificate-producing modules."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = ["Certificate", "HOLDS", "FAILS", "INCONCLUSIVE", "jsonable"]

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"


def jsonable(obj):
    """Convert nested results (polynomials, fractions, tuples...) to JSON types."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        seq = sorted(obj, key=str) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in seq]
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    return str(obj)


@dataclass
class Certificate:
    """Verdict on a property with the data that justifies it.

    A ``fails`` verdict always carries a witness that can be rechecked
    independently of the computation that produced it.
    """

    property: str
    verdict: str
    witness: dict = field(default_factory=dict)
    budget: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in (HOLDS, FAILS, INCONCLUSIVE):
            raise ValueError(f"bad verdict {self.verdict!r}")

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    @property
    def fails(self) -> bool:
        return self.verdict == FAILS

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "verdict": self.verdict,
            "witness": jsonable(self.witness),
            "budget": jsonable(self.budget),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)
