"""Inequality reports shared by the parachute and bounds checkers."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any, Dict, Optional


class Statement(str, enum.Enum):
    MAIN = "MAIN"
    CN = "CN"
    CSU = "CSU"
    DG1 = "DG1"
    CAUT = "CAUT"
    PARA = "PARA"


_CORE_KEYS = ("statement", "i", "lhs", "rhs", "holds", "asserted", "skipped_reason")


@dataclass(frozen=True)
class BoundReport:
    """One checked instance of an inequality ``lhs >= rhs``.

    ``holds`` is ``None`` when the check was skipped.  ``asserted`` is True
    when a failure would contradict a proven statement; it is False when
    the check relied on a candidate value (for instance an s_i that is only
    known as an upper bound), in which case a failure is inconclusive.
    """

    statement: Statement
    lhs: Optional[int]
    rhs: Optional[int]
    holds: Optional[bool]
    i: Optional[int] = None
    asserted: bool = True
    params: Dict[str, Any] = field(default_factory=dict)
    skipped_reason: Optional[str] = None

    @property
    def skipped(self) -> bool:
        return self.holds is None

    @property
    def violated(self) -> bool:
        return self.asserted and self.holds is False

    @property
    def tight(self) -> bool:
        return bool(self.holds) and self.lhs == self.rhs

    @property
    def verdict(self) -> str:
        if self.holds is None:
            return "SKIPPED"
        if self.holds:
            return "TIGHT" if self.lhs == self.rhs else "HOLDS"
        return "VIOLATED" if self.asserted else "INCONCLUSIVE"

    def summary(self) -> str:
        head = self.statement.value + (f" i={self.i}" if self.i is not None else "")
        if self.holds is None:
            return f"{head}: SKIPPED ({self.skipped_reason})"
        rel = "≥" if self.holds else "<"
        return f"{head}: lhs {self.lhs} {rel} rhs {self.rhs} {self.verdict}"

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "statement": self.statement.value,
            "i": self.i,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "asserted": self.asserted,
            "skipped_reason": self.skipped_reason,
        }
        for k, v in self.params.items():
            if k in out:
                raise ValueError(f"parameter name {k!r} collides with a report field")
            out[k] = v
        return out

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BoundReport":
        params = {k: v for k, v in data.items() if k not in _CORE_KEYS}
        return cls(
            statement=Statement(data["statement"]),
            i=data.get("i"),
            lhs=data.get("lhs"),
            rhs=data.get("rhs"),
            holds=data.get("holds"),
            asserted=data.get("asserted", True),
            skipped_reason=data.get("skipped_reason"),
            params=params,
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "BoundReport":
        return cls.from_dict(json.loads(text))
