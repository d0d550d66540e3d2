"""Exact rank bookkeeping for sparse rational vectors."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, Iterable, Mapping

SparseVector = Dict[Hashable, Fraction]


class Echelon:
    """Incrementally maintained reduced row echelon basis over Q.

    Vectors are dicts from coordinate keys to nonzero fractions.  Each
    basis vector has a pivot key with coefficient 1, and no other basis
    vector carries that key.
    """

    def __init__(self):
        self.rows: Dict[Hashable, SparseVector] = {}

    def copy(self) -> "Echelon":
        e = Echelon()
        e.rows = {k: dict(v) for k, v in self.rows.items()}
        return e

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping[Hashable, Fraction]) -> SparseVector:
        v = dict(vec)
        for pivot in [k for k in v if k in self.rows]:
            c = v.get(pivot)
            if not c:
                continue
            for key, val in self.rows[pivot].items():
                nv = v.get(key, 0) - c * val
                if nv:
                    v[key] = nv
                else:
                    v.pop(key, None)
        return v

    def insert(self, vec: Mapping[Hashable, Fraction]) -> bool:
        """Add ``vec``; return True if it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        pivot = min(v, key=repr)
        inv = 1 / v[pivot]
        v = {k: c * inv for k, c in v.items()}
        for row in self.rows.values():
            c = row.get(pivot)
            if c:
                for key, val in v.items():
                    nv = row.get(key, 0) - c * val
                    if nv:
                        row[key] = nv
                    else:
                        row.pop(key, None)
        self.rows[pivot] = v
        return True

    def extend(self, vecs: Iterable[Mapping[Hashable, Fraction]]) -> int:
        return sum(self.insert(v) for v in vecs)


def rank(vecs: Iterable[Mapping[Hashable, Fraction]]) -> int:
    e = Echelon()
    e.extend(vecs)
    return e.rank
