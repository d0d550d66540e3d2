"""Gradients, jacobian minors and the algebraic-independence test."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .errors import ConstantGenerator, DependentSystem, InvalidIndex, VarspaceMismatch
from .poly import Polynomial, VarSpace, Xspace, substitute


@dataclass(frozen=True)
class PolySystem:
    """An ordered tuple ``f_1..f_m`` of polynomials in ``x1..xn``.

    Constant generators are rejected unless ``allow_constants`` is set.
    """

    polys: Tuple[Polynomial, ...]
    allow_constants: bool = False
    _independent: Dict[str, bool] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        polys = tuple(self.polys)
        object.__setattr__(self, "polys", polys)
        if not polys:
            raise InvalidIndex("a system needs at least one polynomial")
        space = polys[0].space
        if space.prefix != "x":
            raise VarspaceMismatch("system polynomials must live in the x-space")
        for f in polys:
            if f.space != space:
                raise VarspaceMismatch("system polynomials must share one variable space")
        if len(polys) > space.size:
            raise InvalidIndex(f"m={len(polys)} generators exceed n={space.size} variables")
        if not self.allow_constants:
            for i, f in enumerate(polys, start=1):
                if f.is_constant():
                    raise ConstantGenerator(f"f{i} is constant")

    @property
    def n(self) -> int:
        return self.polys[0].nvars

    @property
    def m(self) -> int:
        return len(self.polys)

    @property
    def space(self) -> VarSpace:
        return self.polys[0].space

    @property
    def abstract_space(self) -> VarSpace:
        return Xspace(self.m)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(f.degree() for f in self.polys)

    def __len__(self):
        return self.m

    def __getitem__(self, i):
        return self.polys[i]

    def __iter__(self):
        return iter(self.polys)

    def compose(self, g: Polynomial) -> Polynomial:
        """``G = g(f_1, ..., f_m)``."""
        if g.space != self.abstract_space:
            raise VarspaceMismatch(f"abstract polynomial must live in {self.abstract_space}")
        return substitute(g, self.polys)

    def replace(self, i: int, f: Polynomial, allow_constants: bool = False) -> "PolySystem":
        """Copy with the i-th generator (1-based) replaced."""
        polys = list(self.polys)
        polys[i - 1] = f
        return PolySystem(tuple(polys), allow_constants=allow_constants or self.allow_constants)


def gradient(f: Polynomial) -> Tuple[Polynomial, ...]:
    return tuple(f.partial(j) for j in range(1, f.nvars + 1))


def gradient_matrix(sys: PolySystem) -> List[Tuple[Polynomial, ...]]:
    return [gradient(f) for f in sys.polys]


def determinant(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Exact determinant of a square polynomial matrix.

    Cofactor expansion up to 3x3, fraction-free Bareiss elimination beyond.
    """
    k = len(rows)
    if any(len(r) != k for r in rows):
        raise ValueError("matrix is not square")
    if k == 0:
        raise ValueError("empty matrix")
    if k <= 3:
        return cofactor_determinant(rows)
    return bareiss_determinant(rows)


def cofactor_determinant(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    k = len(rows)
    if k == 1:
        return rows[0][0]
    if k == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(k):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in (list(row) for row in rows[1:])]
        term = entry * cofactor_determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return Polynomial.zero(rows[0][0].space)
    return total


def bareiss_determinant(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    a = [list(r) for r in rows]
    k = len(a)
    space = a[0][0].space
    sign = 1
    prev = Polynomial.constant(1, space)
    for p in range(k - 1):
        if a[p][p].is_zero():
            swap = next((r for r in range(p + 1, k) if not a[r][p].is_zero()), None)
            if swap is None:
                return Polynomial.zero(space)
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        for i in range(p + 1, k):
            for j in range(p + 1, k):
                num = a[i][j] * a[p][p] - a[i][p] * a[p][j]
                a[i][j] = num.exact_div(prev)
        prev = a[p][p]
    det = a[k - 1][k - 1]
    return -det if sign < 0 else det


def _check_indices(var_indices: Sequence[int], n: int, m: int):
    if len(var_indices) != m:
        raise InvalidIndex(f"need {m} variable indices, got {len(var_indices)}")
    if len(set(var_indices)) != len(var_indices):
        raise InvalidIndex(f"repeated variable index in {tuple(var_indices)}")
    for j in var_indices:
        if not 1 <= j <= n:
            raise InvalidIndex(f"variable index {j} outside 1..{n}")


def jacobian_minor(sys: PolySystem, var_indices: Sequence[int]) -> Polynomial:
    """``det(d f_i / d x_{i_j})`` for the chosen (1-based) variable indices."""
    _check_indices(var_indices, sys.n, sys.m)
    return determinant([[f.partial(j) for j in var_indices] for f in sys.polys])


def _minor_of(polys: Sequence[Polynomial], var_indices: Sequence[int]) -> Polynomial:
    return determinant([[f.partial(j) for j in var_indices] for f in polys])


def minor_degrees(sys: PolySystem) -> Dict[Tuple[int, ...], object]:
    """Degree of every maximal minor, keyed by the increasing index tuple."""
    grads = gradient_matrix(sys)
    out = {}
    for idx in combinations(range(1, sys.n + 1), sys.m):
        minor = determinant([[g[j - 1] for j in idx] for g in grads])
        out[idx] = minor.degree()
    return out


def is_algebraically_independent(sys: PolySystem) -> bool:
    """True iff some maximal minor of the gradient matrix is nonzero."""
    cached = sys._independent.get("value")
    if cached is not None:
        return cached
    grads = gradient_matrix(sys)
    result = False
    for idx in combinations(range(1, sys.n + 1), sys.m):
        if not determinant([[g[j - 1] for j in idx] for g in grads]).is_zero():
            result = True
            break
    sys._independent["value"] = result
    return result


def max_jacobian_degree(sys: PolySystem) -> int:
    degs = minor_degrees(sys)
    best = max(degs.values())
    if best == float("-inf"):
        raise DependentSystem("every maximal jacobian minor vanishes")
    sys._independent["value"] = True
    return int(best)


def chain_rule_residual(sys: PolySystem, g: Polynomial, var_indices: Sequence[int]) -> Polynomial:
    """``j(f_1..f_{m-1}, G) - j(f_1..f_m) * dG/df_m``; identically zero."""
    _check_indices(var_indices, sys.n, sys.m)
    G = sys.compose(g)
    lhs = _minor_of(sys.polys[:-1] + (G,), var_indices)
    dG = sys.compose(g.partial(sys.m))
    return lhs - jacobian_minor(sys, var_indices) * dG
