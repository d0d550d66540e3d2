"""Decomposition of plane polynomial automorphisms into affine and elementary moves.

Convention: a list of moves is applied left to right to the pair
``(x1, x2)``.  Applying a move to a pair ``(P1, P2)`` gives

* ``ELEMENTARY(target=2, p)``: ``(P1, P2 + p(P1))`` (target 1 symmetric),
* ``AFFINE(A, v)``: ``A @ (P1, P2) + v``,
* ``SWAP``: ``(P2, P1)``.

So the pair produced by ``[m1, m2, ..., mk]`` is the map ``mk o ... o m1``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .errors import ConstantGenerator, NotAutomorphism
from .poly import Polynomial, VarSpace, Xspace, format_poly, substitute, xspace

Pair = Tuple[Polynomial, Polynomial]
Matrix2 = Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]

SHIFT_SPACE = Xspace(1)


class MoveKind(str, enum.Enum):
    ELEMENTARY = "ELEMENTARY"
    AFFINE = "AFFINE"
    SWAP = "SWAP"


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    target: Optional[int] = None
    shift: Optional[Polynomial] = None
    matrix: Optional[Matrix2] = None
    vector: Optional[Tuple[Fraction, Fraction]] = None

    def __post_init__(self):
        if self.kind is MoveKind.ELEMENTARY:
            if self.target not in (1, 2):
                raise ValueError("elementary target must be 1 or 2")
            if self.shift is None or self.shift.space != SHIFT_SPACE:
                raise ValueError("elementary shift must be a polynomial in X1")
            if self.shift.is_zero():
                raise ValueError("zero shift is the identity and is never a move")
        elif self.kind is MoveKind.AFFINE:
            (a, b), (c, d) = self.matrix
            if a * d - b * c == 0:
                raise ValueError("affine matrix is singular")

    @classmethod
    def elementary(cls, target: int, shift: Polynomial) -> "Move":
        return cls(MoveKind.ELEMENTARY, target=target, shift=shift)

    @classmethod
    def affine(cls, matrix, vector=(0, 0)) -> "Move":
        m = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        v = tuple(Fraction(x) for x in vector)
        return cls(MoveKind.AFFINE, matrix=m, vector=v)

    @classmethod
    def swap(cls) -> "Move":
        return cls(MoveKind.SWAP)

    def apply(self, pair: Pair) -> Pair:
        p1, p2 = pair
        if self.kind is MoveKind.SWAP:
            return p2, p1
        if self.kind is MoveKind.ELEMENTARY:
            if self.target == 2:
                return p1, p2 + substitute(self.shift, [p1])
            return p1 + substitute(self.shift, [p2]), p2
        (a, b), (c, d) = self.matrix
        v1, v2 = self.vector
        return p1 * a + p2 * b + v1, p1 * c + p2 * d + v2

    def inverse(self) -> "Move":
        if self.kind is MoveKind.SWAP:
            return self
        if self.kind is MoveKind.ELEMENTARY:
            return Move.elementary(self.target, -self.shift)
        (a, b), (c, d) = self.matrix
        det = a * d - b * c
        inv = ((d / det, -b / det), (-c / det, a / det))
        v1, v2 = self.vector
        w = (-(inv[0][0] * v1 + inv[0][1] * v2), -(inv[1][0] * v1 + inv[1][1] * v2))
        return Move.affine(inv, w)

    def is_identity(self) -> bool:
        return (self.kind is MoveKind.AFFINE and self.matrix == ((1, 0), (0, 1))
                and self.vector == (0, 0))

    def __str__(self):
        if self.kind is MoveKind.SWAP:
            return "swap"
        if self.kind is MoveKind.ELEMENTARY:
            other = 3 - self.target
            body = format_poly(self.shift).replace("X1", f"x{other}")
            return f"elementary x{self.target} += {body}"
        (a, b), (c, d) = self.matrix
        v1, v2 = self.vector
        return f"affine [[{a}, {b}], [{c}, {d}]] + [{v1}, {v2}]"

    def to_dict(self) -> dict:
        out = {"kind": self.kind.value}
        if self.kind is MoveKind.ELEMENTARY:
            out["target"] = self.target
            out["shift"] = format_poly(self.shift)
        elif self.kind is MoveKind.AFFINE:
            out["matrix"] = [[str(x) for x in row] for row in self.matrix]
            out["vector"] = [str(x) for x in self.vector]
        return out


def identity_pair(space: VarSpace = None) -> Pair:
    space = space or xspace(2)
    return Polynomial.var(1, space), Polynomial.var(2, space)


def compose_moves(moves: Sequence[Move], space: VarSpace = None) -> Pair:
    pair = identity_pair(space)
    for mv in moves:
        pair = mv.apply(pair)
    return pair


def inverse_moves(moves: Sequence[Move]) -> List[Move]:
    return [mv.inverse() for mv in reversed(moves)]


def apply_moves(moves: Sequence[Move], pair: Pair) -> Pair:
    for mv in moves:
        pair = mv.apply(pair)
    return pair


def inverse_abstract(moves: Sequence[Move]) -> Pair:
    """Abstract polynomials ``(G1, G2)`` in X1, X2 with ``Gj(f1, f2) = xj``."""
    return compose_moves(inverse_moves(moves), Xspace(2))


# -- reduction ------------------------------------------------------------------


class RejectReason(str, enum.Enum):
    SINGULAR_AFFINE = "SingularAffine"
    DEGREE_NOT_DIVISIBLE = "DegreeNotDivisible"
    LEADING_FORMS_NOT_PROPORTIONAL = "LeadingFormsNotProportional"
    DEGENERATE_CONSTANT = "DegenerateConstant"
    CONSTANT_INPUT = "ConstantInput"


@dataclass(frozen=True)
class AffineBase:
    move: Move


@dataclass(frozen=True)
class Reduced:
    """``moves`` (an optional swap, then one elementary move) applied to the
    input pair produce ``pair``, whose degree sum is strictly smaller."""

    moves: Tuple[Move, ...]
    pair: Pair

    @property
    def move(self) -> Move:
        return self.moves[-1]


@dataclass(frozen=True)
class Reject:
    reason: RejectReason
    detail: str = ""


def _top_form(p: Polynomial) -> Polynomial:
    return p.homogeneous_component(p.degree())


def _linear_part(p: Polynomial) -> Tuple[Fraction, Fraction, Fraction]:
    return p.coefficient((1, 0)), p.coefficient((0, 1)), p.coefficient((0, 0))


def reduction_step(f1: Polynomial, f2: Polynomial) -> Union[AffineBase, Reduced, Reject]:
    if f1.is_constant() or f2.is_constant():
        raise ConstantGenerator("reduction needs two nonconstant polynomials")
    d1, d2 = f1.degree(), f2.degree()
    if d1 == 1 and d2 == 1:
        a, b, v1 = _linear_part(f1)
        c, d, v2 = _linear_part(f2)
        if a * d - b * c == 0:
            return Reject(RejectReason.SINGULAR_AFFINE, "linear parts are proportional")
        return AffineBase(Move.affine(((a, b), (c, d)), (v1, v2)))
    moves: List[Move] = []
    if d1 > d2:
        moves.append(Move.swap())
        f1, f2 = f2, f1
        d1, d2 = d2, d1
    if d2 % d1:
        return Reject(RejectReason.DEGREE_NOT_DIVISIBLE, f"{d1} does not divide {d2}")
    e = d2 // d1
    lead2, base = _top_form(f2), _top_form(f1) ** e
    try:
        ratio = lead2.exact_div(base)
    except ValueError:
        ratio = None
    if ratio is None or not ratio.is_constant():
        return Reject(RejectReason.LEADING_FORMS_NOT_PROPORTIONAL,
                      f"leading form of degree {d2} is not a constant times the other leading form to the power {e}")
    c = ratio.constant_value()
    shift = Polynomial.monomial((e,), SHIFT_SPACE, -c)
    moves.append(Move.elementary(2, shift))
    new2 = f2 - f1 ** e * c
    if new2.is_constant():
        return Reject(RejectReason.DEGENERATE_CONSTANT, "reduced polynomial is constant")
    return Reduced(tuple(moves), (f1, new2))


@dataclass(frozen=True)
class Decomposition:
    moves: Tuple[Move, ...]
    original: Pair
    steps: int = field(default=0)

    def compose(self) -> Pair:
        return compose_moves(self.moves, self.original[0].space)

    def verify(self) -> bool:
        return self.compose() == tuple(self.original)


def decompose(f1: Polynomial, f2: Polynomial) -> Decomposition:
    """Write ``(f1, f2)`` as a composition of moves.

    Raises :class:`~tamepoly.errors.NotAutomorphism` with the reason the
    reduction got stuck; that happens exactly when the pair is not an
    automorphism.
    """
    if f1.is_constant() or f2.is_constant():
        raise NotAutomorphism(RejectReason.CONSTANT_INPUT, "constant coordinate")
    original = (f1, f2)
    tail: List[Move] = []  # inverses of the reducing moves, outermost last
    pair = original
    steps = 0
    while True:
        step = reduction_step(*pair)
        if isinstance(step, Reject):
            raise NotAutomorphism(step.reason, step.detail)
        if isinstance(step, AffineBase):
            head = [] if step.move.is_identity() else [step.move]
            moves = head + tail
            return Decomposition(tuple(moves), original, steps)
        before = pair[0].degree() + pair[1].degree()
        pair = step.pair
        after = pair[0].degree() + pair[1].degree()
        assert after < before, "degree sum must strictly decrease"
        tail = inverse_moves(step.moves) + tail
        steps += 1


# -- random generation ------------------------------------------------------------


def _random_rational(rng: random.Random, bound: int, nonzero: bool = False) -> Fraction:
    while True:
        num = rng.randint(-bound, bound)
        den = rng.randint(1, bound)
        if num or not nonzero:
            return Fraction(num, den)


def random_tame(seed, move_count: int, degree_budget: int = 30, coeff_bound: int = 3,
                max_shift_degree: int = None) -> Tuple[Pair, List[Move]]:
    """Compose ``move_count`` random elementary/affine/swap moves.

    Elementary steps whose result would exceed ``degree_budget`` are
    dropped (the step is aborted, not retried), so fewer moves may be
    returned than requested.
    """
    if degree_budget < 1 or coeff_bound < 1 or move_count < 0:
        raise ValueError("budget parameters must be positive")
    rng = random.Random(seed)
    max_shift_degree = max_shift_degree or degree_budget
    pair = identity_pair()
    moves: List[Move] = []
    for _ in range(move_count):
        roll = rng.random()
        if roll < 0.65:
            target = rng.choice((1, 2))
            source_deg = pair[2 - target].degree()
            top = max(1, min(max_shift_degree, degree_budget // max(1, source_deg)))
            e = rng.randint(1, min(top, 4)) if rng.random() < 0.8 else rng.randint(1, top)
            terms = {(e,): _random_rational(rng, coeff_bound, nonzero=True)}
            for low in range(e):
                if rng.random() < 0.35:
                    terms[(low,)] = _random_rational(rng, coeff_bound)
            mv = Move.elementary(target, Polynomial(terms, SHIFT_SPACE))
        elif roll < 0.9:
            while True:
                mat = [[_random_rational(rng, coeff_bound) for _ in range(2)] for _ in range(2)]
                if mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]:
                    break
            vec = [_random_rational(rng, coeff_bound) for _ in range(2)]
            mv = Move.affine(mat, vec)
        else:
            mv = Move.swap()
        candidate = mv.apply(pair)
        if max(p.degree() for p in candidate) > degree_budget:
            continue
        pair = candidate
        moves.append(mv)
    return pair, moves
