"""Leading forms, the hat construction, and the s_i / sigma_i invariants.

The leading form of a polynomial is its top-degree homogeneous component
(all terms of maximal total degree), so products of leading forms are
leading forms of products and the graded algebra is made of homogeneous
elements.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .calculus import PolySystem
from .errors import CapTooSmall, InvalidIndex, VacuousCheck, WrongArity, ZeroPolynomial
from .linalg import Echelon
from .poly import Polynomial, format_poly


@dataclass(frozen=True)
class LeadingForm:
    form: Polynomial
    degree: int


def leading_form(p: Polynomial) -> LeadingForm:
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no leading form")
    d = p.degree()
    return LeadingForm(p.homogeneous_component(d), d)


# -- the hat construction -----------------------------------------------------


def split_by_variable(g: Polynomial, index: int) -> Dict[int, Polynomial]:
    """Write ``g = sum_i g_i * X_index^i``; returns ``{i: g_i}`` with g_i free of X_index."""
    j = index - 1
    parts: Dict[int, dict] = {}
    for mono, c in g.items():
        e = mono[j]
        parts.setdefault(e, {})[mono[:j] + (0,) + mono[j + 1:]] = c
    return {e: Polynomial(t, g.space) for e, t in sorted(parts.items())}


@dataclass(frozen=True)
class HatDecomposition:
    """``G = sum g_i f_p^i`` split along the pivot generator ``f_p``.

    ``h_coeffs`` maps each exponent in ``argmax_set`` to the leading form of
    ``g_i(f)``; ``G_hat`` is ``h`` evaluated at the leading form of ``f_p``.
    """

    pivot: int
    argmax_set: FrozenSet[int]
    h_coeffs: Dict[int, Polynomial]
    G_hat: Polynomial
    max_value: int
    pivot_form: Polynomial
    degree_G: object

    def h_text(self, var: str = "X") -> str:
        pieces = []
        for i in sorted(self.h_coeffs, reverse=True):
            c = self.h_coeffs[i]
            power = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            text = format_poly(c)
            if not power:
                pieces.append(text)
            elif c == 1:
                pieces.append(power)
            elif c == -1:
                pieces.append("-" + power)
            elif len(c) == 1:
                pieces.append(f"{text}*{power}")
            else:
                pieces.append(f"({text})*{power}")
        out = " + ".join(pieces)
        return out.replace("+ -", "- ")


def hat_decomposition(sys: PolySystem, g: Polynomial, pivot: Optional[int] = None) -> HatDecomposition:
    if g.is_zero():
        raise ZeroPolynomial("abstract polynomial is zero")
    p = sys.m if pivot is None else pivot
    if not 1 <= p <= sys.m:
        raise InvalidIndex(f"pivot {p} outside 1..{sys.m}")
    d_p = sys.degrees[p - 1]
    fbar = leading_form(sys.polys[p - 1]).form

    values: Dict[int, int] = {}
    composed: Dict[int, Polynomial] = {}
    for i, coeff in split_by_variable(g, p).items():
        gi = sys.compose(coeff)
        if gi.is_zero():
            # only possible for a dependent system
            raise ZeroPolynomial(f"coefficient of X{p}^{i} composes to zero")
        composed[i] = gi
        values[i] = gi.degree() + i * d_p
    top = max(values.values())
    argmax = frozenset(i for i, v in values.items() if v == top)
    h = {i: leading_form(composed[i]).form for i in sorted(argmax)}

    G_hat = Polynomial.zero(sys.space)
    for i, c in h.items():
        G_hat = G_hat + c * fbar ** i
    deg_G = sys.compose(g).degree()
    # G_hat vanishes exactly when the degree of G drops below the maximum
    assert G_hat.is_zero() == (deg_G < top), (format_poly(G_hat), deg_G, top)
    return HatDecomposition(p, argmax, h, G_hat, top, fbar, deg_G)


def _falling(i: int, k: int) -> int:
    out = 1
    for t in range(k):
        out *= i - t
    return out


def h_derivative(hat: HatDecomposition, k: int) -> Dict[int, Polynomial]:
    """Coefficients of the k-th derivative of h in X."""
    return {i - k: c.scale(_falling(i, k)) for i, c in hat.h_coeffs.items() if i >= k}


def hat_derivative_consistency(sys: PolySystem, g: Polynomial, k: int,
                               pivot: Optional[int] = None) -> bool:
    """Compare the hat of the k-th derivative of ``g`` with ``h^(k)``.

    Checks that the argmax set shifts to ``{i - k : i in I, i >= k}``, that
    the coefficients are ``i(i-1)...(i-k+1)`` times the original ones, and
    that the hat equals ``h^(k)`` evaluated at the pivot's leading form.
    """
    p = sys.m if pivot is None else pivot
    hat = hat_decomposition(sys, g, p)
    hk = h_derivative(hat, k)
    if not hk:
        raise VacuousCheck(f"h^({k}) is zero")
    dg = g
    for _ in range(k):
        dg = dg.partial(p)
    hat_k = hat_decomposition(sys, dg, p)
    if hat_k.argmax_set != frozenset(hk):
        return False
    if hat_k.h_coeffs != hk:
        return False
    if hat_k.max_value != hat.max_value - k * sys.degrees[p - 1]:
        return False
    evaluated = Polynomial.zero(sys.space)
    for i, c in hk.items():
        evaluated = evaluated + c * hat.pivot_form ** i
    return evaluated == hat_k.G_hat


# -- s_i and sigma_i ----------------------------------------------------------


class SStatus(str, enum.Enum):
    EXACT_M2 = "EXACT_M2"
    UPPER_BOUND = "UPPER_BOUND"
    NO_RELATION_UP_TO_CAP = "NO_RELATION_UP_TO_CAP"


@dataclass(frozen=True)
class SValue:
    """Degree of the minimal polynomial of a generator's leading form.

    ``value`` is None exactly when ``status`` is NO_RELATION_UP_TO_CAP.
    """

    i: int
    value: Optional[int]
    status: SStatus
    cap: Optional[int] = None

    def __post_init__(self):
        if (self.value is None) != (self.status is SStatus.NO_RELATION_UP_TO_CAP):
            raise ValueError("value must be unset exactly for NO_RELATION_UP_TO_CAP")
        if self.value is not None and self.value < 1:
            raise ValueError("s must be a positive integer")

    @property
    def known(self) -> bool:
        return self.value is not None

    def to_dict(self) -> dict:
        return {"i": self.i, "value": self.value, "status": self.status.value, "cap": self.cap}

    @classmethod
    def from_dict(cls, data: dict) -> "SValue":
        return cls(data["i"], data["value"], SStatus(data["status"]), data.get("cap"))

    def __str__(self):
        if self.status is SStatus.EXACT_M2:
            return f"s{self.i} = {self.value} (exact, m=2)"
        if self.status is SStatus.UPPER_BOUND:
            return f"s{self.i} <= {self.value} (relation found, cap {self.cap})"
        return f"s{self.i} unknown (no relation up to degree {self.cap})"


def sigma(d1: int, d2: int) -> Tuple[int, int]:
    if d1 < 1 or d2 < 1:
        raise ValueError("degrees must be positive")
    g = gcd(d1, d2)
    return d2 // g, d1 // g


def s_values_m2(sys: PolySystem) -> Tuple[SValue, SValue]:
    if sys.m != 2:
        raise WrongArity(f"s values by formula need m = 2, got m = {sys.m}")
    s1, s2 = sigma(*sys.degrees)
    return SValue(1, s1, SStatus.EXACT_M2), SValue(2, s2, SStatus.EXACT_M2)


def default_cap(sys: PolySystem) -> int:
    return 2 * max(sys.degrees) ** 2


def _weighted_exponents(weights: Sequence[int], total: int) -> List[Tuple[int, ...]]:
    """All non-negative integer vectors b with sum(b_j * w_j) == total."""
    if not weights:
        return [()] if total == 0 else []
    w, rest = weights[0], weights[1:]
    out = []
    for b in range(total // w + 1):
        for tail in _weighted_exponents(rest, total - b * w):
            out.append((b,) + tail)
    return out


def s_value_bounded_search(sys: PolySystem, i: int, degree_cap: Optional[int] = None) -> SValue:
    """Smallest s such that the leading form of ``f_i`` satisfies a degree-s
    relation over the subalgebra generated by the other leading forms.

    Relations are searched one homogeneous degree ``D <= degree_cap`` at a
    time: with ``W_a`` the span of the products ``fbar_i^a * prod fbar_j^b_j``
    of degree D, a relation of X-degree exactly s exists iff ``W_s`` meets
    ``W_0 + ... + W_{s-1}``.  A hit is only an upper bound on the true s,
    which is taken over a possibly larger field.
    """
    if not 1 <= i <= sys.m:
        raise InvalidIndex(f"generator index {i} outside 1..{sys.m}")
    cap = default_cap(sys) if degree_cap is None else degree_cap
    forms = [leading_form(f).form for f in sys.polys]
    degs = sys.degrees
    d_i = degs[i - 1]
    if cap < d_i:
        raise CapTooSmall(f"cap {cap} is below deg f{i} = {d_i}")
    others = [j for j in range(sys.m) if j != i - 1]
    weights = [degs[j] for j in others]

    power_cache: Dict[Tuple[int, int], Polynomial] = {}

    def power(j: int, e: int) -> Polynomial:
        key = (j, e)
        if key not in power_cache:
            power_cache[key] = Polynomial.constant(1, sys.space) if e == 0 else power(j, e - 1) * forms[j]
        return power_cache[key]

    def block(a: int, D: int) -> List[dict]:
        vecs = []
        for b in _weighted_exponents(weights, D - a * d_i):
            prod_ = power(i - 1, a)
            for j, e in zip(others, b):
                if e:
                    prod_ = prod_ * power(j, e)
            vecs.append(prod_.terms)
        return vecs

    best: Optional[int] = None
    for D in range(1, cap + 1):
        top = D // d_i
        if best is not None:
            top = min(top, best - 1)
        if top < 1:
            continue
        lower = Echelon()
        lower.extend(block(0, D))
        for s in range(1, top + 1):
            ws = block(s, D)
            if not ws:
                continue
            alone = Echelon()
            alone.extend(ws)
            joint = lower.copy()
            joint.extend(ws)
            if joint.rank < lower.rank + alone.rank:
                best = s
                break
            lower = joint
        if best == 1:
            break
    if best is None:
        return SValue(i, None, SStatus.NO_RELATION_UP_TO_CAP, cap)
    return SValue(i, best, SStatus.UPPER_BOUND, cap)


def s_values(sys: PolySystem, degree_cap: Optional[int] = None) -> Tuple[SValue, ...]:
    """Exact values for m = 2, bounded search otherwise."""
    if sys.m == 2:
        return s_values_m2(sys)
    return tuple(s_value_bounded_search(sys, i, degree_cap) for i in range(1, sys.m + 1))
