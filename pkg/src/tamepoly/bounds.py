"""Degree lower bounds for elements of K[f_1, ..., f_m].

Every checker returns a :class:`~tamepoly.reports.BoundReport`.  The s_i
used by a check is recorded with its status:

* ``EXACT_M2``: the two-generator value d_j / gcd(d_1, d_2).  It never
  exceeds the true s_i, so the bound it yields is a theorem instance and a
  failure is reported as a violation.
* ``UPPER_BOUND``: a relation was found over a subfield, so the true s_i is
  at most this value.  A pass is conclusive, a failure is not
  (``asserted=False``).
* ``NO_RELATION_UP_TO_CAP``: s_i is unknown and the check is skipped.
"""

from __future__ import annotations

from typing import Dict, Optional, Sequence

from .calculus import PolySystem
from .errors import NotDegreeOne, NotSquareSystem, SUnknown, WrongArity, ZeroPolynomial
from .grading import SStatus, SValue, sigma
from .parachute import parachute
from .poly import Polynomial
from .reports import BoundReport, Statement


def degree_in_generator(g: Polynomial, i: int) -> int:
    """deg_{f_i} G, read off the abstract polynomial."""
    d = g.degree_in(i)
    return 0 if d == float("-inf") else int(d)


def _nabla(sys: PolySystem, nabla: Optional[int]) -> int:
    return parachute(sys).nabla if nabla is None else nabla


def _s_params(s: SValue) -> Dict[str, object]:
    return {"s_i": s.value, "s_status": s.status.value, "s_cap": s.cap}


def main_bound(sys: PolySystem, g: Polynomial, i: int, s: SValue,
               nabla: Optional[int] = None) -> BoundReport:
    """``deg G >= d_i * deg_{f_i}G - nabla * floor(deg_{f_i}G / s_i)``."""
    if g.is_zero():
        raise ZeroPolynomial("G must be nonzero")
    nabla = _nabla(sys, nabla)
    d_i = sys.degrees[i - 1]
    k = degree_in_generator(g, i)
    params = {"d_i": d_i, "nabla": nabla, "deg_fi_G": k, **_s_params(s)}
    lhs = int(sys.compose(g).degree())
    if not s.known:
        return BoundReport(Statement.MAIN, lhs, None, None, i=i, asserted=False, params=params,
                           skipped_reason="s unknown: no relation found up to the degree cap")
    q = k // s.value
    rhs = d_i * k - nabla * q
    params["q_i"] = q
    return BoundReport(Statement.MAIN, lhs, rhs, lhs >= rhs, i=i,
                       asserted=s.status is SStatus.EXACT_M2, params=params)


def cn_bound(sys: PolySystem, g: Polynomial, i: int, s: SValue,
             nabla: Optional[int] = None) -> BoundReport:
    """``deg G >= q_i * N_i + r_i * d_i`` with ``N_i = s_i d_i - nabla``."""
    if not s.known:
        raise SUnknown(f"s{i} unknown up to degree cap {s.cap}")
    if g.is_zero():
        raise ZeroPolynomial("G must be nonzero")
    nabla = _nabla(sys, nabla)
    d_i = sys.degrees[i - 1]
    k = degree_in_generator(g, i)
    q, r = divmod(k, s.value)
    N_i = s.value * d_i - nabla
    rhs = q * N_i + r * d_i
    lhs = int(sys.compose(g).degree())
    params = {"d_i": d_i, "nabla": nabla, "deg_fi_G": k, "N_i": N_i, "q_i": q, "r_i": r, **_s_params(s)}
    return BoundReport(Statement.CN, lhs, rhs, lhs >= rhs, i=i,
                       asserted=s.status is SStatus.EXACT_M2, params=params)


def csu_bound(sys: PolySystem, g: Polynomial, i: int, nabla: Optional[int] = None) -> BoundReport:
    """Two-generator bound ``deg G >= q_i * N + r_i * d_i`` with s_i replaced by sigma_i."""
    if sys.m != 2:
        raise WrongArity(f"needs m = 2, got m = {sys.m}")
    if g.is_zero():
        raise ZeroPolynomial("G must be nonzero")
    nabla = _nabla(sys, nabla)
    d1, d2 = sys.degrees
    s1, s2 = sigma(d1, d2)
    N = s1 * d1 - nabla
    if s2 * d2 - nabla != N:
        raise AssertionError("sigma_1 d_1 and sigma_2 d_2 differ")
    s_i = (s1, s2)[i - 1]
    d_i = (d1, d2)[i - 1]
    k = degree_in_generator(g, i)
    q, r = divmod(k, s_i)
    rhs = q * N + r * d_i
    lhs = int(sys.compose(g).degree())
    params = {"d_i": d_i, "nabla": nabla, "deg_fi_G": k, "N": N, "q_i": q, "r_i": r,
              "sigma_i": s_i, "s_i": s_i, "s_status": SStatus.EXACT_M2.value, "s_cap": None}
    return BoundReport(Statement.CSU, lhs, rhs, lhs >= rhs, i=i, params=params)


def dg1_check(sys: PolySystem, g: Polynomial, s_values: Sequence[SValue],
              nabla: Optional[int] = None, composed: Optional[Polynomial] = None) -> BoundReport:
    """For ``deg G = 1``: each i has ``deg_{f_i}G = 0`` or ``d_i = 1`` or ``N_i <= 1``.

    lhs is deg G = 1 and rhs the largest N_i among the indices not excused
    by the first two alternatives (0 if none), so ``holds`` is ``lhs >= rhs``.
    Indices whose s_i is unknown are listed in ``s_unknown_indices`` and
    left out of the verdict.

    ``composed`` may supply ``g(f_1..f_m)`` when the caller has computed it
    by a cheaper exact route (e.g. undoing the moves of an automorphism).
    """
    G = sys.compose(g) if composed is None else composed
    if G.degree() != 1:
        raise NotDegreeOne(f"deg G = {G.degree()}, expected 1")
    nabla = _nabla(sys, nabla)
    params: Dict[str, object] = {"nabla": nabla}
    rhs = 0
    asserted = True
    unknown = []
    for s in s_values:
        i = s.i
        d_i = sys.degrees[i - 1]
        k = degree_in_generator(g, i)
        params[f"d_{i}"] = d_i
        params[f"deg_f{i}_G"] = k
        params[f"s_{i}"] = s.value
        params[f"s_{i}_status"] = s.status.value
        if k == 0 or d_i == 1:
            params[f"case_{i}"] = "deg_fi_G=0" if k == 0 else "d_i=1"
            continue
        if not s.known:
            params[f"case_{i}"] = "s unknown"
            unknown.append(i)
            continue
        N_i = s.value * d_i - nabla
        params[f"N_{i}"] = N_i
        params[f"case_{i}"] = "N_i<=1" if N_i <= 1 else "N_i>1"
        rhs = max(rhs, N_i)
        if s.status is not SStatus.EXACT_M2:
            asserted = False
    holds = 1 >= rhs
    params["s_unknown_indices"] = unknown
    # with an upper-bound s the true N_i is smaller, so a pass still counts
    return BoundReport(Statement.DG1, 1, rhs, holds, asserted=asserted or holds, params=params)


def caut_check(sys: PolySystem, s_values: Sequence[SValue], nabla: Optional[int] = None) -> BoundReport:
    """Constraints on an automorphism ``(f_1..f_n)``.

    Verifies ``nabla = sum d - n``; for every i with ``d_i >= 2`` that
    ``s_i d_i <= sum d - n + 1`` (lhs is the right-hand side of this, rhs the
    largest ``s_i d_i``); and, when ``max d >= 2``, that ``s_max <= n - 1``
    for the generators of maximal degree.
    """
    if sys.m != sys.n:
        raise NotSquareSystem(f"m = {sys.m} but n = {sys.n}")
    nabla = _nabla(sys, nabla)
    degs = sys.degrees
    n = sys.n
    budget = sum(degs) - n + 1
    params: Dict[str, object] = {"nabla": nabla, "sum_d_minus_n": sum(degs) - n}
    nabla_ok = nabla == sum(degs) - n
    params["nabla_identity"] = nabla_ok
    rhs = 0
    ok = nabla_ok
    asserted = True
    unknown = []
    d_max = max(degs)
    for s in s_values:
        i = s.i
        d_i = degs[i - 1]
        params[f"d_{i}"] = d_i
        params[f"s_{i}"] = s.value
        params[f"s_{i}_status"] = s.status.value
        if d_i == 1:
            continue
        if not s.known:
            unknown.append(i)
            continue
        rhs = max(rhs, s.value * d_i)
        passed = s.value * d_i <= budget
        if d_i == d_max and d_max >= 2:
            passed = passed and s.value <= n - 1
        if not passed and s.status is not SStatus.EXACT_M2:
            asserted = False
        ok = ok and passed
    if d_max >= 2:
        maxima = [s.value for s in s_values if degs[s.i - 1] == d_max and s.known]
        if maxima:
            params["s_max"] = max(maxima)
    params["s_unknown_indices"] = unknown
    return BoundReport(Statement.CAUT, budget, rhs, ok, asserted=asserted or not nabla_ok, params=params)
