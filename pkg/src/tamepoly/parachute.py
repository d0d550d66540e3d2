"""The parachute of a polynomial system and the derivative degree inequality."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .calculus import PolySystem, minor_degrees
from .errors import ConstantGenerator, DependentSystem, InvalidIndex, VacuousCheck
from .poly import NEG_INFINITY, Polynomial
from .reports import BoundReport, Statement


@dataclass(frozen=True)
class ParachuteReport:
    nabla: int
    sum_d_minus_m: int
    max_minor_degree: int
    per_subset_degrees: Dict[Tuple[int, ...], object]

    def to_dict(self) -> dict:
        return {
            "nabla": self.nabla,
            "sum_d_minus_m": self.sum_d_minus_m,
            "max_minor_degree": self.max_minor_degree,
            "per_subset_degrees": {
                ",".join(map(str, k)): (None if v == NEG_INFINITY else v)
                for k, v in self.per_subset_degrees.items()
            },
        }


def parachute(sys: PolySystem) -> ParachuteReport:
    """Sum of degrees minus m minus the largest degree of a maximal jacobian minor."""
    degs = sys.degrees
    for i, d in enumerate(degs, start=1):
        if d == NEG_INFINITY or d < 1:
            raise ConstantGenerator(f"f{i} is constant")
    per_subset = minor_degrees(sys)
    best = max(per_subset.values())
    if best == NEG_INFINITY:
        raise DependentSystem("every maximal jacobian minor vanishes")
    sys._independent["value"] = True
    best = int(best)
    total = sum(degs) - sys.m
    nabla = total - best
    # both sides of the estimate 0 <= nabla <= sum(d) - m
    assert 0 <= nabla <= total, (nabla, total)
    return ParachuteReport(nabla, total, best, per_subset)


def derivative_wrt_generator(g: Polynomial, i: int, k: int = 1) -> Polynomial:
    """k-th formal partial of ``g`` with respect to ``X_i``."""
    if not 1 <= i <= g.nvars:
        raise InvalidIndex(f"generator index {i} outside 1..{g.nvars}")
    for _ in range(k):
        g = g.partial(i)
    return g


def check_para_inequality(sys: PolySystem, g: Polynomial, i: int, k: int = 1,
                          nabla: int = None) -> BoundReport:
    """Check ``deg G >= deg(d^kG/df_i^k) + k*d_i - k*nabla``.

    The k-th derivative is taken formally on ``g`` and composed once.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    dkg = derivative_wrt_generator(g, i, k)
    if dkg.is_zero():
        raise VacuousCheck(f"d^{k} g / dX{i}^{k} is zero")
    if nabla is None:
        nabla = parachute(sys).nabla
    d_i = sys.degrees[i - 1]
    lhs = sys.compose(g).degree()
    deg_dk = sys.compose(dkg).degree()
    rhs = deg_dk + k * d_i - k * nabla
    return BoundReport(
        statement=Statement.PARA,
        i=i,
        lhs=int(lhs),
        rhs=int(rhs),
        holds=lhs >= rhs,
        params={"k": k, "d_i": d_i, "nabla": nabla, "deg_dkG": int(deg_dk)},
    )
