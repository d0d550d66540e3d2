"""Seeded verification campaigns over random instances.

Each trial draws its own generator from ``(seed, trial index)``, so the
outcome of a trial does not depend on which other trials or statements
run, and parallel runs aggregate to the same summary.
"""

from __future__ import annotations

import json
import random
from collections import OrderedDict
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from .bounds import caut_check, cn_bound, csu_bound, dg1_check, main_bound
from .calculus import PolySystem, chain_rule_residual
from .errors import VacuousCheck
from .grading import hat_decomposition, hat_derivative_consistency, s_values_m2
from .parachute import check_para_inequality, parachute
from .poly import format_poly
from .sampling import random_abstract, random_abstract_for, random_resonant_pair, random_system
from .tame import apply_moves, compose_moves, decompose, inverse_abstract, inverse_moves, random_tame

STATEMENTS = ("est", "para", "chain", "main", "cn", "csu", "hat", "aut", "dg1", "caut", "tame")

GENERAL = {"est", "para", "chain"}
PAIR = {"main", "cn", "csu", "hat"}
AUTO = {"aut", "dg1", "caut", "tame"}


@dataclass(frozen=True)
class Outcome:
    statement: str
    trial: int
    status: str  # pass | skip | inconclusive | violation
    margin: Optional[int] = None
    detail: str = ""


def _trial_rng(seed: int, trial: int, family: str) -> random.Random:
    return random.Random(f"{seed}:{trial}:{family}")


def _describe(sys: PolySystem, g=None) -> str:
    text = "(" + ", ".join(format_poly(f) for f in sys.polys) + ")"
    if g is not None:
        text += f" G={format_poly(g)}"
    return text


def _from_report(name: str, trial: int, rep, detail: str) -> Outcome:
    if rep.holds is None:
        return Outcome(name, trial, "skip", detail=detail)
    if rep.holds:
        return Outcome(name, trial, "pass", rep.lhs - rep.rhs, detail)
    return Outcome(name, trial, "violation" if rep.asserted else "inconclusive", rep.lhs - rep.rhs, detail)


def run_trial(seed: int, trial: int, statements: Sequence[str], max_n: int = 4, max_m: int = 3,
              max_deg: int = 6) -> List[Outcome]:
    wanted = set(statements)
    out: List[Outcome] = []

    if wanted & GENERAL:
        rng = _trial_rng(seed, trial, "general")
        sys = random_system(rng, max_n=max_n, max_m=max_m, max_deg=max_deg)
        g = random_abstract(rng, sys.m, max_deg=3)
        present = [j for j in range(1, sys.m + 1) if g.degree_in(j) > 0]
        i = rng.choice(present) if present and rng.random() < 0.9 else rng.randint(1, sys.m)
        top_k = max(0, int(g.degree_in(i)))
        k = rng.randint(0, min(3, top_k)) if rng.random() < 0.9 else rng.randint(0, 3)
        idx = tuple(sorted(rng.sample(range(1, sys.n + 1), sys.m)))
        detail = _describe(sys, g)
        try:
            rep = parachute(sys)
            est_ok = True
        except AssertionError:
            est_ok = False
        if "est" in wanted:
            if est_ok:
                margin = min(rep.nabla, rep.sum_d_minus_m - rep.nabla)
                out.append(Outcome("est", trial, "pass", margin, _describe(sys)))
            else:
                out.append(Outcome("est", trial, "violation", None, _describe(sys)))
        if "para" in wanted:
            try:
                pr = check_para_inequality(sys, g, i, k, nabla=rep.nabla if est_ok else None)
                out.append(_from_report("para", trial, pr, f"{detail} i={i} k={k}"))
            except VacuousCheck:
                out.append(Outcome("para", trial, "skip", detail=f"{detail} i={i} k={k} vacuous"))
        if "chain" in wanted:
            residual = chain_rule_residual(sys, g, idx)
            out.append(Outcome("chain", trial, "pass" if residual.is_zero() else "violation", 0,
                               f"{detail} vars={idx}"))

    if wanted & PAIR:
        rng = _trial_rng(seed, trial, "pair")
        cancelling = None
        if rng.random() < 0.5:
            rp = random_resonant_pair(rng, max_n=max(2, min(max_n, 3)), max_deg=max_deg)
            sys, cancelling = rp.system, rp.cancelling
        else:
            sys = random_system(rng, max_n=max(2, max_n), max_m=2, max_deg=max_deg,
                                n=rng.randint(2, max(2, max_n)), m=2)
        g = random_abstract_for(rng, sys, max_deg=4, cancelling=cancelling)
        i = rng.randint(1, 2)
        nabla = parachute(sys).nabla
        s = s_values_m2(sys)[i - 1]
        detail = f"{_describe(sys, g)} i={i}"
        if "main" in wanted:
            out.append(_from_report("main", trial, main_bound(sys, g, i, s, nabla), detail))
        if "cn" in wanted:
            mb = main_bound(sys, g, i, s, nabla)
            cb = cn_bound(sys, g, i, s, nabla)
            o = _from_report("cn", trial, cb, detail)
            if cb.rhs != mb.rhs:
                o = Outcome("cn", trial, "violation", cb.lhs - cb.rhs, detail + " rhs differs from main")
            out.append(o)
        if "csu" in wanted:
            out.append(_from_report("csu", trial, csu_bound(sys, g, i, nabla), detail))
        if "hat" in wanted:
            hat = hat_decomposition(sys, g)
            ok = True
            for kk in range(1, max(hat.h_coeffs) + 1):
                if not hat_derivative_consistency(sys, g, kk):
                    ok = False
            out.append(Outcome("hat", trial, "pass" if ok else "violation", 0, detail))

    if wanted & AUTO:
        rng = _trial_rng(seed, trial, "auto")
        pair, moves = random_tame(rng.randrange(2 ** 32), rng.randint(1, 5), degree_budget=30)
        sys = PolySystem(pair)
        detail = "(" + ", ".join(format_poly(f) for f in pair) + ")"
        nabla = parachute(sys).nabla
        total = sum(sys.degrees) - 2
        if "aut" in wanted:
            out.append(Outcome("aut", trial, "pass" if nabla == total else "violation", 0, detail))
        s_vals = s_values_m2(sys)
        if "dg1" in wanted:
            # one outcome per automorphism: the worst of the two coordinate functions
            # G_j(f) = x_j, obtained by undoing the moves on (f1, f2)
            xs = apply_moves(inverse_moves(moves), pair)
            found = [_from_report("dg1", trial, dg1_check(sys, G, s_vals, nabla, composed=x), detail)
                     for G, x in zip(inverse_abstract(moves), xs)]
            rank = {"violation": 0, "inconclusive": 1, "pass": 2, "skip": 3}
            out.append(min(found, key=lambda o: (rank[o.status], o.margin if o.margin is not None else 0)))
        if "caut" in wanted:
            out.append(_from_report("caut", trial, caut_check(sys, s_vals, nabla), detail))
        if "tame" in wanted:
            try:
                dec = decompose(*pair)
                ok = compose_moves(dec.moves) == pair
            except Exception as exc:  # any failure on a genuine automorphism is a bug
                ok = False
                detail += f" {exc}"
            out.append(Outcome("tame", trial, "pass" if ok else "violation", 0, detail))
    return out


def _run_chunk(args) -> List[Outcome]:
    seed, trial, statements, max_n, max_m, max_deg = args
    return run_trial(seed, trial, statements, max_n, max_m, max_deg)


def run_campaign(seed: int, trials: int, statements: Sequence[str] = STATEMENTS, max_n: int = 4,
                 max_m: int = 3, max_deg: int = 6, parallel: int = 0) -> Dict:
    unknown = [s for s in statements if s not in STATEMENTS]
    if unknown:
        raise ValueError(f"unknown statements: {', '.join(unknown)}")
    if trials < 0 or max_n < 1 or max_m < 1 or max_deg < 1:
        raise ValueError("parameters must be positive")
    statements = [s for s in STATEMENTS if s in set(statements)]
    jobs = [(seed, t, tuple(statements), max_n, max_m, max_deg) for t in range(trials)]
    if parallel and parallel > 1 and trials > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_run_chunk, jobs, chunksize=max(1, trials // (4 * parallel))))
    else:
        results = [_run_chunk(job) for job in jobs]
    return summarize(seed, trials, statements, [o for chunk in results for o in chunk],
                     dict(max_n=max_n, max_m=max_m, max_deg=max_deg))


def summarize(seed: int, trials: int, statements: Sequence[str], outcomes: List[Outcome],
              params: Dict) -> Dict:
    outcomes = sorted(outcomes, key=lambda o: (STATEMENTS.index(o.statement), o.trial))
    per: Dict[str, Dict] = OrderedDict()
    for name in statements:
        per[name] = {"pass": 0, "skip": 0, "inconclusive": 0, "violation": 0, "tightest": None,
                     "violations": []}
    for o in outcomes:
        entry = per[o.statement]
        entry[o.status] += 1
        if o.status == "pass" and o.margin is not None:
            best = entry["tightest"]
            if best is None or o.margin < best["margin"]:
                entry["tightest"] = {"trial": o.trial, "margin": o.margin, "instance": o.detail}
        if o.status == "violation":
            entry["violations"].append({"trial": o.trial, "instance": o.detail})
    total = sum(e["violation"] for e in per.values())
    return {"seed": seed, "trials": trials, **params, "statements": per, "violations": total}


def summary_text(summary: Dict) -> str:
    lines = [f"seed {summary['seed']}  trials {summary['trials']}  "
             f"max_n {summary['max_n']}  max_m {summary['max_m']}  max_deg {summary['max_deg']}"]
    for name, e in summary["statements"].items():
        line = (f"  {name:<6} pass {e['pass']:>5}  skip {e['skip']:>4}  "
                f"inconclusive {e['inconclusive']:>3}  violations {e['violation']:>3}")
        if e["tightest"] is not None:
            line += f"  tightest margin {e['tightest']['margin']} (trial {e['tightest']['trial']})"
        lines.append(line)
    lines.append(f"total violations: {summary['violations']}")
    return "\n".join(lines)


def summary_json(summary: Dict) -> str:
    return json.dumps(summary, sort_keys=True, indent=2)
