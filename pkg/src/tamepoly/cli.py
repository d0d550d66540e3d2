"""Command line front end.

System files are UTF-8 text::

    n=3
    x1 - 2*x2*(x2^2 + x1*x3) - x3*(x2^2 + x1*x3)^2
    x2 + x3*(x2^2 + x1*x3)
    x3
    G=X1 + X2^2

The first non-comment line declares the number of variables, every other
line holds one polynomial in ``x1..xn``, and an optional ``G=`` line gives
an abstract polynomial in ``X1..Xm``.  Blank lines and ``#`` comments are
ignored.

Exit codes: 0 success, 1 input error, 2 dependent system, 3 violated
assertion, 4 not an automorphism.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from typing import List, Optional

from . import bounds as B
from .calculus import PolySystem, is_algebraically_independent
from .errors import DependentSystem, NotAutomorphism, SUnknown, TamePolyError, VacuousCheck
from .fuzz import STATEMENTS, run_campaign, summary_json, summary_text
from .grading import s_value_bounded_search, s_values, s_values_m2
from .parachute import check_para_inequality, parachute
from .poly import Polynomial, Xspace, format_poly, parse, xspace
from .reports import BoundReport
from .tame import compose_moves, decompose

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DEPENDENT = 2
EXIT_VIOLATED = 3
EXIT_NOT_AUTOMORPHISM = 4


class InputError(TamePolyError):
    pass


@dataclass
class SystemFile:
    n: int
    polynomials: List[str]
    abstract_poly: Optional[str] = None
    _parsed: list = field(default_factory=list, repr=False, compare=False)

    @classmethod
    def parse_text(cls, text: str) -> "SystemFile":
        n = None
        polys: List[str] = []
        abstract = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if n is None:
                m = re.fullmatch(r"n\s*=\s*(\d+)", line)
                if not m:
                    raise InputError(f"line {lineno}: expected 'n=<int>' first, got {line!r}")
                n = int(m.group(1))
                if n < 1:
                    raise InputError(f"line {lineno}: n must be positive")
                continue
            m = re.fullmatch(r"G\s*=\s*(.+)", line)
            if m:
                if abstract is not None:
                    raise InputError(f"line {lineno}: more than one G= line")
                abstract = m.group(1)
                continue
            polys.append(line)
        if n is None:
            raise InputError("missing 'n=<int>' line")
        if not polys:
            raise InputError("no polynomials given")
        out = cls(n, polys, abstract)
        out.validate()
        return out

    def validate(self):
        space = xspace(self.n)
        self._parsed = [parse(p, space) for p in self.polynomials]
        if self.abstract_poly is not None:
            parse(self.abstract_poly, Xspace(len(self.polynomials)))

    @property
    def polys(self) -> List[Polynomial]:
        if not self._parsed:
            self.validate()
        return self._parsed

    def system(self) -> PolySystem:
        return PolySystem(tuple(self.polys))

    def abstract(self) -> Polynomial:
        if self.abstract_poly is None:
            raise InputError("this command needs a 'G=' line")
        return parse(self.abstract_poly, Xspace(len(self.polynomials)))


def _read(path: str) -> SystemFile:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc
    return SystemFile.parse_text(text)


def _independent_system(sf: SystemFile) -> PolySystem:
    sys_ = sf.system()
    if not is_algebraically_independent(sys_):
        raise DependentSystem("every maximal jacobian minor vanishes: the polynomials are dependent")
    return sys_


# -- commands -----------------------------------------------------------------------


def cmd_parachute(args) -> int:
    sf = _read(args.file)
    sys_ = _independent_system(sf)
    rep = parachute(sys_)
    if args.json:
        print(json.dumps(rep.to_dict(), sort_keys=True))
        return EXIT_OK
    print(f"degrees: {', '.join(map(str, sys_.degrees))}")
    print(f"sum(d) - m: {rep.sum_d_minus_m}")
    print(f"max minor degree: {rep.max_minor_degree}")
    print(f"parachute: {rep.nabla}")
    print("minor degrees:")
    for idx, d in rep.per_subset_degrees.items():
        label = ",".join(f"x{j}" for j in idx)
        print(f"  j({label}): {'zero' if d == float('-inf') else d}")
    return EXIT_OK


def _s_for(sys_: PolySystem, i: int, cap: Optional[int]):
    if sys_.m == 2:
        return s_values_m2(sys_)[i - 1]
    return s_value_bounded_search(sys_, i, cap)


def cmd_bounds(args) -> int:
    sf = _read(args.file)
    sys_ = _independent_system(sf)
    st = args.statement
    i = args.i if args.i is not None else sys_.m
    if not 1 <= i <= sys_.m:
        raise InputError(f"--i must lie in 1..{sys_.m}")
    nabla = parachute(sys_).nabla
    if st == "caut":
        report = B.caut_check(sys_, s_values(sys_, args.cap), nabla)
    else:
        g = sf.abstract()
        if st == "para":
            try:
                report = check_para_inequality(sys_, g, i, args.k, nabla)
            except VacuousCheck as exc:
                report = BoundReport(B.Statement.PARA, None, None, None, i=i, asserted=False,
                                     params={"k": args.k}, skipped_reason=str(exc))
        elif st == "main":
            report = B.main_bound(sys_, g, i, _s_for(sys_, i, args.cap), nabla)
        elif st == "cn":
            s = _s_for(sys_, i, args.cap)
            try:
                report = B.cn_bound(sys_, g, i, s, nabla)
            except SUnknown as exc:
                report = BoundReport(B.Statement.CN, None, None, None, i=i, asserted=False,
                                     params={"s_status": s.status.value, "s_cap": s.cap},
                                     skipped_reason=str(exc))
        elif st == "csu":
            report = B.csu_bound(sys_, g, i, nabla)
        else:  # dg1
            report = B.dg1_check(sys_, g, s_values(sys_, args.cap), nabla)
    if args.json:
        print(report.to_json())
    else:
        print(report.summary())
        for k, v in report.params.items():
            print(f"  {k}: {v}")
    return EXIT_VIOLATED if report.violated else EXIT_OK


def cmd_decompose(args) -> int:
    sf = _read(args.file)
    if sf.n != 2 or len(sf.polynomials) != 2:
        raise InputError("decompose needs n=2 and exactly two polynomials")
    f1, f2 = sf.polys
    try:
        dec = decompose(f1, f2)
    except NotAutomorphism as exc:
        if args.json:
            print(json.dumps({"automorphism": False, "reason": exc.reason.value, "detail": exc.detail},
                             sort_keys=True))
        else:
            print(f"not an automorphism: {exc.reason.value} ({exc.detail})")
        return EXIT_NOT_AUTOMORPHISM
    verified = None
    if args.verify:
        verified = compose_moves(dec.moves) == (f1, f2)
    if args.json:
        print(json.dumps({"automorphism": True, "moves": [m.to_dict() for m in dec.moves],
                          "verified": verified}, sort_keys=True))
    else:
        print(f"{len(dec.moves)} move(s), applied in order to (x1, x2):")
        for k, mv in enumerate(dec.moves, start=1):
            print(f"  {k}. {mv}")
        if args.verify:
            print("verify: " + ("OK" if verified else "MISMATCH"))
    if args.verify and not verified:
        return EXIT_VIOLATED
    return EXIT_OK


def cmd_fuzz(args) -> int:
    stmts = [s.strip() for s in args.statements.split(",") if s.strip()] if args.statements else list(STATEMENTS)
    unknown = [s for s in stmts if s not in STATEMENTS]
    if unknown:
        raise InputError(f"unknown statements: {', '.join(unknown)} (choose from {', '.join(STATEMENTS)})")
    if args.trials < 0 or args.max_n < 1 or args.max_m < 1 or args.max_deg < 1:
        raise InputError("trial count and size limits must be positive")
    summary = run_campaign(args.seed, args.trials, stmts, max_n=args.max_n, max_m=args.max_m,
                           max_deg=args.max_deg, parallel=args.parallel)
    print(summary_json(summary) if args.json else summary_text(summary))
    return EXIT_VIOLATED if summary["violations"] else EXIT_OK


def cmd_parse_check(args) -> int:
    sf = _read(args.file)
    for k, p in enumerate(sf.polys, start=1):
        print(f"f{k} = {format_poly(p)}  (degree {p.degree()})")
    if sf.abstract_poly is not None:
        g = sf.abstract()
        print(f"G = {format_poly(g)}  (degree {g.degree()})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tamepoly", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parachute", help="parachute of a system")
    p.add_argument("file", help="system file, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_parachute)

    p = sub.add_parser("bounds", help="check one degree bound")
    p.add_argument("file")
    p.add_argument("--statement", choices=["main", "cn", "csu", "dg1", "para", "caut"], default="main")
    p.add_argument("--i", type=int, default=None, help="generator index (default m)")
    p.add_argument("--k", type=int, default=1, help="derivative order for para")
    p.add_argument("--cap", type=int, default=None,
                   help="degree cap for the s_i relation search (default 2*max(d)^2)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("decompose", help="decompose a plane automorphism")
    p.add_argument("file")
    p.add_argument("--verify", action="store_true", help="recompose the moves and compare")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("fuzz", help="seeded random verification campaign")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--max-deg", type=int, default=6)
    p.add_argument("--statements", default=None, help=f"comma list from {','.join(STATEMENTS)}")
    p.add_argument("--parallel", type=int, default=0, help="worker processes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("parse-check", help="parse a system file and print canonical forms")
    p.add_argument("file")
    p.set_defaults(func=cmd_parse_check)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DependentSystem as exc:
        print(f"error: dependent system: {exc}", file=sys.stderr)
        return EXIT_DEPENDENT
    except NotAutomorphism as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_AUTOMORPHISM
    except (TamePolyError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
