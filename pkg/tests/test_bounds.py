import random

import pytest

from tamepoly.bounds import (caut_check, cn_bound, csu_bound, degree_in_generator, dg1_check,
                             main_bound)
from tamepoly.calculus import PolySystem
from tamepoly.errors import NotDegreeOne, NotSquareSystem, SUnknown, WrongArity
from tamepoly.grading import SStatus, SValue, s_values, s_values_m2
from tamepoly.reports import BoundReport, Statement
from tamepoly.sampling import random_abstract_for, random_resonant_pair, random_system

from conftest import G, P


def sys2(*texts):
    return PolySystem(tuple(P(t, 2) for t in texts))


TIGHT = sys2("x1^2", "x1^3 + x2")
ELEM = sys2("x1", "x2 + x1^2")


def test_degree_in_generator():
    assert degree_in_generator(G("X2^2 - X1^3"), 1) == 3
    assert degree_in_generator(G("X2^2 - X1^3"), 2) == 2


def test_main_examples():
    r = main_bound(TIGHT, G("X2^2 - X1^3"), 2, s_values_m2(TIGHT)[1])
    assert (r.lhs, r.rhs, r.holds, r.tight) == (4, 4, True, True)
    assert r.summary() == "MAIN i=2: lhs 4 ≥ rhs 4 TIGHT"
    r = main_bound(ELEM, G("X2^3"), 2, s_values_m2(ELEM)[1])
    assert (r.lhs, r.rhs, r.holds) == (6, 3, True)


def test_main_skips_unknown_s():
    unknown = SValue(2, None, SStatus.NO_RELATION_UP_TO_CAP, 4)
    r = main_bound(TIGHT, G("X2"), 2, unknown)
    assert r.skipped and r.holds is None and not r.violated


def test_cn_examples():
    s2 = s_values_m2(TIGHT)[1]
    r = cn_bound(TIGHT, G("X2^2 - X1^3"), 2, s2)
    assert (r.params["N_i"], r.params["q_i"], r.params["r_i"], r.rhs, r.lhs) == (4, 1, 0, 4, 4)
    r = cn_bound(TIGHT, G("X2"), 2, s2)
    assert (r.params["q_i"], r.params["r_i"], r.rhs, r.lhs) == (0, 1, 3, 3)
    with pytest.raises(SUnknown):
        cn_bound(TIGHT, G("X2"), 2, SValue(2, None, SStatus.NO_RELATION_UP_TO_CAP, 4))


def test_csu_examples():
    r = csu_bound(TIGHT, G("X2^2 - X1^3"), 1)
    assert r.params["N"] == 4 and r.holds
    r = csu_bound(ELEM, G("X2^3"), 2)
    assert (r.params["N"], r.rhs, r.lhs, r.holds) == (1, 3, 6, True)
    with pytest.raises(WrongArity):
        csu_bound(PolySystem((P("x1"), P("x2"), P("x3"))), G("X1", 3), 1)


def test_dg1_examples():
    sv = s_values_m2(ELEM)
    r = dg1_check(ELEM, G("X1"), sv)
    assert r.holds and r.params["case_1"] == "d_i=1" and r.params["case_2"] == "deg_fi_G=0"
    r = dg1_check(ELEM, G("X2 - X1^2"), sv)
    assert r.holds and r.params["N_2"] == 1 and r.rhs == 1
    with pytest.raises(NotDegreeOne):
        dg1_check(ELEM, G("X2"), sv)


def test_caut_examples(nagata):
    r = caut_check(ELEM, s_values_m2(ELEM))
    assert (r.lhs, r.rhs, r.holds) == (2, 2, True)
    assert r.params["s_max"] == 1 and r.params["nabla_identity"]
    r = caut_check(nagata, s_values(nagata))
    assert r.params["nabla"] == 6 and r.params["nabla_identity"]
    for i in (1, 2, 3):
        assert r.params[f"s_{i}_status"] in ("UPPER_BOUND", "NO_RELATION_UP_TO_CAP")
    assert not r.violated
    with pytest.raises(NotSquareSystem):
        caut_check(sys2("x1^2 + x2"), s_values(sys2("x1^2 + x2")))


def test_random_two_generator_bounds():
    rng = random.Random(21)
    for _ in range(40):
        if rng.random() < 0.5:
            rp = random_resonant_pair(rng)
            s, canc = rp.system, rp.cancelling
        else:
            s, canc = random_system(rng, max_n=3, max_m=2, max_deg=5, m=2), None
        g = random_abstract_for(rng, s, max_deg=4, cancelling=canc)
        sv = s_values_m2(s)
        for i in (1, 2):
            m = main_bound(s, g, i, sv[i - 1])
            c = cn_bound(s, g, i, sv[i - 1])
            u = csu_bound(s, g, i)
            assert m.holds and c.holds and u.holds
            assert m.rhs == c.rhs == u.rhs


def test_report_json_round_trip():
    r = cn_bound(TIGHT, G("X2^2 - X1^3"), 2, s_values_m2(TIGHT)[1])
    back = BoundReport.from_json(r.to_json())
    assert back == r
    assert back.statement is Statement.CN
    skipped = BoundReport(Statement.MAIN, 3, None, None, i=1, asserted=False, skipped_reason="why")
    assert BoundReport.from_dict(skipped.to_dict()) == skipped
    assert skipped.verdict == "SKIPPED"
