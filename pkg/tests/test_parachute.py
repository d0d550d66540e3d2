import random

import pytest

from tamepoly.calculus import PolySystem
from tamepoly.errors import DependentSystem, VacuousCheck
from tamepoly.parachute import check_para_inequality, derivative_wrt_generator, parachute
from tamepoly.poly import Polynomial, xspace
from tamepoly.sampling import random_abstract, random_system

from conftest import G, P


def sys2(*texts):
    return PolySystem(tuple(P(t, 2) for t in texts))


@pytest.mark.parametrize("n", range(1, 6))
def test_identity_has_zero_parachute(n):
    s = PolySystem(tuple(Polynomial.var(i, xspace(n)) for i in range(1, n + 1)))
    assert parachute(s).nabla == 0


def test_parachute_examples(nagata):
    assert parachute(sys2("x1", "x2 + x1^2")).nabla == 1
    assert parachute(sys2("x1^2", "x1^3 + x2")).nabla == 2
    rep = parachute(nagata)
    assert (rep.nabla, rep.sum_d_minus_m, rep.max_minor_degree) == (6, 6, 0)
    with pytest.raises(DependentSystem):
        parachute(sys2("x1^2", "x1^3"))


def test_derivative_examples():
    assert derivative_wrt_generator(G("X2^3"), 2) == G("3*X2^2")
    assert derivative_wrt_generator(G("X2^2 - X1^3"), 1) == G("-3*X1^2")
    assert derivative_wrt_generator(G("X1*X2"), 2) == G("X1")
    assert derivative_wrt_generator(G("X2^3"), 2, 3) == G("6")
    assert derivative_wrt_generator(G("X2^3"), 2, 0) == G("X2^3")


def test_para_examples():
    r = check_para_inequality(sys2("x1", "x2 + x1^2"), G("X2^2"), 2, 1)
    assert (r.lhs, r.rhs, r.holds) == (4, 3, True)
    r = check_para_inequality(sys2("x1^2", "x1^3 + x2"), G("X2^2 - X1^3"), 2, 1)
    assert (r.lhs, r.rhs, r.holds, r.tight) == (4, 4, True, True)
    s = sys2("x1^2", "x1^3 + x2")
    r = check_para_inequality(s, G("X1"), 1, 1)
    assert (r.lhs, r.rhs) == (2, 2 - 2)
    with pytest.raises(VacuousCheck):
        check_para_inequality(s, G("X1"), 2, 1)


def test_estimate_and_para_random():
    rng = random.Random(3)
    for _ in range(40):
        s = random_system(rng, max_n=4, max_m=3, max_deg=5)
        rep = parachute(s)
        assert 0 <= rep.nabla <= rep.sum_d_minus_m
        g = random_abstract(rng, s.m, max_deg=3)
        for i in range(1, s.m + 1):
            for k in range(0, 3):
                try:
                    r = check_para_inequality(s, g, i, k, rep.nabla)
                except VacuousCheck:
                    continue
                assert r.holds, r.summary()
