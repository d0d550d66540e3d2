import random

import pytest

from tamepoly.calculus import (PolySystem, bareiss_determinant, chain_rule_residual,
                               cofactor_determinant, gradient, is_algebraically_independent,
                               jacobian_minor, max_jacobian_degree, minor_degrees)
from tamepoly.errors import ConstantGenerator, DependentSystem, InvalidIndex
from tamepoly.poly import xspace
from tamepoly.sampling import random_abstract, random_poly, random_system

from conftest import G, P


def sys2(*texts):
    return PolySystem(tuple(P(t, 2) for t in texts))


def test_gradient_example():
    assert gradient(P("x2^2 + x1*x3")) == (P("x3"), P("2*x2"), P("x1"))


def test_jacobian_minor_examples(nagata):
    assert jacobian_minor(sys2("x1", "x2 + x1^2"), (1, 2)) == P("1", 2)
    assert jacobian_minor(sys2("x1^2", "x1^3 + x2"), (1, 2)) == P("2*x1", 2)
    assert jacobian_minor(nagata, (1, 2, 3)) == P("1")


def test_jacobian_minor_rejects_bad_indices():
    s = sys2("x1", "x2")
    for bad in [(1, 1), (1, 3), (1,), (0, 1)]:
        with pytest.raises(InvalidIndex):
            jacobian_minor(s, bad)


def test_max_jacobian_degree_examples():
    assert max_jacobian_degree(sys2("x1", "x2 + x1^2")) == 0
    assert max_jacobian_degree(sys2("x1^2", "x1^3 + x2")) == 1
    assert max_jacobian_degree(sys2("x1^2 + x2")) == 1
    assert minor_degrees(sys2("x1^2 + x2")) == {(1,): 1, (2,): 0}
    with pytest.raises(DependentSystem):
        max_jacobian_degree(sys2("x1^2", "x1^3"))


def test_independence(nagata):
    assert not is_algebraically_independent(sys2("x1^2", "x1^3"))
    assert is_algebraically_independent(nagata)
    assert is_algebraically_independent(sys2("x1", "x2"))


def test_system_validation():
    with pytest.raises(ConstantGenerator):
        sys2("x1", "3")
    with pytest.raises(ValueError):
        sys2("x1", "x2", "x1 + x2")
    with pytest.raises(ValueError):
        PolySystem((P("x1", 2), P("x1", 3)))


def test_chain_rule_examples():
    assert chain_rule_residual(sys2("x1", "x2 + x1^2"), G("X2^2"), (1, 2)).is_zero()
    assert chain_rule_residual(sys2("x1^2", "x1^3 + x2"), G("X2^2 - X1^3"), (1, 2)).is_zero()


def test_chain_rule_random():
    rng = random.Random(11)
    for _ in range(30):
        s = random_system(rng, max_n=4, max_m=3, max_deg=4)
        g = random_abstract(rng, s.m, max_deg=3)
        idx = tuple(sorted(rng.sample(range(1, s.n + 1), s.m)))
        assert chain_rule_residual(s, g, idx).is_zero()


def test_bareiss_matches_cofactor():
    rng = random.Random(5)
    space = xspace(3)
    for _ in range(4):
        rows = [[random_poly(rng, space, 2) for _ in range(4)] for _ in range(4)]
        assert bareiss_determinant(rows) == cofactor_determinant(rows)
