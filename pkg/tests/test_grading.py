import random

import pytest

from tamepoly.calculus import PolySystem
from tamepoly.errors import CapTooSmall, WrongArity, ZeroPolynomial, VacuousCheck
from tamepoly.grading import (SStatus, SValue, hat_decomposition, hat_derivative_consistency,
                              leading_form, s_value_bounded_search, s_values, s_values_m2, sigma)

from tamepoly.sampling import random_abstract_for, random_resonant_pair, random_system

from conftest import G, P


def sys2(*texts):
    return PolySystem(tuple(P(t, 2) for t in texts))


TIGHT = ("x1^2", "x1^3 + x2")


def test_leading_form():
    lf = leading_form(P("x1 - 2*x2^3 + x1*x2^2"))
    assert lf.degree == 3 and lf.form == P("x1*x2^2 - 2*x2^3")
    with pytest.raises(ZeroPolynomial):
        leading_form(P("0"))


def test_leading_form_of_nagata_f1(nagata):
    lf = leading_form(nagata.polys[0])
    assert lf.degree == 5
    assert lf.form == P("-x3*(x2^2 + x1*x3)^2")
    assert lf.form.is_homogeneous()


def test_leading_form_multiplicative():
    rng = random.Random(2)
    for _ in range(20):
        s = random_system(rng, max_n=3, max_m=2, max_deg=4, m=2)
        p, q = s.polys
        assert leading_form(p * q).form == leading_form(p).form * leading_form(q).form


def test_hat_tight_example():
    hat = hat_decomposition(sys2(*TIGHT), G("X2^2 - X1^3"))
    assert hat.argmax_set == {0, 2}
    assert hat.h_coeffs == {2: P("1", 2), 0: P("-x1^6", 2)}
    assert hat.h_text() == "X^2 - x1^6"
    assert hat.G_hat.is_zero()
    assert (hat.degree_G, hat.max_value) == (4, 6)


def test_hat_nonvanishing_example():
    hat = hat_decomposition(sys2("x1", "x2 + x1^2"), G("X2^3"))
    assert hat.argmax_set == {3}
    assert hat.G_hat == P("x1^6", 2)
    assert hat.degree_G == hat.max_value == 6


def test_hat_of_last_generator():
    s = sys2(*TIGHT)
    hat = hat_decomposition(s, G("X2"))
    assert hat.argmax_set == {1} and hat.G_hat == leading_form(s.polys[1]).form
    with pytest.raises(ZeroPolynomial):
        hat_decomposition(s, G("0"))


def test_hat_derivative_examples():
    s = sys2(*TIGHT)
    assert hat_derivative_consistency(s, G("X2^2 - X1^3"), 1)
    dhat = hat_decomposition(s, G("2*X2"))
    assert dhat.G_hat == P("2*x1^3", 2)
    assert hat_derivative_consistency(s, G("X2^2"), 1)
    with pytest.raises(VacuousCheck):
        hat_derivative_consistency(s, G("X2^2"), 3)


def test_hat_random_resonant():
    rng = random.Random(8)
    for _ in range(30):
        rp = random_resonant_pair(rng)
        g = random_abstract_for(rng, rp.system, max_deg=4, cancelling=rp.cancelling)
        hat = hat_decomposition(rp.system, g)  # asserts the iff invariant internally
        assert hat.G_hat.is_zero() == (hat.degree_G < hat.max_value)
        for k in range(1, max(hat.h_coeffs) + 1):
            assert hat_derivative_consistency(rp.system, g, k)


def test_sigma():
    assert sigma(2, 3) == (3, 2)
    assert sigma(1, 2) == (2, 1)
    assert sigma(4, 4) == (1, 1)
    assert sigma(4, 6) == (3, 2)


def test_s_values_m2():
    s1, s2 = s_values_m2(sys2(*TIGHT))
    assert (s1.value, s2.value, s1.status) == (3, 2, SStatus.EXACT_M2)
    assert [s.value for s in s_values_m2(sys2("x1", "x2 + x1^2"))] == [2, 1]
    assert [s.value for s in s_values_m2(sys2("x1 + x2", "x1 - x2"))] == [1, 1]
    with pytest.raises(WrongArity):
        s_values_m2(PolySystem((P("x1"), P("x2"), P("x3"))))


def test_bounded_search_examples():
    v = s_value_bounded_search(sys2(*TIGHT), 2, 8)
    assert (v.value, v.status) == (2, SStatus.UPPER_BOUND)
    v = s_value_bounded_search(sys2("x1", "x2"), 2, 6)
    assert v.value is None and v.status is SStatus.NO_RELATION_UP_TO_CAP
    v = s_value_bounded_search(sys2("x1", "x2 + x1^2"), 2, 4)
    assert (v.value, v.status) == (1, SStatus.UPPER_BOUND)
    with pytest.raises(CapTooSmall):
        s_value_bounded_search(sys2(*TIGHT), 2, 2)


def test_bounded_search_on_nagata(nagata):
    vals = s_values(nagata)
    assert [v.i for v in vals] == [1, 2, 3]
    for v in vals:
        assert v.status in (SStatus.UPPER_BOUND, SStatus.NO_RELATION_UP_TO_CAP)
        assert v.cap is not None


def test_bounded_search_never_below_exact_m2():
    # sigma is the true s for two generators, and the search can only find
    # relations that really hold, so it never reports something smaller
    rng = random.Random(4)
    for _ in range(15):
        s = random_system(rng, max_n=3, max_m=2, max_deg=4, m=2)
        exact = s_values_m2(s)
        for i in (1, 2):
            found = s_value_bounded_search(s, i, 12)
            if found.known:
                assert found.value >= exact[i - 1].value


def test_svalue_round_trip():
    v = SValue(2, 3, SStatus.UPPER_BOUND, 10)
    assert SValue.from_dict(v.to_dict()) == v
    with pytest.raises(ValueError):
        SValue(1, None, SStatus.EXACT_M2, None)
    assert str(SValue(1, None, SStatus.NO_RELATION_UP_TO_CAP, 5))
