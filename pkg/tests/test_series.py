"""Laurent polynomial and rational generating function arithmetic.

Expected values below were worked out by hand (small convolutions) or
cross-checked by exact rational evaluation, independently of the code
under test.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wsemigroups import ArityMismatch, LaurentPoly, RationalGF, Window


def L(terms, arity=None):
    return LaurentPoly(terms, arity=arity)


def test_zero_terms_are_pruned():
    p = L({(0,): 1, (3,): 0})
    assert p.terms() == [((0,), 1)]
    assert L({(1,): 2}) - L({(1,): 2}) == LaurentPoly.zero(1)
    assert not (L({(1,): 2}) - L({(1,): 2}))


def test_mul_one_minus_t_times_one_plus_t():
    p = L({(0,): 1, (1,): -1})
    q = L({(0,): 1, (1,): 1})
    assert (p * q).terms() == [((0,), 1), ((2,), -1)]


def test_add_cancels_to_zero():
    p = L({(0,): 1, (1,): -1})
    q = L({(1,): 1, (0,): -1})
    assert (p + q).is_zero()


def test_two_variable_product_with_negative_exponents():
    p = L({(0, 0): 1, (1, 1): -1})
    q = L({(1, -1): 1})
    assert (p * q).terms() == [((1, -1), 1), ((2, 0), -1)]


def test_arity_mismatch_raises():
    p = L({(0,): 1})
    q = L({(0, 0): 1})
    with pytest.raises(ArityMismatch):
        p + q
    with pytest.raises(ArityMismatch):
        p * q
    with pytest.raises(ArityMismatch):
        RationalGF(p).expand(Window((0, 1), (0, 1)))


def test_scalar_arithmetic():
    p = L({(2,): 3})
    assert (2 * p).coeff((2,)) == 6
    assert (p + 1).coeff((0,)) == 1
    assert (-p).coeff((2,)) == -3


def test_denominator_vector_validation():
    one = LaurentPoly.one(1)
    with pytest.raises(ValueError):
        RationalGF(one, [(0,)])
    with pytest.raises(ValueError):
        RationalGF(one, [(-1,)])
    one2 = LaurentPoly.one(2)
    with pytest.raises(ValueError):
        RationalGF(one2, [(1, -1)])
    RationalGF(one2, [(1, 0), (0, 1)])


def test_expand_geometric_series():
    f = RationalGF.geometric((1,))
    got = f.expand(Window((0, 5)))
    assert [got[(n,)] for n in range(6)] == [1, 1, 1, 1, 1, 1]
    got = f.expand(Window((-2, 2)))
    assert [got[(n,)] for n in range(-2, 3)] == [0, 0, 1, 1, 1]


def test_expand_one_minus_t_plus_t2_over_one_minus_t():
    f = RationalGF(L({(0,): 1, (1,): -1, (2,): 1}), [(1,)])
    got = f.expand(Window((0, 4)))
    assert [got[(n,)] for n in range(5)] == [1, 0, 1, 1, 1]


def test_expand_two_variable_corner_numerator():
    # (1 - t1 t2) * t1 t2^-1 / ((1 - t1)(1 - t2)) at (1, 0)
    num = L({(0, 0): 1, (1, 1): -1}) * L({(1, -1): 1})
    f = RationalGF(num, [(1, 0), (0, 1)])
    got = f.expand(Window((1, 1), (0, 0)))
    assert got[(1, 0)] == 1


def test_expand_repeated_factor():
    # 1/(1-t)^2 counts multiplicities: coefficient n+1 at t^n
    f = RationalGF.geometric((1,), (1,))
    got = f.expand(Window((0, 4)))
    assert [got[(n,)] for n in range(5)] == [1, 2, 3, 4, 5]


def test_expand_zero_numerator():
    f = RationalGF(LaurentPoly.zero(2), [(1, 1)])
    assert set(f.expand(Window((0, 1), (0, 1))).values()) == {0}


def test_reciprocal_geometric():
    f = RationalGF.geometric((1,))
    r = f.reciprocal()
    assert r.num.terms() == [((1,), -1)]
    assert r.den == ((1,),)


def test_reciprocal_matches_hand_normalisation():
    # (1 - t + t^2)/(1 - t) -> -t^-1 (1 - t + t^2)/(1 - t)
    f = RationalGF(L({(0,): 1, (1,): -1, (2,): 1}), [(1,)])
    r = f.reciprocal()
    expected = RationalGF(
        L({(-1,): -1, (0,): 1, (1,): -1}), [(1,)])
    assert r == expected


def test_reciprocal_pure_monomial():
    f = RationalGF(L({(1, 1): 1}))
    assert f.reciprocal() == RationalGF(L({(-1, -1): 1}))


def test_reciprocal_is_involution():
    f = RationalGF(L({(0,): 2, (3,): -1}), [(1,), (2,)])
    assert f.reciprocal().reciprocal().equals(f)


def test_equality_by_cross_multiplication():
    # (1 - t^2)/(1 - t) == 1 + t
    a = RationalGF(L({(0,): 1, (2,): -1}), [(1,)])
    b = RationalGF(L({(0,): 1, (1,): 1}))
    assert a.equals(b)
    c = RationalGF(L({(0,): 1, (1,): 1}), [(1,)])
    assert not a.equals(c)


def test_equality_with_different_denominator_multisets():
    # (1 - t^4)/((1-t)(1-t^2)) == (1 + t^2)/(1 - t)
    a = RationalGF(L({(0,): 1, (4,): -1}), [(1,), (2,)])
    b = RationalGF(L({(0,): 1, (2,): 1}), [(1,)])
    assert a.equals(b)


def test_evaluate_exact_rational():
    f = RationalGF(L({(0,): 1, (1,): -1, (2,): 1}), [(1,)])
    # (1 - 2 + 4)/(1 - 2) = -3
    assert f.evaluate((2,)) == Fraction(-3)
    r = f.reciprocal()
    assert r.evaluate((Fraction(1, 2),)) == Fraction(-3)


def test_evaluate_rejects_vanishing_factor():
    f = RationalGF.geometric((1, 0))
    with pytest.raises(ZeroDivisionError):
        f.evaluate((1, 5))


def test_json_round_trip():
    f = RationalGF(L({(2, 0): -1, (1, -1): 1}), [(1, 0), (0, 1)])
    obj = f.to_json()
    assert obj == {
        "num": [{"e": [1, -1], "c": 1}, {"e": [2, 0], "c": -1}],
        "den": [[0, 1], [1, 0]],
    }
    back = RationalGF.from_json(obj)
    assert back.equals(f)


def test_window_validation_and_iteration():
    w = Window((0, 1), (5, 6))
    assert list(w.points()) == [(0, 5), (0, 6), (1, 5), (1, 6)]
    with pytest.raises(ValueError):
        Window((3, 2))
    assert (1, 6) in w
    assert (2, 5) not in w


# property tests: small random polynomials in one or two variables

coeffs = st.integers(min_value=-4, max_value=4)
exps1 = st.tuples(st.integers(min_value=-3, max_value=3))
exps2 = st.tuples(st.integers(min_value=-3, max_value=3),
                  st.integers(min_value=-3, max_value=3))


def poly_strategy(arity):
    exps = exps1 if arity == 1 else exps2
    return st.dictionaries(exps, coeffs, max_size=5).map(
        lambda d: LaurentPoly(d, arity=arity))


@given(poly_strategy(1), poly_strategy(1), poly_strategy(1))
def test_ring_axioms_one_variable(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(poly_strategy(2), poly_strategy(2))
def test_two_variable_commutativity(a, b):
    assert a * b == b * a
    assert a + b == b + a


den_vectors = st.lists(
    st.tuples(st.integers(min_value=0, max_value=3),
              st.integers(min_value=0, max_value=3)).filter(
        lambda v: v != (0, 0)),
    max_size=3)


@given(poly_strategy(2), den_vectors)
def test_reciprocal_involution_property(num, den):
    f = RationalGF(num, den)
    assert f.reciprocal().reciprocal().equals(f)


@given(poly_strategy(2), den_vectors)
def test_reciprocal_evaluation_property(num, den):
    f = RationalGF(num, den)
    p = (Fraction(2), Fraction(3))
    inv = (Fraction(1, 2), Fraction(1, 3))
    assert f.evaluate(p) == f.reciprocal().evaluate(inv)


@settings(max_examples=50)
@given(poly_strategy(1), poly_strategy(1),
       st.lists(st.tuples(st.integers(min_value=1, max_value=3)), max_size=2))
def test_product_expansion_is_convolution(na, nb, den):
    """Expanding a product agrees with convolving the factor expansions.

    Expansion supports sit above the numerator minima, so on [lo, hi]
    the convolution only needs each factor on a finite shifted window.
    """
    a = RationalGF(na, den)
    b = RationalGF(nb, den)
    prod = a * b
    lo, hi = -6, 6
    ep = prod.expand(Window((lo, hi)))
    if na.is_zero() or nb.is_zero():
        assert set(ep.values()) == {0}
        return
    lo_a = na.min_exponents()[0]
    lo_b = nb.min_exponents()[0]
    ea = a.expand(Window((lo_a, hi - lo_b)))
    eb = b.expand(Window((lo_b, hi - lo_a)))
    for m in range(lo, hi + 1):
        total = sum(c * eb[(m - k,)] for (k,), c in ea.items()
                    if lo_b <= m - k <= hi - lo_a)
        assert total == ep[(m,)]
