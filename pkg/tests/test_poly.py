from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonpositivity.poly import NEG_INF, BiPoly, GaussRatPoly, RatPoly, ZERO

from conftest import A1, A2, A3, A4, P, T

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(fractions, max_size=7).map(RatPoly)


def is_canonical(p: RatPoly) -> bool:
    return all(isinstance(c, Fraction) for c in p.coeffs) and (not p.coeffs or p.coeffs[-1] != 0)


def test_mul_difference_of_squares():
    assert (T + 1) * (T - 1) == P(1, 0, -1)


def test_add_inverse_is_zero():
    p = P(3, -1, 2)
    assert (p + (-p)).is_zero()
    assert (p + (-p)).degree == NEG_INF


def test_identity_element():
    assert A2 * RatPoly.constant(1) == P(4, 2, 5, -2, 6)


def test_scale_by_rational():
    assert P(2, 4).scale(Fraction(1, 2)) == P(1, 2)
    assert P(2, 4).scale(0).is_zero()


def test_divmod_reference_remainder():
    q, r = divmod(A2, A2.derivative())
    assert r == P(Fraction(37, 16), Fraction(-29, 16), Fraction(97, 16))
    assert A2.derivative() * q + r == A2


def test_divmod_self():
    p = P(1, -3, 2)
    assert divmod(p, p) == (RatPoly.constant(1), ZERO)


def test_divmod_hand_long_division():
    q, r = divmod(P(1, 0, -1), P(2, 0))
    assert q == P(Fraction(1, 2), 0)
    assert r == RatPoly.constant(-1)


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(P(1, 1), ZERO)


def test_derivative():
    assert A2.derivative() == P(16, 6, 10, -2)
    assert RatPoly.constant(7).derivative().is_zero()
    assert (-A1).derivative() == P(6, 10, 0, -12, 6, 0)


def test_evaluate():
    assert A3(0) == -5
    assert P(1, -2, 1)(1) == 0
    assert P(5, 0, 9)(0) == 9


def test_zero_polynomial_representation():
    assert RatPoly([0, 0, 0]).coeffs == ()
    assert ZERO.degree == NEG_INF
    with pytest.raises(ValueError):
        ZERO.lc


def test_floats_rejected():
    with pytest.raises(TypeError):
        RatPoly([0.5])


def test_render():
    assert P(Fraction(-37, 16), Fraction(29, 16), Fraction(-97, 16)).render() == "-37/16*t^2 + 29/16*t - 97/16"
    assert P(1, 0, -1).render("x") == "x^2 - 1"
    assert ZERO.render() == "0"
    assert P(-1, 0).render() == "-t"


def reference_chi_minus() -> BiPoly:
    return BiPoly({4: A4, 3: A3, 2: A2, 1: A1})


def test_negate_x_reference():
    chi = BiPoly({4: P(1), 3: P(4, 0, 5), 2: A2, 1: P(1, 2, 0, -4, 3, 0, 1)})
    assert chi.negate_x() == reference_chi_minus()
    assert chi.negate_x().exponents() == (4, 3, 2, 1)


def test_negate_x_even_and_involution():
    x2 = BiPoly({2: RatPoly.constant(1)})
    assert x2.negate_x() == x2
    f = reference_chi_minus()
    assert f.negate_x().negate_x() == f


def test_evaluate_t():
    assert reference_chi_minus().evaluate_t(0) == P(1, -5, 6, -1, 0)
    f = BiPoly({1: T, 0: RatPoly.constant(1)})
    assert f.evaluate_t(0) == RatPoly.constant(1)
    const = BiPoly({2: RatPoly.constant(3), 0: RatPoly.constant(-1)})
    assert const.evaluate_t(Fraction(7, 3)) == P(3, 0, -1)


def test_bipoly_drops_zero_coefficients():
    f = BiPoly({3: T, 1: ZERO, 0: T - T})
    assert f.exponents() == (3,)


def test_gauss_arith():
    i = GaussRatPoly(ZERO, RatPoly.constant(1))
    assert i * i == GaussRatPoly(RatPoly.constant(-1), ZERO)
    assert GaussRatPoly(ZERO, T).conjugate() == GaussRatPoly(ZERO, -T)
    real = GaussRatPoly(P(1, 2))
    assert real.conjugate() == real
    assert (real + i) - i == real
    assert -real == GaussRatPoly(P(-1, -2))


@given(polys, polys)
def test_ring_results_canonical(p, q):
    for r in (p + q, p - q, p * q, -p, p.derivative()):
        assert is_canonical(r)


@given(polys, polys.filter(lambda q: q.degree >= 1))
def test_divmod_round_trip(p, q):
    quot, rem = divmod(p, q)
    assert q * quot + rem == p
    assert rem.degree < q.degree
    assert is_canonical(quot) and is_canonical(rem)


@given(polys, polys, fractions)
def test_evaluate_is_ring_homomorphism(p, q, t0):
    assert (p * q)(t0) == p(t0) * q(t0)
    assert (p + q)(t0) == p(t0) + q(t0)


@settings(max_examples=50)
@given(st.dictionaries(st.integers(0, 6), polys, max_size=5), fractions)
def test_negate_x_commutes_with_evaluation(coeffs, t0):
    f = BiPoly(coeffs)
    g = f.evaluate_t(t0)
    g_minus = RatPoly([c if k % 2 == 0 else -c for k, c in enumerate(g.coeffs)])
    assert f.negate_x().evaluate_t(t0) == g_minus
    assert f.negate_x().negate_x() == f
