import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as strat

from supertorsion import GF, QQ, Poly, TruncatedSeries, is_squarefree, poly_gcd, \
    roots_in_field, series_dth_root
from supertorsion.errors import BadInitialValue, BothZero, DivisionByZero, \
    ZeroPolynomial
from supertorsion.poly import NEG_INF, InseparableWarning


def binomial_power(field, inner_exponent, shift, e):
    """Oracle: (x^inner_exponent + shift)^e expanded by the binomial theorem."""
    coeffs = [0] * (inner_exponent * e + 1)
    for k in range(e + 1):
        coeffs[inner_exponent * k] = comb(e, k) * shift ** (e - k)
    return Poly(field, coeffs)


def test_expand_cube_minus_sixth_power():
    f = (Poly(QQ, (1, 0, 1)) ** 3) - Poly.monomial(QQ, 6)
    assert f == binomial_power(QQ, 2, 1, 3) - Poly.monomial(QQ, 6)
    assert [c.value for c in f.coeffs] == [1, 0, 3, 0, 3]


def test_expand_quartic_difference():
    f = Poly(QQ, (1, 1)) ** 4 - Poly.monomial(QQ, 4)
    assert f == binomial_power(QQ, 1, 1, 4) - Poly.monomial(QQ, 4)
    assert [c.value for c in f.coeffs] == [1, 4, 6, 4]


def test_shift_identity():
    f = Poly(QQ, (3, 2, 1))
    assert f.shift(0) == f


def test_shift_matches_pointwise_evaluation():
    f = Poly(QQ, (1, -2, 0, 5))
    g = f.shift(QQ(3))
    for x in range(-4, 5):
        assert g(QQ(x)) == f(QQ(x + 3))


def test_divmod_and_reconstruction():
    f = Poly(QQ, (1, 2, 3, 4, 5))
    g = Poly(QQ, (1, 0, 2))
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


def test_division_by_zero_poly():
    with pytest.raises(DivisionByZero):
        divmod(Poly(QQ, (1, 1)), Poly.zero(QQ))


def test_degree_of_zero_is_minus_infinity():
    z = Poly.zero(QQ)
    assert z.degree == NEG_INF
    assert z.degree < 0


def test_derivative_examples():
    f = Poly(QQ, (1, 4, 6, 4))
    assert [c.value for c in f.derivative().coeffs] == [4, 12, 12]
    F3 = GF(3)
    assert Poly(F3, (0, 1, 0, 1)).derivative() == Poly.one(F3)
    assert Poly(QQ, (7,)).derivative().is_zero()


def test_gcd_examples():
    x_minus_1 = Poly(QQ, (-1, 1))
    assert poly_gcd(Poly(QQ, (-1, 0, 1)), x_minus_1) == x_minus_1
    f = Poly(QQ, (1, 4, 6, 4))
    assert poly_gcd(f, f.derivative()).degree == 0
    assert poly_gcd(f, Poly.zero(QQ)) == f.monic()
    with pytest.raises(BothZero):
        poly_gcd(Poly.zero(QQ), Poly.zero(QQ))


def test_squarefree_examples():
    # (2*2 x^2 + 4x + 1)(4x + 1): the B1^2 = 8B degeneration
    f = Poly(QQ, (1, 4, 4)) * Poly(QQ, (1, 4))
    assert not is_squarefree(f)
    assert is_squarefree(Poly(QQ, (1, 0, 3, 0, 3)))
    assert not is_squarefree(Poly(QQ, (-1, 1)) ** 2)
    assert is_squarefree(Poly(QQ, (5,)))
    with pytest.raises(ZeroPolynomial):
        is_squarefree(Poly.zero(QQ))


def test_squarefree_inseparable_warning():
    F3 = GF(3)
    with pytest.warns(InseparableWarning):
        assert not is_squarefree(Poly(F3, (1, 0, 0, 1)))  # x^3 + 1 = (x+1)^3


def test_roots_examples():
    F5 = GF(5)
    roots = roots_in_field(Poly(F5, (-4, 0, 1)))
    assert {r.value for r in roots} == {2, 3}
    f = Poly(QQ, (1, 4, 6, 4))
    roots = roots_in_field(f)
    assert [r.value for r in roots] == [QQ("-1/2").value]
    assert f(QQ("-1/2")).is_zero()
    assert roots_in_field(Poly(QQ, (1, 0, 1))) == ()


def test_roots_with_zero_root_and_scaling():
    f = Poly(QQ, (0, 0, -1, 2))  # x^2 (2x - 1)
    assert {r.value for r in roots_in_field(f)} == {0, QQ("1/2").value}


def test_reverse():
    f = Poly(QQ, (1, 2, 3))
    assert [c.value for c in f.reverse(2).coeffs] == [3, 2, 1]
    assert [c.value for c in f.reverse(3).coeffs] == [0, 3, 2, 1]


def test_series_sqrt_binomial_oracle():
    # sqrt(1 + t) = 1 + t/2 - t^2/8 + ...: compare to the binomial series
    f = Poly(QQ, (1, 1))
    s = series_dth_root(f, 2, QQ(0), QQ(1), 3)
    from fractions import Fraction
    def half_binomial(k):
        num, den, top = 1, 1, Fraction(1, 2)
        for i in range(k):
            num *= (top - i)
            den *= (i + 1)
        return Fraction(num) / den
    assert [c.value for c in s.coeffs] == [half_binomial(k) for k in range(3)]


def test_series_precision_one_is_constant():
    s = series_dth_root(Poly(QQ, (4, 1)), 2, QQ(0), QQ(2), 1)
    assert [c.value for c in s.coeffs] == [2]


def test_series_cube_root_verified_by_cubing():
    f = Poly(QQ, (1, 0, 3, 0, 3))
    s = series_dth_root(f, 3, QQ(0), QQ(1), 4)
    assert [c.value for c in s.coeffs] == [1, 0, 1, 0]
    cubed = s ** 3
    shifted = TruncatedSeries.from_poly(f, 4)
    assert cubed == shifted


def test_series_bad_initial_value():
    with pytest.raises(BadInitialValue):
        series_dth_root(Poly(QQ, (1, 1)), 2, QQ(0), QQ(2), 3)


def test_series_inverse_is_exact():
    s = TruncatedSeries(QQ, (1, 3, -2, 5), 4)
    prod = s * s.inverse()
    assert [c.value for c in prod.coeffs] == [1, 0, 0, 0]


small_polys = strat.lists(strat.integers(-9, 9), min_size=0, max_size=6)


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys)
def test_divmod_reconstruction_property(fc, gc):
    f, g = Poly(QQ, fc), Poly(QQ, gc)
    if g.is_zero():
        return
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


@settings(max_examples=40, deadline=None)
@given(small_polys, strat.lists(strat.integers(-5, 5), min_size=2, max_size=4))
def test_square_factor_never_squarefree(fc, gc):
    f, g = Poly(QQ, fc), Poly(QQ, gc)
    if f.is_zero() or g.is_constant() or g.is_zero():
        return
    assert not is_squarefree(f * g * g)


@settings(max_examples=30, deadline=None)
@given(strat.sampled_from([7, 13, 29]),
       strat.lists(strat.integers(0, 28), min_size=1, max_size=5),
       strat.integers(2, 4))
def test_series_root_property(p, coeffs, d):
    F = GF(p)
    f = Poly(F, [1] + coeffs)  # f(0) = 1, so y0 = 1 works
    s = series_dth_root(f, d, F(0), F(1), 6)
    assert s ** d == TruncatedSeries.from_poly(f, 6)


def test_compose_and_scale_arg():
    rng = random.Random(7)
    for _ in range(10):
        f = Poly(QQ, [rng.randint(-5, 5) for _ in range(5)])
        c = QQ(rng.randint(1, 4))
        assert f.scale_arg(c) == f.compose(Poly(QQ, (0, c)))
        for x in range(-3, 4):
            assert f.scale_arg(c)(QQ(x)) == f(c * QQ(x))
