import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_image, real_power, ulp_steps
from intervalpow.exponent import ExponentKind as K, Rational
from intervalpow.extended import (
    ExactExponent,
    combine,
    enclose_fraction,
    pow_exact,
    pow_float,
    pow_nonsingleton_exact,
)
from intervalpow.interval import EMPTY, Interval, hull, make, negate
from intervalpow.nonneg import p0

INF = math.inf
PI = 3.141592653589793


def close(result, expected, ulps=2):
    lo, hi = expected
    return ulp_steps(result.lo, lo) <= ulps and ulp_steps(result.hi, hi) <= ulps


def test_odd_integer_negative_base():
    assert pow_float(make(-2, -2), make(3, 3)) == make(-8, -8)


def test_even_integer_negative_base():
    assert pow_float(make(-2, -2), make(2, 2)) == make(4, 4)


def test_nonsingleton_mixed_base():
    lo, hi = brute_image((-2, 3), (2, 3), max_den=15)
    assert (lo, hi) == (-8, 27)
    assert close(pow_float(make(-2, 3), make(2, 3)), (-8, 27))
    assert close(pow_nonsingleton_exact(make(-2, 3), make(2, 3)), (-8, 27))


def test_dyadic_singleton_needs_nonneg_base():
    assert pow_float(make(-2, -1), make(0.5, 0.5)) is EMPTY
    assert close(pow_float(make(-1, 4), make(0.5, 0.5)), (0, 2))


def test_odd_negative_exponent_covers_both_rays():
    # a -> 0+ with b = -3 grows to +inf, a -> 0- to -inf
    for k in (5, 50, 100):
        a = Fraction(1, 10**k)
        assert real_power(a, -3) > 10 ** (3 * k - 1)
        assert real_power(-a, -3) < -(10 ** (3 * k - 1))
    assert p0(make(0, 2), make(-3, -3)) == make(0.125, INF)
    assert negate(p0(make(0, 1), make(-3, -3))) == make(-INF, -1)
    assert pow_float(make(-1, 2), make(-3, -3)) == make(-INF, INF)


def test_cube_root_of_negative():
    assert real_power(-8, Fraction(1, 3)) == -2
    r = pow_exact(make(-8, -8), ExactExponent.rational(1, 3))
    assert r == make(-2, -2)


def test_even_odd_fraction_peaks_at_endpoints():
    grid = [Fraction(a, 4) for a in range(-32, 33)]
    values = [real_power(a, Fraction(2, 3)) for a in grid]
    assert min(values) == 0 and abs(max(values) - 4) < 1e-50
    assert pow_exact(make(-8, 8), ExactExponent.rational(2, 3)) == make(0, 4)


def test_even_denominator_needs_nonneg_base():
    assert pow_exact(make(-4, -4), ExactExponent.rational(1, 2)) is EMPTY
    assert close(pow_exact(make(-4, 9), ExactExponent.rational(1, 2)), (0, 3))


@given(
    st.floats(-1e6, 1e6, allow_nan=False),
    st.floats(-1e6, 1e6, allow_nan=False),
    st.integers(-60, 60),
    st.integers(1, 99),
)
def test_rational_no_wider_than_enclosure(a, b, num, den):
    x = make(min(a, b), max(a, b))
    y = ExactExponent.rational(num, den)
    assert pow_exact(x, y).subset(combine(x, y.enclosure(), y.kind))


def test_irrational_delegates_to_p0():
    y = ExactExponent.irrational(PI)
    assert y.kind is K.IRRATIONAL
    assert pow_exact(make(-2, 3), y) == p0(make(0, 3), y.enclosure())
    r = pow_exact(make(-2, 3), y)
    assert r.lo == 0 and r.hi >= mpmath.power(3, mpmath.pi)


def test_nonsingleton_exact_examples():
    assert close(pow_nonsingleton_exact(make(1, 2), make(0, 1)), (1, 2))
    lo, hi = brute_image((-1, 1), (0, 2), max_den=31)
    assert (lo, hi) == (-1, 1)
    assert close(pow_nonsingleton_exact(make(-1, 1), make(0, 2)), (-1, 1))


def test_nonsingleton_exact_rejects_singleton():
    with pytest.raises(ValueError, match="pow_exact"):
        pow_nonsingleton_exact(make(1, 2), make(3, 3))


def test_exact_exponent_validation():
    with pytest.raises(ValueError):
        ExactExponent()
    with pytest.raises(ValueError):
        ExactExponent(value=Rational(1, 3), approx=0.3)
    with pytest.raises(ValueError):
        ExactExponent.irrational(math.nan)
    with pytest.raises(ZeroDivisionError):
        ExactExponent.rational(1, 0)
    assert ExactExponent.rational(4, 6).value == Rational(2, 3)


@pytest.mark.parametrize("num, den", [(1, 3), (2, 3), (-7, 9), (10**30, 7), (1, 2), (5, 1), (1, 10**400)])
def test_enclose_fraction(num, den):
    q = Fraction(num, den)
    iv = enclose_fraction(q)
    assert Fraction(iv.lo) <= q <= Fraction(iv.hi)
    assert ulp_steps(iv.lo, iv.hi) <= 1
    assert iv.is_singleton == (Fraction(float(q)) == q)


def test_empty_inputs():
    assert pow_float(EMPTY, make(1, 2)) is EMPTY
    assert pow_float(make(1, 2), EMPTY) is EMPTY
    assert pow_exact(EMPTY, ExactExponent.rational(1, 3)) is EMPTY
    assert pow_float(make(1, 2), make(INF, INF)) is EMPTY


finite_x = st.floats(min_value=-1e4, max_value=1e4)


@st.composite
def bases(draw):
    a, b = draw(finite_x), draw(finite_x)
    return make(min(a, b), max(a, b))


@given(bases(), st.integers(-8, 8))
def test_even_symmetry(x, k):
    y = make(2 * k, 2 * k)
    assert pow_float(x, y) == pow_float(negate(x), y)


@given(bases(), st.integers(-8, 8))
def test_odd_antisymmetry(x, k):
    y = make(2 * k + 1, 2 * k + 1)
    assert pow_float(negate(x), y) == negate(pow_float(x, y))


@given(bases(), st.floats(-20, 20), st.floats(-20, 20), st.floats(0, 1))
def test_refinement_containment(x, c, d, t):
    y = make(min(c, d), max(c, d))
    star = min(y.lo + t * (y.hi - y.lo), y.hi)
    for s in (star, float(round(star)) if y.lo <= round(star) <= y.hi else star):
        assert pow_float(x, make(s, s)).subset(pow_float(x, y))


@given(bases(), st.floats(-20, 20), st.floats(-20, 20))
def test_structural_identity(x, c, d):
    y = make(min(c, d), max(c, d))
    direct, reflected = p0(x, y), p0(negate(x), y)
    if y.is_singleton:
        f = Fraction(y.lo)
        if f.denominator != 1:
            expected = direct
        elif f.numerator % 2 == 0:
            expected = hull(direct, reflected)
        else:
            expected = hull(direct, negate(reflected))
    else:
        expected = hull(direct, reflected, negate(reflected))
    assert pow_float(x, y) == expected


@given(st.floats(1e-3, 1e4), st.floats(1e-3, 1e4), st.floats(-20, 20), st.floats(-20, 20))
def test_agrees_with_p0_on_positive_bases(a, b, c, d):
    x = make(min(a, b), max(a, b))
    y = make(min(c, d), max(c, d))
    assert pow_float(x, y) == p0(x, y)


def test_zero_endpoint_degenerate_piece():
    # with 0 the only non-positive base and 0 in a non-singleton exponent,
    # the reflected odd piece contributes -(0**0) = -1 to the hull
    assert p0(make(0, 2), make(-1, 1)) == make(0, INF)
    assert pow_float(make(0, 2), make(-1, 1)) == make(-1, INF)
    # no exponent 0 in y: the reflected pieces collapse to {0}
    assert pow_float(make(0, 2), make(1, 2)) == p0(make(0, 2), make(1, 2))


@pytest.mark.parametrize(
    "num, den, x, kind",
    [(2, 3, (-8, 8), K.FRACTION_EO), (1, 3, (-27, 8), K.FRACTION_OO), (1, 2, (-4, 9), K.FRACTION_OE),
     (4, 1, (-2, 1), K.EVEN_INTEGER), (-3, 1, (-2, -1), K.ODD_INTEGER)],
)
def test_exact_matches_brute_force(num, den, x, kind):
    y = ExactExponent.rational(num, den)
    assert y.kind is kind
    q = Fraction(num, den)
    grid = [Fraction(x[0]) + (Fraction(x[1]) - Fraction(x[0])) * i / 64 for i in range(65)]
    grid += [Fraction(0)] if x[0] < 0 < x[1] else []
    values = [v for v in (real_power(a, q) for a in grid) if v is not None]
    r = pow_exact(make(*x), y)
    assert r.lo <= min(values) and max(values) <= r.hi
    assert close(r, (float(min(values)), float(max(values))), ulps=4)
