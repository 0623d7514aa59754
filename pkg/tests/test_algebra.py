"""Field, polynomial, resultant, and Frobenius arithmetic."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercf.algebra import (
    AbsExponent,
    Poly,
    XPoly,
    field_make,
    frobenius_power,
    poly_abs,
    poly_gcd,
    resultant,
)
from hypercf.errors import NotAPowerOfPError, NotPrimeError, TooLargeError

from util import random_poly, sylvester_resultant, xpoly_content_free_gcd_is_constant


# ---------------------------------------------------------------------------
# field construction


def test_f2_is_trivial_model(F2):
    assert F2.modulus == (0, 1)
    assert F2.generator == F2.one


def test_f4_model(F4):
    # the single irreducible quadratic u^2+u+1, generator u
    assert F4.modulus == (1, 1, 1)
    assert F4.generator.code == 2


def test_f8_model(F8):
    # lexicographically first irreducible cubic is u^3+u+1, generator u
    assert F8.modulus == (1, 1, 0, 1)
    assert F8.generator.code == 2


def test_field_make_is_cached_and_deterministic():
    assert field_make(3, 2) is field_make(3, 2)


def test_field_errors():
    with pytest.raises(NotPrimeError):
        field_make(6, 1)
    with pytest.raises(TooLargeError):
        field_make(2, 17)


@pytest.mark.parametrize("p,s", [(2, 1), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)])
def test_generator_has_full_order(p, s):
    F = field_make(p, s)
    g = F.generator
    seen = set()
    x = F.one
    for _ in range(F.q - 1):
        seen.add(x.code)
        x = x * g
    assert x == F.one
    assert len(seen) == F.q - 1


def test_element_str_parse_roundtrip(F8):
    for x in F8.elements():
        assert F8.parse(str(x)) == x


def test_element_arithmetic(F9):
    for a in F9.elements():
        for b in F9.elements():
            assert (a + b) - b == a
            if not b.is_zero:
                assert (a * b) / b == a
    g = F9.generator
    assert g ** (F9.q - 1) == F9.one
    assert g**-1 == g.inverse()


def test_division_by_zero(F4):
    with pytest.raises(ZeroDivisionError):
        F4.one / F4.zero


# ---------------------------------------------------------------------------
# polynomials


def test_gcd_char2_square(F2):
    # T^2 + 1 = (T+1)^2 in characteristic 2
    assert poly_gcd(F2.poly([1, 0, 1]), F2.poly([1, 1])) == F2.poly([1, 1])


def test_divmod_example(F2):
    q, r = divmod(F2.poly([0, 0, 0, 1]), F2.poly([1, 0, 1]))
    assert q == F2.T and r == F2.T


def test_mul_absorbing_zero(F4):
    p = F4.poly([1, "g^1", 0, 1])
    assert p * Poly.zero(F4) == Poly.zero(F4)


def test_divmod_by_zero(F2):
    with pytest.raises(ZeroDivisionError):
        divmod(F2.T, Poly.zero(F2))


def test_poly_abs(F2):
    assert poly_abs(F2.poly([0, 0, 0, 1])).exp == 3
    assert poly_abs(F2.poly([1])).exp == 0
    assert poly_abs(Poly.zero(F2)).is_neg_inf


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_divmod_reconstructs(data):
    F = field_make(*data.draw(st.sampled_from([(2, 1), (2, 2), (3, 1), (5, 1)])))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    a = random_poly(rng, F, rng.randint(0, 8))
    b = random_poly(rng, F, rng.randint(0, 5))
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero or r.degree < b.degree


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_gcd_divides_both_and_is_monic(data):
    F = field_make(*data.draw(st.sampled_from([(2, 1), (2, 2), (3, 1)])))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    a = random_poly(rng, F, rng.randint(0, 6))
    b = random_poly(rng, F, rng.randint(0, 6))
    g = poly_gcd(a, b)
    if g.is_zero:
        assert a.is_zero and b.is_zero
    else:
        assert g.leading == F.one
        assert (a % g).is_zero and (b % g).is_zero


def test_ultrametric_on_polys(F4):
    rng = random.Random(5)
    for _ in range(300):
        a = random_poly(rng, F4, rng.randint(0, 6))
        b = random_poly(rng, F4, rng.randint(0, 6))
        pa, pb = poly_abs(a), poly_abs(b)
        assert poly_abs(a * b) == pa + pb
        s = poly_abs(a + b)
        assert s <= max(pa, pb)
        if pa != pb:
            assert s == max(pa, pb)


# ---------------------------------------------------------------------------
# Frobenius powers


def test_frobenius_freshman_dream(F2):
    assert frobenius_power(F2.poly([1, 1]), 2) == F2.poly([1, 0, 1])


def test_frobenius_f4_twist(F4):
    lam = F4.generator
    out = frobenius_power(F4.T.scaled(lam), 4)
    # lam^4 = lam for lam in F_4*, so the result is lam T^4
    assert out == Poly(F4, (F4.zero,) * 4 + (lam,))


def test_frobenius_constant(F8):
    one = Poly.one(F8)
    assert frobenius_power(one, 8) == one


def test_frobenius_equals_repeated_multiplication():
    rng = random.Random(9)
    for p, s in [(2, 1), (2, 2), (3, 1)]:
        F = field_make(p, s)
        for r in [p, p * p]:
            if r > 8:
                continue
            for _ in range(20):
                a = random_poly(rng, F, rng.randint(0, 8))
                assert frobenius_power(a, r) == a**r


def test_frobenius_rejects_non_p_powers(F2):
    with pytest.raises(NotAPowerOfPError):
        frobenius_power(F2.T, 3)
    with pytest.raises(NotAPowerOfPError):
        frobenius_power(F2.T, 6)


# ---------------------------------------------------------------------------
# resultants


def test_resultant_linear_coprime(F2):
    one = Poly.one(F2)
    a = XPoly(F2, (F2.T, one))
    b = XPoly(F2, (F2.poly([1, 1]), one))
    assert resultant(a, b) == one


def test_resultant_shared_root(F2):
    a = XPoly(F2, (F2.T, Poly.one(F2)))
    assert resultant(a, a).is_zero


def test_resultant_quadratic_pair(F2):
    one = Poly.one(F2)
    a = XPoly(F2, (one, F2.T, one))
    b = XPoly(F2, (one, F2.poly([1, 1]), one))
    assert resultant(a, b) == one


def test_resultant_matches_sylvester_determinant():
    rng = random.Random(21)
    for p, s in [(2, 1), (3, 1), (5, 1), (2, 2)]:
        F = field_make(p, s)
        for _ in range(25):
            da, db = rng.randint(1, 3), rng.randint(1, 3)
            a = XPoly(F, tuple(random_poly(rng, F, rng.randint(-1, 2)) for _ in range(da)) + (random_poly(rng, F, rng.randint(0, 1)),))
            b = XPoly(F, tuple(random_poly(rng, F, rng.randint(-1, 2)) for _ in range(db)) + (random_poly(rng, F, rng.randint(0, 1)),))
            assert resultant(a, b) == sylvester_resultant(a, b)


def test_resultant_zero_iff_common_factor():
    rng = random.Random(33)
    for _ in range(40):
        F = field_make(*rng.choice([(2, 1), (3, 1)]))
        one = Poly.one(F)
        a = XPoly(F, (random_poly(rng, F, rng.randint(0, 2)), one))
        b = XPoly(F, (random_poly(rng, F, rng.randint(0, 2)), one))
        c = XPoly(F, (random_poly(rng, F, rng.randint(0, 2)), one))
        # forced common factor
        assert resultant(a * b, a * c).is_zero
        # random pairs against the coprimality oracle
        u = XPoly(F, (random_poly(rng, F, rng.randint(0, 2)),
                      random_poly(rng, F, rng.randint(-1, 1)), one))
        v = XPoly(F, (random_poly(rng, F, rng.randint(0, 2)),
                      random_poly(rng, F, rng.randint(-1, 1)), one))
        coprime = xpoly_content_free_gcd_is_constant(u, v)
        assert resultant(u, v).is_zero == (not coprime)


# ---------------------------------------------------------------------------
# exponents


def test_absexponent_ordering():
    neg = AbsExponent.neg_inf()
    assert neg < AbsExponent(0) < AbsExponent(Fraction(1, 2)) < AbsExponent(1)
    assert neg + AbsExponent(5) == neg
    assert AbsExponent(3) + AbsExponent(2) == AbsExponent(5)
    assert (AbsExponent(3) - AbsExponent(2)).exp == 1
    with pytest.raises(ZeroDivisionError):
        AbsExponent(1) - neg
    assert str(neg) == "-inf"
    assert AbsExponent(Fraction(3, 2)).exp == Fraction(3, 2)
