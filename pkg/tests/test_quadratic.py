"""Minimal polynomials, conjugates, and height identities for periodic values."""

import random
from fractions import Fraction

import pytest

from hypercf.algebra import Poly, XPoly, field_make
from hypercf.contfrac import Word, convergents
from hypercf.errors import InseparableError
from hypercf.laurent import eval_poly_at_series, series_from_rational
from hypercf.quadratic import (
    QuadraticNumber,
    conjugate_gap,
    conjugate_series,
    mahler_height_check,
    quad_from_periodic_cf,
)

from util import random_word


def golden_analogue(F2):
    return quad_from_periodic_cf(Word.empty(), Word((F2.T,)))


def test_pure_period_T(F2):
    alpha = golden_analogue(F2)
    a, b, c = alpha.minpoly
    assert (a, b, c) == (Poly.one(F2), F2.T, Poly.one(F2))
    assert alpha.height_exp == 1
    assert alpha.insep == 1


def test_preperiod_transport(F2):
    alpha = quad_from_periodic_cf(Word((F2.poly([1, 1]),)), Word((F2.T,)))
    a, b, c = alpha.minpoly
    assert (a, b, c) == (F2.T, F2.T, Poly.one(F2))
    assert alpha.height_exp == 1


def test_odd_characteristic_two_letter_period(F5):
    lam = F5.from_code(3)
    mu = F5.from_code(2)
    alpha = quad_from_periodic_cf(
        Word.empty(), Word((F5.T.scaled(lam), F5.T.scaled(mu)))
    )
    assert alpha.insep == 1
    assert not alpha.minpoly[1].is_zero


def test_minpoly_is_primitive_and_monic():
    from hypercf.algebra import poly_gcd

    rng = random.Random(13)
    for _ in range(50):
        F = field_make(*rng.choice([(2, 1), (2, 2), (3, 1)]))
        pre = random_word(rng, F, rng.randint(0, 3), 2)
        per = random_word(rng, F, rng.randint(1, 3), 2)
        alpha = quad_from_periodic_cf(pre, per)
        a, b, c = alpha.minpoly
        assert a.leading == F.one
        content = poly_gcd(poly_gcd(a, b), c)
        assert content == Poly.one(F)
        assert alpha.height_exp == max(a.degree, b.degree, c.degree)


def test_conjugate_gap_examples(F2):
    assert golden_analogue(F2).conj_gap_exp.exp == 1
    shifted = quad_from_periodic_cf(Word((F2.poly([1, 1]),)), Word((F2.T,)))
    assert shifted.conj_gap_exp.exp == 0


def test_inseparable_contract(F2):
    # B = 0 cannot arise from a periodic expansion (squares are Frobenius
    # images), so exercise the contract on a hand-built record
    alpha = QuadraticNumber(
        field=F2,
        preperiod=Word.empty(),
        period=Word((F2.T,)),
        minpoly=(Poly.one(F2), Poly.zero(F2), F2.T),
        height_exp=1,
        insep=2,
        conj_gap_exp=None,
    )
    assert conjugate_gap(alpha).is_neg_inf
    with pytest.raises(InseparableError):
        conjugate_series(alpha, 10)
    with pytest.raises(InseparableError):
        mahler_height_check(alpha)


def test_conjugate_series_and_vieta(F2):
    alpha = golden_analogue(F2)
    conj = conjugate_series(alpha, 12)
    assert conj.lead == -1  # |alpha'| = q
    a, b, _ = alpha.minpoly
    total = alpha.series(12) + conj
    assert total.agrees_with(series_from_rational(b, a, 12))


def test_conjugate_gap_odd_char_can_be_half_integral(F3):
    rng = random.Random(19)
    seen_half = False
    for _ in range(200):
        pre = random_word(rng, F3, rng.randint(0, 2), 2)
        per = random_word(rng, F3, rng.randint(1, 3), 2)
        alpha = quad_from_periodic_cf(pre, per)
        g = alpha.conj_gap_exp.exp
        assert g.denominator in (1, 2)
        if g.denominator == 2:
            seen_half = True
    assert seen_half


def test_mahler_identity_examples(F2):
    lhs, rhs = mahler_height_check(golden_analogue(F2))
    assert lhs == rhs == 1
    shifted = quad_from_periodic_cf(Word((F2.poly([1, 1]),)), Word((F2.T,)))
    lhs, rhs = mahler_height_check(shifted)
    assert lhs == rhs == 1


def test_minpoly_root_to_high_precision(F4):
    lam_T = F4.T.scaled(F4.generator)
    alpha = quad_from_periodic_cf(Word((F4.T,)), Word((lam_T, F4.T)))
    a, b, c = alpha.minpoly
    poly = XPoly(F4, (c, b, a))
    res = eval_poly_at_series(poly, alpha.series(2000))
    assert res.is_zero_to_prec
    assert res.prec >= 2000 - 2 * alpha.height_exp - 8


def test_height_upper_bound_by_convergents():
    rng = random.Random(23)
    for _ in range(60):
        F = field_make(*rng.choice([(2, 1), (3, 1), (2, 2)]))
        pre = random_word(rng, F, rng.randint(0, 3), 2)
        per = random_word(rng, F, rng.randint(1, 3), 2)
        alpha = quad_from_periodic_cf(pre, per)
        pairs = convergents(alpha.cf(), len(pre) + len(per))
        bound = pairs[len(pre)].q.degree + pairs[len(pre) + len(per)].q.degree
        assert alpha.height_exp <= bound


def test_boundary_quotient_gap_bounds():
    rng = random.Random(29)
    done = 0
    while done < 60:
        F = field_make(*rng.choice([(2, 1), (3, 1), (5, 1)]))
        pre = random_word(rng, F, rng.randint(1, 3), 2)
        per = random_word(rng, F, rng.randint(1, 3), 2)
        if pre.letters[-1] == per.letters[-1]:
            continue
        alpha = quad_from_periodic_cf(pre, per)
        q_r = sum(a.degree for a in pre.letters)
        lo = min(pre.letters[-1].degree, per.letters[-1].degree) - 2 * q_r
        hi = pre.letters[-1].degree + per.letters[-1].degree - 2 * q_r
        assert Fraction(lo) <= alpha.conj_gap_exp.exp <= Fraction(hi)
        # separable gap never falls below the height reciprocal
        assert alpha.conj_gap_exp.exp >= -alpha.height_exp
        done += 1
