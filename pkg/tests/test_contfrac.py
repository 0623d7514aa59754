"""Words, convergents, expansion, evaluation, and exact distances."""

import itertools
import random
import threading

import pytest

from hypercf.algebra import Poly, field_make, poly_abs
from hypercf.contfrac import (
    ContinuedFraction,
    Word,
    cf_distance,
    cf_series,
    concat,
    convergent_tail,
    convergents,
    denominator_degrees,
    eval_cf,
    expand,
    first_disagreement,
    power,
)
from hypercf.errors import (
    IdenticalPrefixError,
    InsufficientLettersError,
    PrecisionExhaustedError,
)
from hypercf.laurent import series_abs, series_from_rational

from util import random_letter, random_word


# ---------------------------------------------------------------------------
# words


def test_word_power_zero_is_empty(F2):
    w = Word((F2.T,))
    assert len(power(w, 0)) == 0


def test_word_concat_with_empty(F2):
    v = Word((F2.T, F2.poly([1, 1])))
    assert concat(Word.empty(), v) == v


def test_word_power_two(F4):
    lam_T = F4.T.scaled(F4.generator)
    w = Word((F4.T, lam_T))
    assert power(w, 2).letters == (F4.T, lam_T, F4.T, lam_T)


def test_word_rejects_constant_letters(F2):
    with pytest.raises(ValueError):
        Word((Poly.one(F2),))


# ---------------------------------------------------------------------------
# convergents


def test_convergents_example(F2):
    cf = ContinuedFraction.from_word(Poly.zero(F2), Word((F2.T,) * 3))
    pairs = convergents(cf, 3)
    assert (pairs[1].p, pairs[1].q) == (Poly.one(F2), F2.T)
    assert (pairs[2].p, pairs[2].q) == (F2.T, F2.poly([1, 0, 1]))
    assert (pairs[3].p, pairs[3].q) == (F2.poly([1, 0, 1]), F2.poly([0, 0, 0, 1]))


def test_convergent_tail_matches_list(F4):
    rng = random.Random(2)
    w = random_word(rng, F4, 7, 2)
    cf = ContinuedFraction.from_word(Poly.zero(F4), w)
    pairs = convergents(cf, 7)
    (pp, qq), (p, q) = convergent_tail(cf, 7)
    assert (pp, qq) == (pairs[6].p, pairs[6].q)
    assert (p, q) == (pairs[7].p, pairs[7].q)


def test_convergents_need_letters(F2):
    cf = ContinuedFraction.from_word(Poly.zero(F2), Word((F2.T,)))
    with pytest.raises(InsufficientLettersError):
        convergents(cf, 2)


def test_determinant_identity_and_q_product():
    rng = random.Random(4)
    for p, s in [(2, 1), (3, 1), (2, 2), (5, 1)]:
        F = field_make(p, s)
        for _ in range(25):
            w = random_word(rng, F, rng.randint(1, 6), 3)
            cf = ContinuedFraction.from_word(random_letter(rng, F, 2), w)
            pairs = convergents(cf, len(w))
            degs = denominator_degrees(cf, len(w))
            for i in range(1, len(pairs)):
                det = pairs[i].p * pairs[i - 1].q - pairs[i - 1].p * pairs[i].q
                assert det.degree == 0
                expected = -F.one if i % 2 == 0 else F.one
                assert det == Poly.const(expected)
                # |q_n| = |a_1| ... |a_n|
                assert pairs[i].q.degree == degs[i]


# ---------------------------------------------------------------------------
# expansion and evaluation


def test_expand_rational_with_one_quotient(F2):
    s = series_from_rational(Poly.one(F2), F2.poly([1, 1]), 6)
    cf = expand(s, 10)
    assert cf.a0.is_zero
    assert cf.prefix(5) == (F2.poly([1, 1]),)
    with pytest.raises(PrecisionExhaustedError):
        cf.letter(2)


def test_expand_inverse_of_convergents_example(F2):
    s = series_from_rational(F2.poly([1, 0, 1]), F2.poly([0, 0, 0, 1]), 10)
    cf = expand(s, 10)
    assert cf.prefix(10) == (F2.T, F2.T, F2.T)


def test_expand_pure_polynomial(F2):
    s = series_from_rational(F2.poly([0, 0, 1]), Poly.one(F2), 8)
    cf = expand(s, 5)
    assert cf.a0 == F2.poly([0, 0, 1])
    assert cf.prefix(5) == ()


def test_eval_cf_examples(F2):
    cf = ContinuedFraction.from_word(F2.poly([0, 0, 1]), Word.empty())
    assert eval_cf(cf, 0, 6).polynomial_part() == F2.poly([0, 0, 1])
    cf2 = ContinuedFraction.from_word(Poly.zero(F2), Word((F2.T,) * 3))
    s = eval_cf(cf2, 3, 8)
    assert [c.code for c in s.coeffs] == [1, 0, 1, 0, 0, 0, 0]


def test_expand_eval_roundtrip():
    rng = random.Random(6)
    for p, s in [(2, 1), (3, 1), (2, 2)]:
        F = field_make(p, s)
        for _ in range(67):
            w = random_word(rng, F, rng.randint(1, 30), 3)
            cf = ContinuedFraction.from_word(Poly.zero(F), w)
            prec = 2 * w.degree_sum() + 2
            series = cf_series(cf, prec)
            back = expand(series, len(w) + 5)
            assert back.a0.is_zero
            assert back.prefix(len(w) + 5) == w.letters


def test_cf_series_requires_letters_or_completion(F2):
    gen_cf = ContinuedFraction.from_word(Poly.zero(F2), Word((F2.T,)), trunc="precision")
    with pytest.raises(PrecisionExhaustedError):
        cf_series(gen_cf, 40)


def test_cf_series_exact_for_complete_rational(F2):
    cf = ContinuedFraction.from_word(Poly.zero(F2), Word((F2.T, F2.T, F2.T)))
    s = cf_series(cf, 50)
    assert s.prec == 50
    assert s.agrees_with(series_from_rational(F2.poly([1, 0, 1]), F2.poly([0, 0, 0, 1]), 50))


# ---------------------------------------------------------------------------
# distances


def test_cf_distance_first_example(F2):
    x = ContinuedFraction.from_generator(Poly.zero(F2), itertools.repeat(F2.T))
    y = ContinuedFraction.from_word(
        Poly.zero(F2), Word((F2.T, F2.poly([1, 1]))), trunc="budget"
    )
    assert cf_distance(x, y).exp == -4


def test_cf_distance_second_example(F4):
    lam = F4.generator
    x = ContinuedFraction.from_word(Poly.zero(F4), Word((F4.T,)), trunc="budget")
    y = ContinuedFraction.from_word(Poly.zero(F4), Word((F4.T.scaled(lam),)), trunc="budget")
    assert cf_distance(x, y).exp == -1


def test_cf_distance_identical_prefix(F2):
    x = ContinuedFraction.from_generator(Poly.zero(F2), itertools.repeat(F2.T))
    y = ContinuedFraction.from_generator(Poly.zero(F2), itertools.repeat(F2.T))
    with pytest.raises(IdenticalPrefixError):
        cf_distance(x, y, max_scan=64)


def test_cf_distance_matches_series_distance():
    rng = random.Random(11)
    done = 0
    while done < 30:
        F = field_make(*rng.choice([(2, 1), (3, 1), (2, 2)]))
        zero = Poly.zero(F)
        shared = [random_letter(rng, F, 2) for _ in range(rng.randint(1, 5))]
        a = random_letter(rng, F, 2)
        b = random_letter(rng, F, 2)
        if a == b:
            continue
        ta = [random_letter(rng, F, 2) for _ in range(3)]
        tb = [random_letter(rng, F, 2) for _ in range(3)]
        x = ContinuedFraction.from_word(zero, Word(tuple(shared) + (a,) + tuple(ta)))
        y = ContinuedFraction.from_word(zero, Word(tuple(shared) + (b,) + tuple(tb)))
        d = cf_distance(x, y)
        prec = 2 * sum(t.degree for t in shared + [a] + ta) + 8
        diff = cf_series(x, prec) - cf_series(y, prec)
        assert series_abs(diff) == d
        done += 1


def test_first_disagreement_reports_position(F2):
    x = ContinuedFraction.from_word(Poly.zero(F2), Word((F2.T, F2.T, F2.poly([1, 1]))))
    y = ContinuedFraction.from_generator(Poly.zero(F2), itertools.repeat(F2.T))
    idx, deg_sum = first_disagreement(x, y, 100)
    assert idx == 3 and deg_sum == 2


# ---------------------------------------------------------------------------
# reciprocal and streams


def test_reciprocal_of_zero_led_cf(F2):
    cf = ContinuedFraction.from_word(Poly.zero(F2), Word((F2.T, F2.T, F2.T)))
    rec = cf.reciprocal()
    assert rec.a0 == F2.T
    assert rec.prefix(5) == (F2.T, F2.T)
    prod = cf_series(cf, 20) * cf_series(rec, 20)
    assert prod.polynomial_part() == Poly.one(F2)
    assert prod.fractional_part().is_zero_to_prec


def test_reciprocal_of_nonzero_a0(F4):
    lam_T = F4.T.scaled(F4.generator)
    cf = ContinuedFraction.from_word(lam_T, Word((F4.T, lam_T)))
    rec = cf.reciprocal()
    assert rec.a0.is_zero
    assert rec.prefix(4) == (lam_T, F4.T, lam_T)


def test_reciprocal_periodic_rotation(F2):
    cf = ContinuedFraction.periodic(Poly.zero(F2), Word.empty(), Word((F2.T, F2.poly([1, 1]))))
    rec = cf.reciprocal()
    assert rec.is_periodic
    assert rec.a0 == F2.T
    assert rec.prefix(4) == (F2.poly([1, 1]), F2.T, F2.poly([1, 1]), F2.T)


def test_generator_letters_are_memoized_once(F2):
    produced = []

    def gen():
        i = 0
        while True:
            produced.append(i)
            i += 1
            yield F2.T

    cf = ContinuedFraction.from_generator(Poly.zero(F2), gen())
    threads = [threading.Thread(target=lambda: cf.prefix(500)) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(produced) == 500
    assert cf.known_length() == 500


def test_stream_rejects_constant_letters(F2):
    cf = ContinuedFraction.from_generator(Poly.zero(F2), iter([F2.T, Poly.one(F2)]))
    with pytest.raises(ValueError):
        cf.prefix(2)
