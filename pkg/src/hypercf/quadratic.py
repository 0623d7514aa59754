"""Exact data of quadratic values given by eventually periodic continued fractions.

From the periodic word the purely periodic tail satisfies a Moebius fixed
point equation; transporting the resulting quadratic through the preperiod
map and normalizing (primitive, monic leading coefficient) yields the
canonical minimal polynomial.  Conjugates come from the Vieta relations,
never from square roots, so everything works uniformly in characteristic 2.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import AbsExponent, Field, Poly, poly_gcd
from .contfrac import ContinuedFraction, Word, cf_series, convergent_tail
from .errors import InseparableError, NotQuadraticError
from .laurent import LaurentSeries, series_from_rational


class QuadraticNumber:
    """[0; preperiod, periodic period] together with its exact invariants."""

    __slots__ = ("field", "preperiod", "period", "minpoly", "height_exp", "insep", "conj_gap_exp")

    def __init__(self, field, preperiod, period, minpoly, height_exp, insep, conj_gap_exp):
        self.field = field
        self.preperiod = preperiod
        self.period = period
        self.minpoly = minpoly
        self.height_exp = height_exp
        self.insep = insep
        self.conj_gap_exp = conj_gap_exp

    def cf(self) -> ContinuedFraction:
        return ContinuedFraction.periodic(Poly.zero(self.field), self.preperiod, self.period)

    def series(self, prec: int) -> LaurentSeries:
        return cf_series(self.cf(), prec)

    def abs_exponent(self) -> AbsExponent:
        """|alpha| = q^(-deg of the first partial quotient); alpha starts [0; ...]."""
        first = self.preperiod.letters[0] if len(self.preperiod) else self.period.letters[0]
        return AbsExponent(-first.degree)

    def conjugate_abs_exponent(self) -> AbsExponent:
        """|alpha'| from |alpha alpha'| = |C/A|."""
        a, _, c = self.minpoly
        if self.insep == 2:
            return self.abs_exponent()
        return AbsExponent(c.degree - a.degree) - self.abs_exponent()

    def __repr__(self):
        a, b, c = self.minpoly
        return f"QuadraticNumber(({a};{b};{c}), H=q^{self.height_exp})"


def minpoly_text(alpha: QuadraticNumber) -> str:
    a, b, c = alpha.minpoly
    return f"({a};{b};{c})"


def quad_from_periodic_cf(pre: Word, per: Word) -> QuadraticNumber:
    """Quadratic value of [0; pre, periodic per] with normalized minimal polynomial."""
    if len(per) == 0:
        raise ValueError("period must be nonempty")
    field = per.letters[0].field
    # purely periodic tail beta = [d1; d2, ..., ds, beta]:
    # q_{s-1} beta^2 + (q_{s-2} - p_{s-1}) beta - p_{s-2} = 0
    head = ContinuedFraction.from_word(per.letters[0], Word(per.letters[1:]))
    (p2, q2), (p1, q1) = convergent_tail(head, len(per) - 1)
    a, b, c = q1, q2 - p1, -p2
    # transport through alpha = (p beta + pp)/(q beta + qq) for the preperiod [0; pre]
    pre_cf = ContinuedFraction.from_word(Poly.zero(field), pre)
    (pp, qq), (p, q) = convergent_tail(pre_cf, len(pre))
    two = field.one + field.one
    a2 = a * qq * qq - b * q * qq + c * q * q
    b2 = -(a * pp * qq).scaled(two) + b * (p * qq + pp * q) - (c * p * q).scaled(two)
    c2 = a * pp * pp - b * p * pp + c * p * p
    if a2.is_zero:
        raise NotQuadraticError("leading coefficient vanished; the value is not quadratic")
    content = poly_gcd(poly_gcd(a2, b2), c2)
    a2, b2, c2 = (x.exact_div(content) for x in (a2, b2, c2))
    unit = a2.leading.inverse()
    a2, b2, c2 = a2.scaled(unit), b2.scaled(unit), c2.scaled(unit)
    if field.p != 2:
        disc = b2 * b2 - (a2 * c2).scaled(two * two)
        if disc.is_zero:
            raise NotQuadraticError("zero discriminant; the value is rational")
    insep = 2 if (field.p == 2 and b2.is_zero) else 1
    height_exp = max(a2.degree, b2.degree, c2.degree)
    gap = _gap_exponent(field, a2, b2, c2, insep)
    return QuadraticNumber(field, pre, per, (a2, b2, c2), height_exp, insep, gap)


def _gap_exponent(field: Field, a: Poly, b: Poly, c: Poly, insep: int) -> AbsExponent:
    if insep == 2:
        return AbsExponent.neg_inf()
    if field.p == 2:
        # alpha + alpha' = B/A in characteristic 2
        return AbsExponent(b.degree - a.degree)
    two = field.one + field.one
    disc = b * b - (a * c).scaled(two * two)
    return AbsExponent(Fraction(disc.degree, 2) - a.degree)


def conjugate_gap(alpha: QuadraticNumber) -> AbsExponent:
    """Exponent of |alpha - alpha'|; -inf in the inseparable case."""
    a, b, c = alpha.minpoly
    return _gap_exponent(alpha.field, a, b, c, alpha.insep)


def conjugate_series(alpha: QuadraticNumber, prec: int) -> LaurentSeries:
    """Series of the conjugate alpha' = B/A - alpha (sum of roots)."""
    if alpha.insep == 2:
        raise InseparableError("inseparable quadratic: alpha' = alpha")
    a, b, _ = alpha.minpoly
    return series_from_rational(b, a, prec) - alpha.series(prec)


def mahler_height_check(alpha: QuadraticNumber) -> tuple:
    """Both sides of the height factorization identity, as exact exponents.

    Returns (stored height exponent, |A| + max(1,|alpha|) + max(1,|alpha'|)
    exponent); the two must agree for separable quadratics.
    """
    if alpha.insep == 2:
        raise InseparableError("height factorization check needs a separable quadratic")
    a, _, _ = alpha.minpoly
    zero = Fraction(0)
    e_root = alpha.abs_exponent().exp
    e_conj = alpha.conjugate_abs_exponent().exp
    rhs = a.degree + max(zero, e_root) + max(zero, e_conj)
    return Fraction(alpha.height_exp), rhs
