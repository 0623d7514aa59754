"""Truncated Laurent series in 1/T over F_q with explicit precision tracking.

A series stores the exact coefficients a_n of sum a_n T^(-n) for
lead <= n < prec.  Precision is a hard contract: every operation returns
the provable valid range and never emits speculative coefficients, because
a single wrong coefficient would silently corrupt every continued-fraction
expansion and exponent built on top of it.
"""

from __future__ import annotations

from .algebra import AbsExponent, Field, FieldElement, Poly, XPoly, _mul_coeffs, _vec_sub
from .errors import PrecisionExhaustedError, ZeroToPrecisionError


class LaurentSeries:
    """Coefficients of sum a_n T^(-n), exact for lead <= n < prec.

    A series that is zero to its precision is stored with empty coefficients
    and lead == prec.  Otherwise coeffs[0] is nonzero and the absolute value
    is q^(-lead).
    """

    __slots__ = ("field", "lead", "coeffs", "prec")

    def __init__(self, field: Field, lead: int, coeffs: tuple, prec: int):
        if lead + len(coeffs) > prec:
            raise ValueError("coefficients extend beyond the stated precision")
        i = 0
        while i < len(coeffs) and coeffs[i].code == 0:
            i += 1
        if i == len(coeffs):
            lead, coeffs = prec, ()
        else:
            lead += i
            coeffs = coeffs[i:]
            if lead + len(coeffs) < prec:
                raise ValueError("series window must span [lead, prec)")
        self.field = field
        self.lead = lead
        self.coeffs = tuple(coeffs)
        self.prec = prec

    # -- constructors

    @classmethod
    def zero_to_prec(cls, field: Field, prec: int) -> "LaurentSeries":
        return cls(field, prec, (), prec)

    @classmethod
    def from_poly(cls, poly: Poly, prec: int) -> "LaurentSeries":
        if poly.is_zero:
            return cls.zero_to_prec(poly.field, prec)
        lead = -poly.degree
        if prec <= lead:
            raise ValueError("precision does not cover the polynomial")
        zero = poly.field.zero
        coeffs = tuple(reversed(poly.coeffs)) + (zero,) * (prec - lead - len(poly.coeffs))
        return cls(poly.field, lead, coeffs, prec)

    # -- basic queries

    @property
    def is_zero_to_prec(self) -> bool:
        return not self.coeffs

    def coeff_at(self, n: int) -> FieldElement:
        """Coefficient of T^(-n); exact for n < prec."""
        if n >= self.prec:
            raise PrecisionExhaustedError(f"index {n} is beyond precision {self.prec}")
        if n < self.lead:
            return self.field.zero
        return self.coeffs[n - self.lead]

    def abs_exponent(self) -> AbsExponent:
        """Exponent of |x| = q^(-lead); raises if zero to precision."""
        if not self.coeffs:
            raise ZeroToPrecisionError(
                f"zero to precision {self.prec}; raise the precision to resolve |x|"
            )
        return AbsExponent(-self.lead)

    # -- arithmetic

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check(other)
        prec = min(self.prec, other.prec)
        lead = min(self.lead, other.lead, prec)
        field = self.field
        zero = field.zero
        out = []
        for n in range(lead, prec):
            a = self.coeffs[n - self.lead] if n >= self.lead else zero
            b = other.coeffs[n - other.lead] if n >= other.lead else zero
            out.append(a + b)
        return LaurentSeries(field, lead, tuple(out), prec)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.field, self.lead, tuple(-c for c in self.coeffs), self.prec)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check(other)
        prec = min(self.lead + other.prec, other.lead + self.prec)
        if not self.coeffs or not other.coeffs:
            return LaurentSeries.zero_to_prec(self.field, prec)
        lead = self.lead + other.lead
        conv = _mul_coeffs(self.field, self.coeffs, other.coeffs)
        return LaurentSeries(self.field, lead, tuple(conv[: prec - lead]), prec)

    def scaled(self, c: FieldElement) -> "LaurentSeries":
        if c.code == 0:
            return LaurentSeries.zero_to_prec(self.field, self.prec)
        return LaurentSeries(self.field, self.lead, tuple(c * x for x in self.coeffs), self.prec)

    def inverse(self) -> "LaurentSeries":
        """1/x; the result is valid to precision prec - 2*lead."""
        if not self.coeffs:
            raise ZeroToPrecisionError("cannot invert a series that is zero to precision")
        field = self.field
        digits = len(self.coeffs)
        inv_unit = _invert_unit(field, self.coeffs, digits)
        return LaurentSeries(field, -self.lead, tuple(inv_unit), self.prec - 2 * self.lead)

    def __truediv__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self * other.inverse()

    def mul_poly(self, poly: Poly) -> "LaurentSeries":
        """Multiply by an exact polynomial (short convolution, no padding)."""
        if poly.is_zero:
            return LaurentSeries.zero_to_prec(self.field, self.prec - 0)
        d = poly.degree
        prec = self.prec - d
        if not self.coeffs:
            return LaurentSeries.zero_to_prec(self.field, prec)
        lead = self.lead - d
        conv = _mul_coeffs(self.field, self.coeffs, tuple(reversed(poly.coeffs)))
        return LaurentSeries(self.field, lead, tuple(conv[: prec - lead]), prec)

    # -- precision management

    def truncated(self, prec: int) -> "LaurentSeries":
        if prec >= self.prec:
            return self
        return LaurentSeries(self.field, min(self.lead, prec), self.coeffs[: max(0, prec - self.lead)], prec)

    def assuming_exact(self, prec: int) -> "LaurentSeries":
        """Extend with zero coefficients, treating the stored window as exact.

        This deliberately overrides the precision contract; it is meant for
        Newton iteration, where the tail error is dominated by the distance
        to the root being refined.
        """
        if prec <= self.prec:
            return self.truncated(prec)
        zero = self.field.zero
        return LaurentSeries(
            self.field, self.lead, self.coeffs + (zero,) * (prec - self.prec), prec
        )

    # -- decomposition

    def polynomial_part(self) -> Poly:
        """The terms with n <= 0 as a polynomial in T; remainder has |.| < 1."""
        if self.prec < 1:
            raise PrecisionExhaustedError(
                "precision does not cover index 0; polynomial part unknown"
            )
        if self.lead > 0:
            return Poly.zero(self.field)
        upto = min(0, self.prec - 1)
        window = [self.coeff_at(n) for n in range(self.lead, upto + 1)]
        return Poly(self.field, tuple(reversed(window)))

    def fractional_part(self) -> "LaurentSeries":
        return self - LaurentSeries.from_poly(self.polynomial_part(), self.prec)

    # -- misc

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Exact coefficient agreement on the shared precision window."""
        self._check(other)
        prec = min(self.prec, other.prec)
        lead = min(self.lead, other.lead)
        if lead >= prec:
            return True
        return all(self.coeff_at(n) == other.coeff_at(n) for n in range(lead, prec))

    def __eq__(self, other):
        return (
            isinstance(other, LaurentSeries)
            and self.field is other.field
            and self.lead == other.lead
            and self.prec == other.prec
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.lead, self.prec, tuple(c.code for c in self.coeffs)))

    def __str__(self):
        body = ",".join(str(c) for c in self.coeffs)
        return f"T^{{{-self.lead}}}*[{body}]@{self.prec}"

    def __repr__(self):
        return f"LaurentSeries({self})"

    def _check(self, other):
        if not isinstance(other, LaurentSeries) or other.field is not self.field:
            raise TypeError("series live over different fields")


def _invert_unit(field: Field, u: tuple, digits: int) -> list:
    """Newton inversion of a unit coefficient window (u[0] != 0)."""
    v = [u[0].inverse()]
    one = field.one
    zero = field.zero
    while len(v) < digits:
        m = min(2 * len(v), digits)
        err = list(_mul_coeffs(field, tuple(u[:m]), tuple(v))[:m])
        err[0] = err[0] - one
        corr = list(_mul_coeffs(field, tuple(v), tuple(err))[:m])
        corr += [zero] * (m - len(corr))
        v = list(v) + [zero] * (m - len(v))
        v = [a - b for a, b in zip(v, corr)]
    return v[:digits]


def series_from_rational(num: Poly, den: Poly, prec: int) -> LaurentSeries:
    """Long-division expansion of num/den, exact for all indices < prec."""
    if den.is_zero:
        raise ZeroDivisionError("denominator is the zero polynomial")
    if num.is_zero:
        return LaurentSeries.zero_to_prec(num.field, prec)
    lead = den.degree - num.degree
    if prec <= lead:
        return LaurentSeries.zero_to_prec(num.field, prec)
    # num/den = Q * T^(-K) + rem/(den*T^K) with |rem/den| < 1, so the digits
    # of the quotient are exactly the series coefficients at indices < K.
    k = prec
    quot = num.shifted(k) // den
    window = [num.field.zero] * (prec - lead)
    for i, c in enumerate(quot.coeffs):
        n = k - i
        if lead <= n < prec:
            window[n - lead] = c
    return LaurentSeries(num.field, lead, tuple(window), prec)


def series_abs(x: LaurentSeries) -> AbsExponent:
    return x.abs_exponent()


def polynomial_part(x: LaurentSeries) -> Poly:
    return x.polynomial_part()


def series_power(x: LaurentSeries, e: int, cache: dict | None = None) -> LaurentSeries:
    """x^e by binary powering; pass a cache dict to share powers across calls."""
    if e < 1:
        raise ValueError("series powers need e >= 1")
    if cache is None:
        cache = {}
    cache.setdefault(1, x)
    got = cache.get(e)
    if got is not None:
        return got
    half = series_power(x, e // 2, cache)
    out = half * half
    if e & 1:
        out = out * x
    cache[e] = out
    return out


def eval_poly_at_series(poly: XPoly, x: LaurentSeries, power_cache: dict | None = None) -> LaurentSeries:
    """Evaluate an X-polynomial at a series with exact precision propagation.

    Zero coefficients contribute nothing, so sparse equations only pay for
    the powers they reference; a shared power_cache lets a polynomial and
    its derivative be evaluated at the same point for one set of powers.
    """
    field = x.field
    terms = [(e, c) for e, c in enumerate(poly.coeffs) if not c.is_zero]
    if not terms:
        return LaurentSeries.zero_to_prec(field, x.prec)
    if power_cache is None:
        power_cache = {}
    acc = None
    const = None
    for e, c in terms:
        if e == 0:
            const = c
            continue
        term = series_power(x, e, power_cache).mul_poly(c)
        acc = term if acc is None else acc + term
    if const is not None:
        cap = acc.prec if acc is not None else x.prec
        cterm = LaurentSeries.from_poly(const, cap)
        acc = cterm if acc is None else acc + cterm
    return acc
