"""Shared random generators for the test corpus (all seeded by callers)."""

from hypercf.algebra import Poly
from hypercf.contfrac import Word


def random_element(rng, field, nonzero=False):
    els = list(field.elements())
    x = rng.choice(els)
    while nonzero and x.is_zero:
        x = rng.choice(els)
    return x


def random_poly(rng, field, deg):
    """A polynomial of exactly the given degree (deg -1 gives zero)."""
    if deg < 0:
        return Poly.zero(field)
    coeffs = [random_element(rng, field) for _ in range(deg + 1)]
    coeffs[-1] = random_element(rng, field, nonzero=True)
    return Poly(field, tuple(coeffs))


def random_letter(rng, field, max_deg):
    return random_poly(rng, field, rng.randint(1, max_deg))


def random_word(rng, field, length, max_deg):
    return Word(tuple(random_letter(rng, field, max_deg) for _ in range(length)))


def sylvester_resultant(a, b):
    """Independent oracle: cofactor expansion of the Sylvester determinant."""
    field = a.field
    m, n = a.degree, b.degree
    if m == 0 and n == 0:
        return Poly.one(field)
    if m == 0:
        return a.coeffs[0] ** n
    if n == 0:
        return b.coeffs[0] ** m
    zero = Poly.zero(field)
    ac = list(reversed(a.coeffs))
    bc = list(reversed(b.coeffs))
    rows = [[zero] * i + ac + [zero] * (n - 1 - i) for i in range(n)]
    rows += [[zero] * i + bc + [zero] * (m - 1 - i) for i in range(m)]

    def det(mat):
        if len(mat) == 1:
            return mat[0][0]
        acc = Poly.zero(field)
        for j, c in enumerate(mat[0]):
            if c.is_zero:
                continue
            minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
            term = c * det(minor)
            acc = acc + term if j % 2 == 0 else acc - term
        return acc

    return det(rows)


def xpoly_content_free_gcd_is_constant(a, b):
    """Oracle: Euclid with pseudo-divisions decides coprimality over F_q(T)."""
    from hypercf.algebra import XPoly, _xpoly_prem

    while not b.is_zero:
        if b.degree == 0:
            return True
        if a.degree < b.degree:
            a, b = b, a
            continue
        a, b = b, _xpoly_prem(a, b)
    return a.degree == 0
