"""Newton lifting of simple roots of P(X) over F_q[T] inside F_q((1/T)).

This is the independent verification oracle for the family equations: a
root seeded from a few continued fraction letters is refined by x -> x -
P(x)/P'(x), with the residual valuation asserted to improve quadratically
at every step.  The lift trusts only the equation and the ultrametric, so
exact coefficient agreement with the letter-stream series is meaningful
evidence for both.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import XPoly
from .contfrac import ContinuedFraction, eval_cf
from .errors import DerivativeVanishesError, SeedNotConvergentError
from .laurent import LaurentSeries, eval_poly_at_series

_MAX_ITERATIONS = 200


@dataclass(frozen=True)
class LiftSeed:
    approx: LaurentSeries
    poly: XPoly


def seed_from_cf(poly: XPoly, cf: ContinuedFraction, n_letters: int = 3) -> LiftSeed:
    """Seed from the first few partial quotients; exact to 2*deg(q_n) + 1."""
    deg_sum = sum(a.degree for a in cf.letters(n_letters))
    return LiftSeed(eval_cf(cf, n_letters, 2 * deg_sum + 1), poly)


def newton_lift(seed: LiftSeed, target_prec: int) -> LaurentSeries:
    """Refine the seed until the root is exact for all indices < target_prec.

    Raises SeedNotConvergentError unless |P(x0)| < |P'(x0)|^2, and
    DerivativeVanishesError when P' is zero at the seed to working
    precision (for these equations the derivative degenerates to its
    lower-order terms, so a vanishing derivative is detected, not assumed).
    """
    poly = seed.poly
    deriv = poly.derivative()
    if deriv.is_zero:
        raise DerivativeVanishesError("the X-derivative is identically zero")
    x = seed.approx
    if x.is_zero_to_prec and poly.coeff(0).is_zero:
        return x  # 0 is an exact root
    max_coeff_deg = max((c.degree for c in poly.coeffs if not c.is_zero), default=0)
    head = max(0, -x.lead) if x.coeffs else 0
    overhead = max_coeff_deg + (poly.degree + 1) * head + 16
    final_work = target_prec + 2 * overhead
    work = min(final_work, 4 * max(x.prec, 8) + overhead)
    prev_residual_exp = None
    deriv_exp = None
    quad_slack = max(
        (c.degree + max(0, e - 2) * head for e, c in enumerate(poly.coeffs) if not c.is_zero and e >= 2),
        default=0,
    )
    for _ in range(_MAX_ITERATIONS):
        noise_floor = None if x.prec >= final_work else x.prec
        xw = x.assuming_exact(work)
        cache: dict = {}
        fx = eval_poly_at_series(poly, xw, cache)
        fpx = eval_poly_at_series(deriv, xw, cache)
        if fpx.is_zero_to_prec:
            raise DerivativeVanishesError(
                f"derivative is zero at the seed to precision {fpx.prec}"
            )
        deriv_exp = fpx.abs_exponent().as_int()
        if fx.is_zero_to_prec:
            if work >= final_work:
                # |x - root| <= |P(x)| / |P'(x)| certifies the returned window
                return xw.truncated(min(target_prec, fx.prec + deriv_exp))
            work = min(final_work, 2 * work)
            continue
        residual_exp = fx.abs_exponent().as_int()
        if prev_residual_exp is None:
            if not residual_exp < 2 * deriv_exp:
                raise SeedNotConvergentError(
                    f"|P(x0)| = q^{residual_exp} is not below |P'(x0)|^2 = q^{2 * deriv_exp}"
                )
        else:
            if not residual_exp < prev_residual_exp:
                raise SeedNotConvergentError(
                    "residual valuation stopped improving; seed outside the basin"
                )
            # valuation at least doubles less the fixed deficit, up to the
            # noise injected by extending x beyond its computed precision
            allowed = 2 * prev_residual_exp - 2 * deriv_exp + quad_slack
            if noise_floor is not None:
                allowed = max(allowed, deriv_exp - noise_floor)
            assert residual_exp <= allowed, "residual gained less than quadratically"
        prev_residual_exp = residual_exp
        correction = fx / fpx
        x = xw - correction
        accuracy = -(residual_exp - deriv_exp)  # agreement index with the true root
        work = min(final_work, max(work, 2 * accuracy + 2 * overhead + 32))
    raise SeedNotConvergentError("no convergence within the iteration budget")
