"""Exact arithmetic for hyperquadratic continued fractions over F_q((1/T)).

Builds the two block-structured families of continued fractions, verifies
their degree r+1 defining equations in exact truncated series arithmetic,
measures quadratic-approximation exponents as exact rationals, and decides
algebraic degree through threshold conditions evaluated without floating
point.
"""

from .algebra import (
    AbsExponent,
    Field,
    FieldElement,
    Poly,
    XPoly,
    field_make,
    frobenius_power,
    poly_abs,
    poly_gcd,
    resultant,
)
from .approx import (
    ExponentRecord,
    ExponentVerdict,
    degree_verdict,
    equality_conditions,
    estimate_lower_bounds,
    exponent_table,
    neq_witness,
    phi_alpha_n,
    phi_beta_n,
    run_phi_analysis,
    run_theta_analysis,
    theta_alpha_n,
    theta_beta_n,
    w1_estimate,
)
from .contfrac import (
    ContinuedFraction,
    ConvergentPair,
    Word,
    cf_distance,
    cf_series,
    concat,
    convergent_tail,
    convergents,
    eval_cf,
    expand,
    power,
)
from .hensel import LiftSeed, newton_lift, seed_from_cf
from .hyperfamilies import (
    PhiParams,
    PhiStream,
    ThetaParams,
    fib,
    phi_equation,
    phi_letters,
    theta_equation,
    theta_letters,
)
from .laurent import (
    LaurentSeries,
    eval_poly_at_series,
    polynomial_part,
    series_abs,
    series_from_rational,
)
from .quadratic import (
    QuadraticNumber,
    conjugate_gap,
    conjugate_series,
    mahler_height_check,
    quad_from_periodic_cf,
)

__version__ = "0.1.0"
