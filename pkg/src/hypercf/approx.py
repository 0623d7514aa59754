"""Quadratic approximation pipeline: approximant sequences, exact exponent
records, threshold conditions, and degree verdicts for the two families.

Every emitted quantity is an exact rational.  The pipeline never claims a
limit: records hold finite-index ratios, and the closed-form limit each
family's ratios converge to is reported next to them for comparison.
Equality and degree certificates come from exact inequality evaluation
(square roots are compared by squaring with sign analysis, never by
floating point).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AbsExponent, Field, field_make
from .contfrac import ContinuedFraction, Word, cf_distance, denominator_degrees, first_disagreement
from .errors import ConditionFailedError, HypothesisViolatedError
from .hyperfamilies import PhiParams, PhiStream, ThetaParams, phi_letters, theta_block, theta_letters
from .quadratic import QuadraticNumber, quad_from_periodic_cf

LETTER_BUDGET = 6000


def geo_sum(r: int, n: int) -> int:
    """1 + r + ... + r^(n-1)."""
    return (r**n - 1) // (r - 1)


# ---------------------------------------------------------------------------
# approximant builders


def theta_alpha_n(params: ThetaParams, n: int) -> QuadraticNumber:
    """Quadratic sharing the first (k+1)(1+...+r^(n-1)) + r^n - 1 letters."""
    if n < 3:
        raise ValueError("approximant index n must be >= 3")
    _require_theta_irrational(params)
    field = params.field
    T = field.T
    pre = Word((T,) * params.k)
    for i in range(1, n):
        pre = pre + theta_block(params, i).power(params.k + 1)
    pre = pre + Word((T,))
    lam_T = T.scaled(params.lam)
    if field.p == 2:
        per = Word((lam_T,))
    else:
        per = Word((lam_T, T.scaled(params.mu)))
    return quad_from_periodic_cf(pre, per)


def theta_beta_n(params: ThetaParams, n: int) -> QuadraticNumber:
    """Quadratic sharing the first (k+1)(1+...+r^n) + r^n - 1 letters.

    Built from the rotated form of the periodic tail whose preperiod ends in
    T while the period ends in a twisted letter, so the two-sided
    conjugate-gap bound for distinct boundary quotients applies.
    """
    if n < 3:
        raise ValueError("approximant index n must be >= 3")
    _require_theta_irrational(params)
    field = params.field
    T = field.T
    r = params.r
    pre = Word((T,) * params.k)
    for i in range(1, n - 1):
        pre = pre + theta_block(params, i).power(params.k + 1)
    pre = pre + theta_block(params, n - 1).power(params.k) + Word((T,))
    lam_T = T.scaled(params.lam)
    if field.p == 2:
        run1 = (lam_T,) * (r ** (n - 1) - 1)
        run2 = (lam_T,) * (r**n - r ** (n - 1))
    else:
        mu_T = T.scaled(params.mu)
        run1 = (lam_T, mu_T) * ((r ** (n - 1) - 1) // 2)
        run2 = (lam_T, mu_T) * ((r**n - r ** (n - 1)) // 2)
    per = Word(run1 + (T,) + run2)
    return quad_from_periodic_cf(pre, per)


def _require_theta_irrational(params: ThetaParams) -> None:
    if params.lam == params.field.one:
        raise HypothesisViolatedError(
            "lambda = 1 makes the fraction ultimately periodic (a quadratic value)"
        )


def phi_part1_m(params: PhiParams) -> int:
    """The run length m of the first certified parameter pattern.

    Requires eps = (1, 1) and lambda_1 != 1; m is the largest index with
    lambda_i = 1 for 2 <= i <= m, so lambda_{m+1} != 1 holds automatically
    whenever m < ell.
    """
    one = params.field.one
    if params.eps != (one, one):
        raise HypothesisViolatedError("the first parameter pattern needs eps = (1, 1)")
    if params.lambdas[0] == one:
        raise HypothesisViolatedError("the first parameter pattern needs lambda_1 != 1")
    m = 1
    while m < params.ell and params.lambdas[m] == one:
        m += 1
    return m


def phi_part2_check(params: PhiParams) -> None:
    """Validate the second certified parameter pattern (all lambda_i equal,
    eps = (1, 1), r a power of q)."""
    one = params.field.one
    if params.eps != (one, one):
        raise HypothesisViolatedError("the second parameter pattern needs eps = (1, 1)")
    if params.t % params.field.s != 0:
        raise HypothesisViolatedError("the second parameter pattern needs r to be a power of q")
    lam = params.lambdas[0]
    if any(x != lam for x in params.lambdas):
        raise HypothesisViolatedError("the second parameter pattern needs all lambda_i equal")
    if lam == one:
        raise HypothesisViolatedError("lambda = 1 makes the fraction ultimately periodic")


def phi_index(params: PhiParams, n: int) -> int:
    """i(n) = 1 + ell (1 + r + ... + r^(n-1)), the n-th twisted position."""
    return 1 + params.ell * geo_sum(params.r, n)


def phi_alpha_n(params: PhiParams, n: int) -> QuadraticNumber:
    """First-pattern approximant [0; lambda_1 T ... lambda_{i(n)} T, periodic T]."""
    if n < 1:
        raise ValueError("approximant index n must be >= 1")
    phi_part1_m(params)
    field = params.field
    stream = PhiStream(params)
    i_n = phi_index(params, n)
    if stream.coefficient(i_n) != params.lambdas[0] ** (params.r**n):
        raise AssertionError("stream coefficient at i(n) disagrees with its closed form")
    T = field.T
    pre = Word(tuple(T.scaled(stream.coefficient(j)) for j in range(1, i_n + 1)))
    return quad_from_periodic_cf(pre, Word((T,)))


def phi_beta_n(params: PhiParams, n: int) -> QuadraticNumber:
    """Second-pattern approximant with the twisted letter inside the period."""
    if n < 1:
        raise ValueError("approximant index n must be >= 1")
    phi_part2_check(params)
    field = params.field
    stream = PhiStream(params)
    r = params.r
    cut = phi_index(params, n) - r ** (n - 1)
    lam = params.lambdas[0]
    if stream.coefficient(cut) != lam:
        raise AssertionError("stream coefficient before the period disagrees with lambda")
    T = field.T
    pre = Word(tuple(T.scaled(stream.coefficient(j)) for j in range(1, cut + 1)))
    per = Word((T,) * (r ** (n - 1) - 1) + (T.scaled(lam),) + (T,) * (r**n - r ** (n - 1)))
    return quad_from_periodic_cf(pre, per)


# expected shared-prefix lengths, asserted before each distance measurement


def theta_alpha_prefix(params: ThetaParams, n: int) -> int:
    return (params.k + 1) * geo_sum(params.r, n) + params.r**n - 1


def theta_beta_prefix(params: ThetaParams, n: int) -> int:
    return (params.k + 1) * geo_sum(params.r, n + 1) + params.r**n - 1


def phi_alpha_prefix(params: PhiParams, n: int, m: int) -> int:
    return params.ell * geo_sum(params.r, n) + m * params.r**n


def phi_beta_prefix(params: PhiParams, n: int) -> int:
    return params.ell * geo_sum(params.r, n + 1) + params.r**n


# ---------------------------------------------------------------------------
# exponent records


@dataclass(frozen=True)
class ExponentRecord:
    index: int
    dist_exp: AbsExponent
    height_exp: int
    gap_exp: AbsExponent
    dist_ratio: Fraction
    gap_ratio: Fraction


def exponent_table(xi: ContinuedFraction, approximants, expected_prefixes=None,
                   indices=None) -> list:
    """Exact records for a sequence of quadratic approximants of xi.

    Distances come from the first disagreeing partial quotient, heights and
    conjugate gaps from the normalized minimal polynomials; ratios follow
    the -log base q convention, so a distance q^-d at height q^h gives d/h.
    """
    records = []
    prev_height = None
    for pos, alpha in enumerate(approximants):
        cf_alpha = alpha.cf()
        if expected_prefixes is not None:
            idx, _ = first_disagreement(xi, cf_alpha, max_scan=expected_prefixes[pos] + 64)
            if idx - 1 != expected_prefixes[pos]:
                raise AssertionError(
                    f"shared prefix {idx - 1} letters, expected {expected_prefixes[pos]}"
                )
        dist = cf_distance(xi, cf_alpha)
        if alpha.insep != 1:
            raise AssertionError("approximant is inseparable; records need alpha != alpha'")
        height = alpha.height_exp
        gap = alpha.conj_gap_exp
        if not (height > 0 and dist.exp < 0):
            raise AssertionError("degenerate record: height or distance out of range")
        if prev_height is not None and not height > prev_height:
            raise AssertionError("approximant heights must strictly increase")
        prev_height = height
        records.append(
            ExponentRecord(
                index=indices[pos] if indices is not None else pos,
                dist_exp=dist,
                height_exp=height,
                gap_exp=gap,
                dist_ratio=Fraction(-dist.exp, height),
                gap_ratio=Fraction(-gap.exp, height),
            )
        )
    return records


@dataclass(frozen=True)
class LowerBounds:
    w2_star: Fraction
    w2: Fraction
    low_confidence: bool


def estimate_lower_bounds(records) -> LowerBounds:
    """Finite-index lower bounds from the last record of a table."""
    if not records:
        raise ValueError("need at least one record")
    last = records[-1]
    if last.gap_ratio < 0:
        raise AssertionError("gap ratio below zero; the two-sided bound does not apply")
    return LowerBounds(
        w2_star=last.dist_ratio - 1,
        w2=last.dist_ratio + last.gap_ratio - 1,
        low_confidence=len(records) < 2,
    )


# closed-form limit targets per branch: (distance ratio limit, gap ratio limit)


def theta_alpha_limits(r: int, k: int) -> tuple:
    return 1 + Fraction(r - 1, k + 1), Fraction(1)


def theta_beta_limits(r: int, k: int) -> tuple:
    d = 2 * r * (k + 1) + (r - 1) * (r - 2)
    return r - Fraction(r * (r - 1) * (r - 4), d), 1 - Fraction(r * (r - 1), d)


def phi_alpha_limits(r: int, ell: int, m: int) -> tuple:
    return 1 + Fraction(m * (r - 1), ell), Fraction(1)


def phi_beta_limits(r: int, ell: int) -> tuple:
    d = 2 * ell * r + (r - 1) * (r - 2)
    return r - Fraction(r * (r - 1) * (r - 4), d), 1 - Fraction(r * (r - 1), d)


# ---------------------------------------------------------------------------
# exact condition evaluation


def sqrt_leq(mult: Fraction, radicand: int, bound: Fraction) -> bool:
    """Decide mult * sqrt(radicand) <= bound exactly, for mult >= 0."""
    if mult < 0:
        raise ValueError("mult must be >= 0")
    if bound < 0:
        return False
    return mult * mult * radicand <= bound * bound


def alpha_threshold_holds(r: int, k_over: Fraction, d: int) -> bool:
    """k' <= 2(r-1)/(d + sqrt(d^2 + 4(2r-1)d + 4)) - 1 for rational k' >= 0.

    Shared by both families: the first uses k' = k, the second
    k' = ell/m - 1.
    """
    radicand = d * d + 4 * (2 * r - 1) * d + 4
    # (k'+1)(d + sqrt(S)) <= 2(r-1)  <=>  (k'+1) sqrt(S) <= 2(r-1) - (k'+1) d
    kp1 = k_over + 1
    return sqrt_leq(kp1, radicand, 2 * (r - 1) - kp1 * d)


def beta_threshold_holds(r: int, denom: int, d: int) -> bool:
    """2rd <= (r - 2 - E)(r - d - E) with E = r(r-1)(r-4)/denom, exactly."""
    e = Fraction(r * (r - 1) * (r - 4), denom)
    return 2 * r * d <= (r - 2 - e) * (r - d - e)


def bestquad_condition(theta_ratio: Fraction, dist_limit: Fraction, d: int) -> bool:
    """The underlying sufficient condition 2 d theta <= (d - 2 + delta) delta
    with delta = dist_limit - d; exact rational arithmetic."""
    delta = dist_limit - d
    if delta <= 0:
        return False
    return 2 * d * theta_ratio <= (d - 2 + delta) * delta


@dataclass(frozen=True)
class ConditionReport:
    condition: str
    branch: str
    d: int
    holds: bool
    d_max: int | None
    w_star: Fraction
    w: Fraction


def _scan_d_max(pred) -> int | None:
    """Largest d >= 2 with pred(d), or None; the thresholds are monotone in d."""
    if not pred(2):
        return None
    d = 2
    while pred(d + 1):
        d += 1
    return d


def equality_conditions(family: str, *, r: int, d: int, k: int | None = None,
                        ell: int | None = None, m: int | None = None) -> list:
    """Exact pass/fail for every certification threshold of a family.

    A holding threshold certifies its w_star/w values for all indices
    2 <= n <= d; d_max is the largest certifiable d.
    """
    reports = []
    if family == "theta":
        if k is None:
            raise ValueError("theta conditions need k")
        a_dist, _ = theta_alpha_limits(r, k)
        pred_a = lambda dd: alpha_threshold_holds(r, Fraction(k), dd)
        reports.append(
            ConditionReport("alpha-branch-threshold", "alpha", d, pred_a(d),
                            _scan_d_max(pred_a), a_dist - 1, a_dist)
        )
        b_dist, b_gap = theta_beta_limits(r, k)
        denom = 2 * r * (k + 1) + (r - 1) * (r - 2)
        pred_b = lambda dd: beta_threshold_holds(r, denom, dd)
        reports.append(
            ConditionReport("beta-branch-threshold", "beta", d, pred_b(d),
                            _scan_d_max(pred_b), b_dist - 1, b_dist + b_gap - 1)
        )
    elif family == "phi1":
        if ell is None or m is None:
            raise ValueError("first-pattern conditions need ell and m")
        dist, _ = phi_alpha_limits(r, ell, m)
        pred = lambda dd: alpha_threshold_holds(r, Fraction(ell, m) - 1, dd)
        reports.append(
            ConditionReport("alpha-branch-threshold", "alpha", d, pred(d),
                            _scan_d_max(pred), dist - 1, dist)
        )
    elif family == "phi2":
        if ell is None:
            raise ValueError("second-pattern conditions need ell")
        dist, gap = phi_beta_limits(r, ell)
        denom = 2 * ell * r + (r - 1) * (r - 2)
        pred = lambda dd: beta_threshold_holds(r, denom, dd)
        reports.append(
            ConditionReport("beta-branch-threshold", "beta", d, pred(d),
                            _scan_d_max(pred), dist - 1, dist + gap - 1)
        )
    else:
        raise ValueError(f"unknown family {family!r}")
    return reports


# ---------------------------------------------------------------------------
# degree verdicts


def theta_degree_condition(r: int, k: int) -> bool:
    """k = 0 or k > (r^2 - 4r + 2)(r - 1)/(2r) - 1."""
    return k == 0 or k > Fraction((r * r - 4 * r + 2) * (r - 1), 2 * r) - 1


def phi1_degree_condition(r: int, ell: int, m: int) -> bool:
    """m/ell > (r - 2)/(r - 1)."""
    return Fraction(m, ell) > Fraction(r - 2, r - 1)


def phi2_degree_condition(r: int, ell: int) -> bool:
    """ell > (r^2 - 4r + 2)(r - 1)/(2r)."""
    return ell > Fraction((r * r - 4 * r + 2) * (r - 1), 2 * r)


def degree_verdict(family: str, *, r: int, k: int | None = None, ell: int | None = None,
                   m: int | None = None, periodic: bool = False,
                   measured_w2_lower: Fraction | None = None) -> tuple:
    """(degree or None, tag): the degree report for the family value.

    'periodic' wins (degree 2); otherwise the closed-form criterion
    certifies r + 1; otherwise a measured w2 lower bound above r - 1 is
    reported as degree r + 1 with the 'measured' tag (finite-index
    evidence, not a certificate); otherwise undetermined.
    """
    if periodic:
        return 2, "periodic"
    if family == "theta":
        certified = theta_degree_condition(r, k)
    elif family == "phi1":
        certified = phi1_degree_condition(r, ell, m)
    elif family == "phi2":
        certified = phi2_degree_condition(r, ell)
    else:
        raise ValueError(f"unknown family {family!r}")
    if certified:
        return r + 1, "corollary"
    if measured_w2_lower is not None and measured_w2_lower > r - 1:
        return r + 1, "measured"
    return None, "undetermined"


# ---------------------------------------------------------------------------
# first-exponent estimate


def w1_estimate(cf: ContinuedFraction, n: int) -> Fraction:
    """Tail-windowed max of deg q_{m+1} / deg q_m over n/2 <= m < n.

    A finite proxy for the limsup; early indices are excluded so the
    estimate converges to the limsup instead of freezing at the first
    ratios.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    degs = denominator_degrees(cf, n)
    lo = max(1, n // 2)
    return max(Fraction(degs[i + 1], degs[i]) for i in range(lo, n))


# ---------------------------------------------------------------------------
# verdict assembly


@dataclass(frozen=True)
class BranchTable:
    branch: str
    dist_limit: Fraction
    gap_limit: Fraction
    records: tuple
    bounds: LowerBounds


@dataclass(frozen=True)
class ExponentVerdict:
    family: str
    params: dict
    n_range: tuple
    w1_est: Fraction | None
    w2_star_lower: Fraction | None
    w2_lower: Fraction | None
    limit_w2_star: Fraction | None
    limit_w2: Fraction | None
    conditions: tuple
    equality: dict | None
    degree: int | None
    degree_tag: str
    notes: tuple


def _equality_claim(conditions) -> dict | None:
    holding = [c for c in conditions if c.holds and c.d_max is not None]
    if not holding:
        return None
    best = holding[0]
    return {
        "w_star": best.w_star,
        "w": best.w,
        "d_max": best.d_max,
        "via": f"{best.condition} ({best.branch} branch)",
    }


def _periodic_verdict(family: str, pdict: dict, note: str) -> ExponentVerdict:
    return ExponentVerdict(
        family=family, params=pdict, n_range=(0, 0), w1_est=None,
        w2_star_lower=None, w2_lower=None, limit_w2_star=None, limit_w2=None,
        conditions=(), equality=None, degree=2, degree_tag="periodic",
        notes=(note,),
    )


def _branch_table(xi, builder, prefix_fn, limits, branch, lo, hi) -> BranchTable:
    indices = list(range(lo, hi + 1))
    quads = [builder(n) for n in indices]
    prefixes = [prefix_fn(n) for n in indices]
    records = exponent_table(xi, quads, prefixes, indices)
    return BranchTable(branch, limits[0], limits[1], tuple(records),
                       estimate_lower_bounds(records))


def default_theta_range(params: ThetaParams) -> tuple:
    r = params.r
    k = params.k
    n = 3
    while (k + 1) * geo_sum(r, n + 1) + r ** (n + 1) <= LETTER_BUDGET:
        n += 1
    return 3, max(3, n)


def default_phi_range(params: PhiParams) -> tuple:
    r = params.r
    ell = params.ell
    n = 2
    while ell * geo_sum(r, n + 2) + (ell + 1) * r ** (n + 1) <= LETTER_BUDGET:
        n += 1
    return 2, max(2, n)


def run_theta_analysis(params: ThetaParams, n_min: int | None = None,
                       n_max: int | None = None, w1_letters: int = 400) -> tuple:
    """Measure both approximant branches and assemble the verdict.

    Returns (branch tables, ExponentVerdict).
    """
    field = params.field
    r, k = params.r, params.k
    pdict = {
        "family": "theta", "p": field.p, "s": field.s, "q": field.q,
        "t": params.t, "r": r, "k": k, "lambda": str(params.lam),
    }
    if params.lam == field.one:
        return [], _periodic_verdict(
            "theta", pdict,
            "lambda = 1: the continued fraction is ultimately periodic, hence quadratic",
        )
    lo, hi = default_theta_range(params)
    if n_min is not None:
        lo = max(3, n_min)
    if n_max is not None:
        hi = n_max
    if hi < lo:
        raise ValueError("empty index range")
    xi = theta_letters(params)
    tables = [
        _branch_table(xi, lambda n: theta_alpha_n(params, n),
                      lambda n: theta_alpha_prefix(params, n),
                      theta_alpha_limits(r, k), "alpha", lo, hi),
        _branch_table(xi, lambda n: theta_beta_n(params, n),
                      lambda n: theta_beta_prefix(params, n),
                      theta_beta_limits(r, k), "beta", lo, hi),
    ]
    conditions = equality_conditions("theta", r=r, d=2, k=k)
    w2_star = max(t.bounds.w2_star for t in tables)
    w2 = max(t.bounds.w2 for t in tables)
    degree, tag = degree_verdict("theta", r=r, k=k, measured_w2_lower=w2)
    verdict = ExponentVerdict(
        family="theta", params=pdict, n_range=(lo, hi),
        w1_est=w1_estimate(xi, w1_letters),
        w2_star_lower=w2_star, w2_lower=w2,
        limit_w2_star=max(t.dist_limit - 1 for t in tables),
        limit_w2=max(t.dist_limit + t.gap_limit - 1 for t in tables),
        conditions=tuple(conditions),
        equality=_equality_claim(conditions),
        degree=degree, degree_tag=tag,
        notes=("records are exact finite-index ratios; limits are the closed-form targets",),
    )
    return tables, verdict


def run_phi_analysis(params: PhiParams, n_min: int | None = None,
                     n_max: int | None = None, w1_letters: int = 400) -> tuple:
    """Measure every applicable parameter-pattern branch for the second family."""
    field = params.field
    r, ell = params.r, params.ell
    one = field.one
    pdict = {
        "family": "phi", "p": field.p, "s": field.s, "q": field.q,
        "t": params.t, "r": r, "ell": ell,
        "lambdas": [str(x) for x in params.lambdas],
        "eps": [str(e) for e in params.eps],
    }
    if params.eps == (one, one) and all(x == one for x in params.lambdas):
        return [], _periodic_verdict(
            "phi", pdict,
            "all parameters 1: the continued fraction is ultimately periodic, hence quadratic",
        )
    lo, hi = default_phi_range(params)
    if n_min is not None:
        lo = max(1, n_min)
    if n_max is not None:
        hi = n_max
    if hi < lo:
        raise ValueError("empty index range")
    xi = phi_letters(params).reciprocal()
    tables = []
    conditions = []
    degree_results = []
    notes = ["records are exact finite-index ratios; limits are the closed-form targets"]
    try:
        m = phi_part1_m(params)
    except HypothesisViolatedError as err:
        m = None
        notes.append(f"first parameter pattern not applicable: {err}")
    if m is not None:
        tables.append(
            _branch_table(xi, lambda n: phi_alpha_n(params, n),
                          lambda n: phi_alpha_prefix(params, n, m),
                          phi_alpha_limits(r, ell, m), "alpha", lo, hi)
        )
        conditions += equality_conditions("phi1", r=r, d=2, ell=ell, m=m)
        degree_results.append(degree_verdict("phi1", r=r, ell=ell, m=m))
    try:
        phi_part2_check(params)
        part2_ok = True
    except HypothesisViolatedError as err:
        part2_ok = False
        notes.append(f"second parameter pattern not applicable: {err}")
    if part2_ok:
        tables.append(
            _branch_table(xi, lambda n: phi_beta_n(params, n),
                          lambda n: phi_beta_prefix(params, n),
                          phi_beta_limits(r, ell), "beta", lo, hi)
        )
        conditions += equality_conditions("phi2", r=r, d=2, ell=ell)
        degree_results.append(degree_verdict("phi2", r=r, ell=ell))
    if not tables:
        raise HypothesisViolatedError(
            "parameters match neither certified pattern; " + "; ".join(notes[1:])
        )
    w2_star = max(t.bounds.w2_star for t in tables)
    w2 = max(t.bounds.w2 for t in tables)
    degree, tag = None, "undetermined"
    for d_val, d_tag in degree_results:
        if d_tag == "corollary":
            degree, tag = d_val, d_tag
            break
    if degree is None and w2 > r - 1:
        degree, tag = r + 1, "measured"
    verdict = ExponentVerdict(
        family="phi", params=pdict, n_range=(lo, hi),
        w1_est=w1_estimate(xi, w1_letters),
        w2_star_lower=w2_star, w2_lower=w2,
        limit_w2_star=max(t.dist_limit - 1 for t in tables),
        limit_w2=max(t.dist_limit + t.gap_limit - 1 for t in tables),
        conditions=tuple(conditions),
        equality=_equality_claim(conditions),
        degree=degree, degree_tag=tag,
        notes=tuple(notes),
    )
    return tables, verdict


# ---------------------------------------------------------------------------
# the distinct-exponent witness


def _pick_lambda(field: Field):
    """Deterministic lambda outside {0, 1, 2}: first suitable generator power."""
    two = field.one + field.one
    x = field.generator
    for _ in range(field.q):
        if not x.is_zero and x != field.one and x != two:
            return x
        x = x * field.generator
    raise AssertionError("no valid lambda exists; field too small")


def neq_witness(n: int, q: int, t: int) -> ExponentVerdict:
    """A degree r+1 value whose n-th exponents provably differ.

    Checks r = q^t against the exact size threshold
    r >= (3n + 2 + sqrt(9n^2 + 4n + 4))/2; on success the k = 0 member of
    the first family with a fixed lambda outside {1, 2} certifies
    w_m* = r - 1 and w_m = r for all 2 <= m <= n, with degree r + 1.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if q < 4:
        raise ValueError("need q >= 4 so that lambda outside {1, 2} exists")
    if t < 1:
        raise ValueError("need t >= 1")
    p, s = _prime_power(q)
    r = q**t
    radicand = 9 * n * n + 4 * n + 4
    lhs = 2 * r - 3 * n - 2
    if lhs < 0 or lhs * lhs < radicand:
        margin = lhs * lhs - radicand if lhs >= 0 else None
        raise ConditionFailedError(
            f"r = {r} is below the size threshold (3n + 2 + sqrt({radicand}))/2"
            + (f"; squared margin {margin}" if margin is not None else "; 2r - 3n - 2 < 0"),
            margin=margin,
        )
    if not alpha_threshold_holds(r, Fraction(0), n):
        raise AssertionError("the k = 0 threshold must follow from the size bound on r")
    field = field_make(p, s)
    lam = _pick_lambda(field)
    degree, tag = degree_verdict("theta", r=r, k=0)
    condition = ConditionReport(
        condition="alpha-branch-threshold", branch="alpha", d=n, holds=True,
        d_max=_scan_d_max(lambda dd: alpha_threshold_holds(r, Fraction(0), dd)),
        w_star=Fraction(r - 1), w=Fraction(r),
    )
    return ExponentVerdict(
        family="theta",
        params={
            "family": "theta", "p": p, "s": s, "q": q, "t": t, "r": r,
            "k": 0, "lambda": str(lam),
        },
        n_range=(n, n),
        w1_est=None, w2_star_lower=None, w2_lower=None,
        limit_w2_star=Fraction(r - 1), limit_w2=Fraction(r),
        conditions=(condition,),
        equality={
            "w_star": Fraction(r - 1), "w": Fraction(r), "d_max": condition.d_max,
            "via": "alpha-branch-threshold (alpha branch)",
        },
        degree=degree, degree_tag=tag,
        notes=(f"w_m = {r} differs from w_m* = {r - 1} for every 2 <= m <= {n}",),
    )


def _prime_power(q: int) -> tuple:
    for p in range(2, q + 1):
        if q % p == 0:
            s = 0
            m = q
            while m % p == 0:
                m //= p
                s += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, s
    raise ValueError(f"{q} is not a prime power")
