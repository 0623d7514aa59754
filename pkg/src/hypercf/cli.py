"""Command line front end: reproducible JSON/CSV experiment tables.

Commands: generate (letter listings), verify (equation residuals), exponents
(approximation tables and verdicts), neq (the distinct-exponent witness).
Identical invocations produce byte-identical output: the field model is
deterministic and every number is emitted as an exact rational in lowest
terms.  Exit codes: 0 pass, 1 verification/condition failure, 2 validation
error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .algebra import AbsExponent, Poly, XPoly, field_make
from .approx import neq_witness, run_phi_analysis, run_theta_analysis
from .contfrac import cf_series, denominator_degrees
from .errors import (
    ConditionFailedError,
    HypercfError,
    HypothesisViolatedError,
    PrecisionExhaustedError,
)
from .hyperfamilies import PhiParams, ThetaParams, phi_equation, phi_letters, theta_equation, theta_letters
from .laurent import eval_poly_at_series

SCHEMA = "hypercf/1"
RESIDUAL_SLACK = 60  # residual must be below -(precision - slack)


def frac_str(x) -> str:
    if x is None:
        return "none"
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def absexp_str(e: AbsExponent) -> str:
    return "-inf" if e.is_neg_inf else frac_str(e.exp)


# ---------------------------------------------------------------------------
# parameter handling


def _parse_field(args):
    return field_make(args.p, args.s)


def _theta_params(args) -> ThetaParams:
    field = _parse_field(args)
    if args.lam is None:
        raise ValueError("theta needs --lambda")
    return ThetaParams(field, t=args.t, k=args.k, lam=field.parse(args.lam))


def _phi_params(args) -> PhiParams:
    field = _parse_field(args)
    if args.lambdas:
        lams = [field.parse(x) for x in args.lambdas.split(",")]
    elif args.lam is not None and args.ell is not None:
        lams = [field.parse(args.lam)] * args.ell
    else:
        raise ValueError("phi needs --lambdas (or --lambda with --ell)")
    if args.ell is not None and args.ell != len(lams):
        raise ValueError(f"--ell {args.ell} does not match {len(lams)} lambdas")
    eps = tuple(field.parse(x) for x in args.eps.split(","))
    if len(eps) != 2:
        raise ValueError("--eps needs exactly two field elements")
    return PhiParams(field, t=args.t, lambdas=tuple(lams), eps=eps)


def _family(args):
    if args.family == "theta":
        params = _theta_params(args)
        return params, theta_letters(params), theta_equation(params)
    params = _phi_params(args)
    return params, phi_letters(params), phi_equation(params)


def _params_dict(params) -> dict:
    field = params.field
    base = {"family": "theta" if isinstance(params, ThetaParams) else "phi",
            "p": field.p, "s": field.s, "q": field.q, "t": params.t, "r": params.r}
    if isinstance(params, ThetaParams):
        base["k"] = params.k
        base["lambda"] = str(params.lam)
    else:
        base["ell"] = params.ell
        base["lambdas"] = [str(x) for x in params.lambdas]
        base["eps"] = [str(e) for e in params.eps]
    return base


def _periodic_note(params) -> str | None:
    field = params.field
    if isinstance(params, ThetaParams):
        if params.lam == field.one:
            return "lambda = 1: the continued fraction is ultimately periodic (quadratic value)"
        return None
    if params.eps == (field.one, field.one) and all(x == field.one for x in params.lambdas):
        return "all parameters 1: the continued fraction is ultimately periodic (quadratic value)"
    return None


# ---------------------------------------------------------------------------
# commands


def cmd_generate(args):
    params, cf, _ = _family(args)
    n = args.letters
    if isinstance(params, PhiParams):
        cf = cf.reciprocal()  # a0 = 0 form: letters are the lambda_i T themselves
    letters = cf.letters(n)
    degs = denominator_degrees(cf, n)
    rows = [
        {"n": i, "letter": str(a), "q_degree": degs[i]}
        for i, a in enumerate(letters, start=1)
    ]
    payload = {
        "schema": SCHEMA,
        "command": "generate",
        "params": _params_dict(params),
        "letters": rows,
    }
    note = _periodic_note(params)
    if note:
        payload["note"] = note
    return 0, payload, rows


def cmd_verify(args):
    params, cf, equation = _family(args)
    prec = args.precision
    threshold = -(prec - RESIDUAL_SLACK)
    if args.sabotage:
        one = Poly.one(params.field)
        equation = XPoly(params.field, (equation.coeff(0) + one,) + equation.coeffs[1:])
    try:
        series = cf_series(cf, prec)
    except PrecisionExhaustedError as err:
        raise PrecisionExhaustedError(f"{err}; raise --precision") from err
    residual = eval_poly_at_series(equation, series)
    if residual.is_zero_to_prec:
        bound = -residual.prec
        resolved = False
    else:
        bound = residual.abs_exponent().as_int()
        resolved = True
    ok = bound <= threshold
    payload = {
        "schema": SCHEMA,
        "command": "verify",
        "params": _params_dict(params),
        "precision": prec,
        "equation": str(equation),
        "sabotaged": bool(args.sabotage),
        "residual_exp_bound": frac_str(bound),
        "residual_resolved": resolved,
        "threshold_exp": frac_str(threshold),
        "pass": ok,
    }
    row = {k: payload[k] for k in
           ("precision", "residual_exp_bound", "threshold_exp", "pass")}
    return (0 if ok else 1), payload, [row]


def _record_row(branch, rec) -> dict:
    return {
        "branch": branch,
        "n": rec.index,
        "dist_exp": absexp_str(rec.dist_exp),
        "height_exp": frac_str(rec.height_exp),
        "gap_exp": absexp_str(rec.gap_exp),
        "dist_ratio": frac_str(rec.dist_ratio),
        "gap_ratio": frac_str(rec.gap_ratio),
    }


def _verdict_dict(verdict) -> dict:
    return {
        "n_range": list(verdict.n_range),
        "w1_est": frac_str(verdict.w1_est) if verdict.w1_est is not None else None,
        "w2_star_lower": frac_str(verdict.w2_star_lower) if verdict.w2_star_lower is not None else None,
        "w2_lower": frac_str(verdict.w2_lower) if verdict.w2_lower is not None else None,
        "limit_w2_star": frac_str(verdict.limit_w2_star) if verdict.limit_w2_star is not None else None,
        "limit_w2": frac_str(verdict.limit_w2) if verdict.limit_w2 is not None else None,
        "conditions": [
            {
                "condition": c.condition,
                "branch": c.branch,
                "d": c.d,
                "holds": c.holds,
                "d_max": c.d_max,
                "w_star": frac_str(c.w_star),
                "w": frac_str(c.w),
            }
            for c in verdict.conditions
        ],
        "equality": None if verdict.equality is None else {
            "w_star": frac_str(verdict.equality["w_star"]),
            "w": frac_str(verdict.equality["w"]),
            "d_max": verdict.equality["d_max"],
            "via": verdict.equality["via"],
        },
        "degree": verdict.degree,
        "degree_tag": verdict.degree_tag,
        "notes": list(verdict.notes),
    }


def cmd_exponents(args):
    if args.family == "theta":
        params = _theta_params(args)
        tables, verdict = run_theta_analysis(params, args.n_min, args.n_max)
    else:
        params = _phi_params(args)
        tables, verdict = run_phi_analysis(params, args.n_min, args.n_max)
    rows = []
    table_payload = []
    for tab in tables:
        recs = [_record_row(tab.branch, rec) for rec in tab.records]
        rows.extend(recs)
        table_payload.append(
            {
                "branch": tab.branch,
                "dist_ratio_limit": frac_str(tab.dist_limit),
                "gap_ratio_limit": frac_str(tab.gap_limit),
                "w2_star_lower": frac_str(tab.bounds.w2_star),
                "w2_lower": frac_str(tab.bounds.w2),
                "low_confidence": tab.bounds.low_confidence,
                "records": recs,
            }
        )
    payload = {
        "schema": SCHEMA,
        "command": "exponents",
        "params": verdict.params,
        "tables": table_payload,
        "verdict": _verdict_dict(verdict),
    }
    return 0, payload, rows


def cmd_neq(args):
    try:
        verdict = neq_witness(args.n, args.q, args.t)
    except ConditionFailedError as err:
        payload = {
            "schema": SCHEMA,
            "command": "neq",
            "n": args.n,
            "q": args.q,
            "t": args.t,
            "pass": False,
            "reason": str(err),
            "squared_margin": err.margin,
        }
        return 1, payload, [payload]
    payload = {
        "schema": SCHEMA,
        "command": "neq",
        "n": args.n,
        "q": args.q,
        "t": args.t,
        "pass": True,
        "witness_params": verdict.params,
        "verdict": _verdict_dict(verdict),
    }
    row = {
        "n": args.n, "q": args.q, "t": args.t, "pass": True,
        "w_star": frac_str(verdict.equality["w_star"]),
        "w": frac_str(verdict.equality["w"]),
        "degree": verdict.degree,
    }
    return 0, payload, [row]


# ---------------------------------------------------------------------------
# plumbing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercf",
        description="Exact experiments with hyperquadratic continued fractions over F_q((1/T))",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_flags(p):
        p.add_argument("--p", type=int, required=True, help="field characteristic")
        p.add_argument("--s", type=int, default=1, help="extension degree, q = p^s")
        p.add_argument("--family", choices=("theta", "phi"), required=True)
        p.add_argument("--t", type=int, required=True, help="twist exponent")
        p.add_argument("--k", type=int, default=0, help="theta block repetition minus one")
        p.add_argument("--ell", type=int, default=None, help="phi head length")
        p.add_argument("--lambda", dest="lam", default=None,
                       help="field element, e.g. g, g^2, 1")
        p.add_argument("--lambdas", default=None,
                       help="comma list of field elements for phi")
        p.add_argument("--eps", default="1,1", help="phi twist pair, e.g. 1,g")

    def add_output_flags(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    g = sub.add_parser("generate", help="list partial quotients and convergent degrees")
    add_family_flags(g)
    g.add_argument("--letters", type=int, default=20)
    add_output_flags(g)

    v = sub.add_parser("verify", help="check the defining equation residual")
    add_family_flags(v)
    v.add_argument("--precision", type=int, default=1500)
    v.add_argument("--sabotage", action="store_true",
                   help="negative control: perturb one equation coefficient")
    add_output_flags(v)

    e = sub.add_parser("exponents", help="exact exponent records and verdict")
    add_family_flags(e)
    e.add_argument("--n-min", type=int, default=None)
    e.add_argument("--n-max", type=int, default=None)
    add_output_flags(e)

    q = sub.add_parser("neq", help="witness with distinct n-th exponents")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--q", type=int, required=True)
    q.add_argument("--t", type=int, required=True)
    add_output_flags(q)

    return parser


def _emit(payload, rows, fmt: str, out_path) -> None:
    if fmt == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            for row in rows:
                writer.writerow(row)
        text = buf.getvalue()
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


_COMMANDS = {
    "generate": cmd_generate,
    "verify": cmd_verify,
    "exponents": cmd_exponents,
    "neq": cmd_neq,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload, rows = _COMMANDS[args.command](args)
    except (ValueError, HypothesisViolatedError, PrecisionExhaustedError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except HypercfError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    _emit(payload, rows, args.format, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
