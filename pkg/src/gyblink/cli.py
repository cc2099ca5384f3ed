"""Command-line interface.

Three commands: ``compute`` evaluates an invariant of one closed braid,
``verify`` checks an operator (and, for catalog entries, its enhancement
evidence), ``suite`` sweeps the algebraic relations over seeded random
braids. Exit codes: 0 success, 1 verification failure, 2 usage or parse
error, 3 resource cap.

JSON output is schema-versioned and canonical (sorted keys, no spaces),
so identical inputs with identical seeds produce byte-identical bytes.
The default tolerance is read from ``GYBLINK_TOLERANCE`` when set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .braids import LINKS, closure_components, format_braid, load_catalog_file, resolve_braid
from .enhancement import (
    CATALOG_WEIGHTS,
    catalog_enhancement,
    enhancement_report,
    make_enhancement,
)
from .errors import GybError, ResourceCapError
from .invariant import (
    cross_operator_check,
    markov_check,
    multiplicative_invariant,
    multiplicativity_check,
    normalized_invariant,
    quartic_check_type2,
    skein_check,
    trace_invariant,
)
from .operators import (
    CATALOG_IDS,
    build_operator,
    check_outer_diagonal,
    parse_scalar,
    unitarity_residual,
    verify_far_commutativity,
    verify_gybe,
)

SCHEMA_VERSION = 1

_SQ2 = np.sqrt(2.0)


def _default_tolerance() -> float:
    return float(os.environ.get("GYBLINK_TOLERANCE", "1e-9"))


def _dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _fmt_value(z: complex) -> str:
    return f"{z.real:.10g}{z.imag:+.10g}i"


def _takes_theta(name: str) -> bool:
    return name in ("type1", "type2", "type3")


def _resolve_theta(args) -> float:
    if args.theta is not None and not _takes_theta(args.operator):
        print(f"warning: theta is ignored for operator {args.operator}", file=sys.stderr)
    return args.theta if args.theta is not None else 0.0


def _enhancement_for(args):
    name = args.operator
    theta = _resolve_theta(args)
    if name in CATALOG_WEIGHTS:
        return catalog_enhancement(name, theta)
    if name.startswith("custom:"):
        if args.alpha is None or args.beta is None:
            raise GybError("custom operators need explicit --alpha and --beta weights")
        op = build_operator(name)
        return make_enhancement(op, None, parse_scalar(args.alpha), parse_scalar(args.beta))
    raise GybError(f"unknown operator {name!r}; expected one of {CATALOG_IDS} or custom:<path>")


def cmd_compute(args) -> int:
    s = _enhancement_for(args)
    catalog = dict(LINKS)
    if args.catalog_file:
        catalog.update(load_catalog_file(args.catalog_file))
    b = resolve_braid(args.braid, args.strands, catalog)
    if args.normalization == "raw":
        result = trace_invariant(s, b, args.allow_large)
    elif args.normalization == "P":
        result = normalized_invariant(s, b, args.allow_large)
    else:
        result = multiplicative_invariant(s, b, args.allow_large)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "operator": result.operator_id,
        "theta": result.theta,
        "braid": format_braid(b),
        "strands": b.strands,
        "writhe": result.writhe,
        "components": closure_components(b),
        "value": {"re": result.value.real, "im": result.value.imag},
        "normalization": result.normalization,
    }
    if args.output == "json":
        print(_dumps(payload))
    else:
        theta_text = "-" if result.theta is None else f"{result.theta:.10g}"
        print(f"operator: {result.operator_id}  theta: {theta_text}")
        print(
            f"braid: {format_braid(b) or '(identity)'}  strands: {b.strands}"
            f"  writhe: {result.writhe}  components: {payload['components']}"
        )
        print(f"value ({result.normalization}): {_fmt_value(result.value)}")
    return 0


def cmd_verify(args) -> int:
    tol = args.tolerance
    theta = _resolve_theta(args)
    op = build_operator(args.operator, theta)
    g = op.gtype
    checks = {
        "unitarity": unitarity_residual(op),
        "braid_relation": verify_gybe(op),
        "far_commutation": verify_far_commutativity(op),
    }
    outer = check_outer_diagonal(op, tol) if (g.k, g.m) == (3, 1) else None
    report = None
    if op.op_id in CATALOG_WEIGHTS:
        alpha, beta = CATALOG_WEIGHTS[op.op_id]
        s = make_enhancement(op, None, alpha, beta)
        report = enhancement_report(s, tol, seed=args.seed)
    ok = checks["braid_relation"] <= tol and checks["far_commutation"] <= tol
    if report is not None:
        ok = ok and checks["unitarity"] <= tol and report.verdict != "failed"
    payload = {
        "schema_version": SCHEMA_VERSION,
        "operator": op.op_id,
        "theta": op.theta,
        "gtype": [g.d, g.k, g.m],
        "residuals": checks,
        "outer_diagonal": outer,
        "tolerance": tol,
        "pass": ok,
    }
    if report is not None:
        payload["enhancement"] = {
            "commutation_residual": report.condition_i_residual,
            "defect_plus_norm": report.defect_plus_norm,
            "defect_minus_norm": report.defect_minus_norm,
            "defects_offdiagonal": report.offdiagonal_ok,
            "sampled_trace_max": report.sampled_perp_max,
            "verdict": report.verdict,
        }
    if args.output == "json":
        print(_dumps(payload))
    else:
        theta_text = "-" if op.theta is None else f"{op.theta:.10g}"
        print(f"operator: {op.op_id}  theta: {theta_text}  type: ({g.d},{g.k},{g.m})")
        for key, value in checks.items():
            print(f"{key} residual: {value:.3e}")
        if outer is not None:
            print(f"outer diagonal: {'yes' if outer else 'no'}")
        if report is not None:
            print(f"defect norms: {report.defect_plus_norm:.3e} / {report.defect_minus_norm:.3e}")
            print(f"defects off-diagonal on last factor: {'yes' if report.offdiagonal_ok else 'no'}")
            print(f"sampled trace max: {report.sampled_perp_max:.3e}")
            print(f"verdict: {report.verdict}")
        print(f"{'PASS' if ok else 'FAIL'} (tolerance {tol:g})")
    return 0 if ok else 1


def _suite_rows(names, trials: int, seed: int, tol: float):
    rng = np.random.default_rng(seed)
    rows = []
    for name in names:
        theta = 0.4 if _takes_theta(name) else 0.0
        s = catalog_enhancement(name, theta)
        worst = 0.0
        for _ in range(trials):
            b = _random_word(rng, 2, 4, 8)
            worst = max(worst, markov_check(s, b, trials=2, seed=int(rng.integers(1 << 31))))
        rows.append((name, "markov", worst))
        if name in ("type1", "type3", "r232"):
            x, y = (1.0, 1.0) if name == "type1" else (1.0, _SQ2)
            worst = max(skein_check(s, _random_word(rng, 2, 4, 8), x, y) for _ in range(trials))
            rows.append((name, "skein", worst))
        if name == "type2":
            worst = max(quartic_check_type2(s, _random_word(rng, 2, 4, 8)) for _ in range(trials))
            rows.append((name, "quartic", worst))
        worst = max(
            multiplicativity_check(s, _random_word(rng, 1, 3, 6), _random_word(rng, 1, 3, 6))
            for _ in range(trials)
        )
        rows.append((name, "multiplicativity", worst))
    if "type3" in names and "r232" in names:
        s3 = catalog_enhancement("type3", 0.4)
        s232 = catalog_enhancement("r232")
        worst = max(
            cross_operator_check(_random_word(rng, 2, 4, 8), s3=s3, s232=s232) for _ in range(trials)
        )
        rows.append(("type3/r232", "cross_operator", worst))
    return rows


def _random_word(rng, n_lo: int, n_hi: int, max_len: int):
    from .braids import random_braid

    n = int(rng.integers(n_lo, n_hi + 1))
    return random_braid(n, int(rng.integers(1, max_len + 1)), rng)


def cmd_suite(args) -> int:
    names = [args.operator] if args.operator else list(CATALOG_IDS)
    for name in names:
        if name not in CATALOG_IDS:
            raise GybError(f"suite runs on catalog operators only, got {name!r}")
    rows = _suite_rows(names, args.trials, args.seed, args.tolerance)
    ok = all(residual <= args.tolerance for _, _, residual in rows)
    if args.output == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "trials": args.trials,
            "seed": args.seed,
            "tolerance": args.tolerance,
            "relations": [
                {"operator": op, "relation": rel, "residual": res} for op, rel, res in rows
            ],
            "pass": ok,
        }
        print(_dumps(payload))
    else:
        for op, rel, res in rows:
            print(f"{op:12s} {rel:18s} max residual {res:.3e}")
        print(f"{'PASS' if ok else 'FAIL'} (tolerance {args.tolerance:g})")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gyblink",
        description="Link invariants from enhanced generalized Yang-Baxter operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, operator_required: bool):
        p.add_argument(
            "--operator",
            required=operator_required,
            help="catalog id (type1, type2, type3, r232) or custom:<path>",
        )
        p.add_argument("--theta", type=float, default=None, help="family parameter, default 0")
        p.add_argument(
            "--tolerance",
            type=float,
            default=_default_tolerance(),
            help="absolute tolerance (default from GYBLINK_TOLERANCE or 1e-9)",
        )
        p.add_argument("--output", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--allow-large", action="store_true", help="lift the representation size cap")

    p = sub.add_parser("compute", help="evaluate an invariant of one closed braid")
    common(p, True)
    p.add_argument("--braid", required=True, help="braid word text or a catalog link name")
    p.add_argument("--strands", type=int, default=None)
    p.add_argument("--normalization", choices=("raw", "P", "tilde"), default="raw")
    p.add_argument("--catalog-file", default=None, help="extra links, one name<TAB>strands<TAB>word per line")
    p.add_argument("--alpha", default=None, help="writhe weight for custom operators, e.g. '0.707+0.707i'")
    p.add_argument("--beta", default=None, help="strand weight for custom operators")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check operator identities and enhancement evidence")
    common(p, True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("suite", help="sweep the invariant relations over random braids")
    common(p, False)
    p.add_argument("--trials", type=int, default=25, help="random braids per relation")
    p.set_defaults(func=cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except GybError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
