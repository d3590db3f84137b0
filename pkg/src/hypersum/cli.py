"""Command-line entry point: ``hypersum {eval,integrate,verify,list}``."""

from __future__ import annotations

import argparse
import sys

from .errors import HypersumError
from .hyperseries import DEFAULT_MAX_TERMS, DEFAULT_TOL, HypergeometricSpec, eval_series
from .quad import FAMILIES, IntegralSpec, integrate


def _parse_params(text: str) -> list:
    """Comma-separated reals; complex entries such as ``1.5+0.3j`` become a
    conjugate pair (the partner is implied)."""
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "j" in item:
            out.append(complex(item.replace(" ", "")))
        else:
            out.append(float(item))
    return out


def _cmd_eval(args) -> int:
    spec = HypergeometricSpec(_parse_params(args.num), _parse_params(args.den), args.z)
    res = eval_series(spec, tol=args.tol, max_terms=args.max_terms)
    print(f"spec         {spec}")
    print(f"value        {res.value:.17g}")
    print(f"terms        {res.terms_used}")
    print(f"error        {res.error_estimate:.3e}")
    print(f"convergence  {res.convergence.tag.value}")
    print(f"accelerated  {str(res.accelerated).lower()}")
    return 0


def _cmd_integrate(args) -> int:
    spec = IntegralSpec(args.family, args.a, args.b, args.c, args.v)
    res = integrate(spec, tol=args.tol)
    print(f"value        {res.value:.17g}")
    print(f"error        {res.abs_error_estimate:.3e}")
    print(f"evaluations  {res.evaluations}")
    print(f"truncation   {res.truncation_point:.6g}")
    return 0


def _cmd_verify(args) -> int:
    from .harness import RunConfig, run, to_json, write_csv, write_json

    config = RunConfig(
        seed=args.seed,
        samples_per_identity=args.samples,
        series_tol=args.series_tol,
        quad_tol=args.quad_tol,
        identity_filter=args.identity,
    )
    result = run(config)
    if args.out:
        write_json(result, args.out)
    if args.csv:
        write_csv(result, args.csv)
    for iid, s in result.summary["per_identity"].items():
        flag = "PASS" if s["passed"] else "FAIL"
        rel = s["max_rel_residual"]
        rel_text = "n/a" if rel is None else f"{rel:.2e}"
        extra = ""
        if s.get("conditional_excluded"):
            extra += f"  conditional-excluded={s['conditional_excluded']}"
        if s.get("conjugate_pair_points"):
            extra += f"  conjugate-pair={s['conjugate_pair_points']}"
        print(f"{flag}  {iid:40s} n={s['points']:3d}  max_rel={rel_text}{extra}")
    if not args.out and not args.csv and args.json:
        sys.stdout.write(to_json(result))
    print(f"{len(result.summary['failed_identities'])} failing identities out of {result.summary['identities']}")
    return 0 if result.ok else 1


def _cmd_list(args) -> int:
    from .identities import registry

    for ident in registry():
        print(f"{ident.id:40s} {ident.provenance}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypersum", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="sum a generalized hypergeometric series")
    ev_sub = ev.add_subparsers(dest="what", required=True)
    p = ev_sub.add_parser("pfq", help="pFq(num; den; z)")
    p.add_argument("--num", required=True, help="comma-separated upper parameters")
    p.add_argument("--den", default="", help="comma-separated lower parameters")
    p.add_argument("--z", required=True, type=float)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-terms", type=int, default=DEFAULT_MAX_TERMS)
    p.set_defaults(func=_cmd_eval)

    it = sub.add_parser("integrate", help="integrate a hyperbolic quotient over [0, inf)")
    it.add_argument("--family", required=True, choices=FAMILIES)
    it.add_argument("--a", type=float, required=True)
    it.add_argument("--b", type=float, default=0.0)
    it.add_argument("--c", type=float, default=1.0)
    it.add_argument("--v", type=float, default=1.0)
    it.add_argument("--tol", type=float, default=1e-10)
    it.set_defaults(func=_cmd_integrate)

    ve = sub.add_parser("verify", help="check registered identities on seeded samples")
    ve.add_argument("--identity", default=None, help="glob over identity ids, e.g. 'thm*'")
    ve.add_argument("--samples", type=int, default=None, help="points per identity (default: per-id config)")
    ve.add_argument("--seed", type=int, default=42)
    ve.add_argument("--series-tol", type=float, default=1e-12)
    ve.add_argument("--quad-tol", type=float, default=1e-10)
    ve.add_argument("--out", default=None, help="write the JSON report here")
    ve.add_argument("--csv", default=None, help="write one record per row here")
    ve.add_argument("--json", action="store_true", help="print the JSON report to stdout")
    ve.set_defaults(func=_cmd_verify)

    ls = sub.add_parser("list", help="print identity ids and provenance")
    ls.set_defaults(func=_cmd_list)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HypersumError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
