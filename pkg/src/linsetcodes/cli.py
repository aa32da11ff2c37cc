"""Command-line front end: analyze / equiv / class / sweep.

JSON is the canonical output (sorted keys, fixed indentation, so equal
configs produce byte-identical reports); the pretty format renders the
same structure.  Exit codes: 0 all enabled comparisons match, 1 a
comparison mismatched (a finding, not a crash), 2 usage error, 3 a size
or budget guard was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .algebra import QPolynomial, build_field, graph_field_of_linearity
from .codes import code_report, generator_matrix, system_from_pointset
from .equivalence import gamma_l_class, gamma_l_equivalent
from .errors import BudgetExceeded, LinsetError, TooLarge
from .families import make_family
from .linsets import build_linear_set, profile_json
from .pointsets import build_pointset

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

WORKERS_ENV = "LINSETCODES_WORKERS"


def _apply_workers(workers):
    if workers is None:
        workers = os.environ.get(WORKERS_ENV)
    if not workers:
        return
    try:
        import numba
        numba.set_num_threads(max(1, min(int(workers),
                                         numba.config.NUMBA_NUM_THREADS)))
    except Exception:
        pass  # worker count is advisory; kernels run regardless


def _parse_coeff_list(text):
    return tuple(int(t) for t in text.split(","))


def _build_context(args):
    base = _parse_coeff_list(args.base_poly) if args.base_poly else None
    ext = _parse_coeff_list(args.ext_poly) if args.ext_poly else None
    return build_field(args.p, args.h, args.n, base, ext)


_FAMILY_PARAM_NAMES = ("s", "delta", "ell", "r", "t", "a", "omega", "lam",
                       "xi", "mu", "eps")


def _resolve_polynomial(ctx, args):
    """(QPolynomial, family-provenance-or-None) from --coeffs or --family."""
    if bool(args.coeffs) == bool(args.family):
        raise UsageError("exactly one of --coeffs or --family is required")
    if args.coeffs:
        return QPolynomial.parse(args.coeffs, ctx), None
    params = {}
    for name in _FAMILY_PARAM_NAMES:
        val = getattr(args, name, None)
        if val is not None:
            params[name] = val
    if getattr(args, "inner", None):
        params["inner"] = _parse_coeff_list(args.inner)
    if getattr(args, "ubasis", None):
        params["ubasis"] = _parse_coeff_list(args.ubasis)
    result = make_family(ctx, args.family, **params)
    return result.poly, {"id": result.family, "params": result.params}


class UsageError(Exception):
    pass


def _provenance(ctx, poly, family):
    return {
        "tool": {"name": "linsetcodes", "version": __version__},
        "field": ctx.serialize(),
        "polynomial": poly.serialize(),
        "family": family,
    }


def _collect_matches(report):
    out = []
    for key in ("predicted_match", "closed_form_match", "brute_force_match"):
        val = report.get(key)
        if val is not None:
            out.append(val)
    return out


def cmd_analyze(args):
    _apply_workers(args.workers)
    ctx = _build_context(args)
    poly, family = _resolve_polynomial(ctx, args)
    kinds = ["b", "c"] if args.kind == "both" else [args.kind]
    check_closed = args.verify in ("all", "closed")
    check_brute = args.verify in ("all", "brute")
    profile = build_linear_set(poly)
    report = _provenance(ctx, poly, family)
    report["profile"] = profile_json(profile)
    report["field_of_linearity"] = graph_field_of_linearity(poly)
    report["codes"] = {}
    matches = []
    for kind in kinds:
        sub = code_report(poly, kind, check_brute=check_brute,
                          check_closed=check_closed)
        report["codes"][sub["kind"]] = sub
        matches.extend(_collect_matches(sub))
    report["all_match"] = all(matches) if matches else True
    if args.export_matrix:
        S = build_pointset(poly, kinds[0])
        G = generator_matrix(system_from_pointset(S), ctx)
        with open(args.export_matrix, "w") as fh:
            fh.write(G.csv() + "\n")
    _emit(report, args)
    return EXIT_OK if report["all_match"] else EXIT_MISMATCH


def cmd_equiv(args):
    _apply_workers(args.workers)
    ctx = _build_context(args)
    fa = QPolynomial.parse(args.coeffs_a, ctx)
    fb = QPolynomial.parse(args.coeffs_b, ctx)
    rep = gamma_l_equivalent(fa, fb, linear_only=args.linear_only)
    out = _provenance(ctx, fa, None)
    out["polynomial_b"] = fb.serialize()
    out["report"] = rep.to_json()
    _emit(out, args)
    if rep.verdict == "inconclusive-budget":
        return EXIT_GUARD
    return EXIT_OK


def cmd_class(args):
    _apply_workers(args.workers)
    ctx = _build_context(args)
    poly = QPolynomial.parse(args.coeffs, ctx)
    candidates = None
    if args.monomial_candidates:
        from .algebra import qpoly_monomial
        candidates = [qpoly_monomial(ctx, i) for i in range(1, ctx.n)]
    rep = gamma_l_class(poly, candidates=candidates)
    out = _provenance(ctx, poly, None)
    out["report"] = rep.to_json()
    _emit(out, args)
    return EXIT_OK


def cmd_sweep(args):
    _apply_workers(args.workers)
    with open(args.grid) as fh:
        grid = json.load(fh)
    runs = grid.get("runs", [])
    if not isinstance(runs, list) or not runs:
        raise UsageError("grid file must contain a non-empty 'runs' list")
    results = []
    passed = failed = 0
    for entry in runs:
        ctx = build_field(entry["p"], entry["h"], entry["n"],
                          entry.get("base_poly"), entry.get("ext_poly"))
        if "coeffs" in entry:
            poly, family = QPolynomial.parse(entry["coeffs"], ctx), None
        else:
            res = make_family(ctx, entry["family"], **entry.get("params", {}))
            poly, family = res.poly, {"id": res.family, "params": res.params}
        kinds = ["b", "c"] if entry.get("kind", "both") == "both" else [entry["kind"]]
        row = _provenance(ctx, poly, family)
        row["codes"] = {}
        matches = []
        for kind in kinds:
            sub = code_report(poly, kind)
            row["codes"][sub["kind"]] = sub
            matches.extend(_collect_matches(sub))
        row["all_match"] = all(matches) if matches else True
        passed += row["all_match"]
        failed += not row["all_match"]
        results.append(row)
    summary = {
        "tool": {"name": "linsetcodes", "version": __version__},
        "runs": results,
        "summary": {"total": len(results), "passed": passed, "failed": failed},
    }
    _emit(summary, args, csv_rows=_sweep_csv_rows(results))
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


def _sweep_csv_rows(results):
    rows = ["p,h,n,polynomial,family,kind,N,d,nonzero_weights,all_match"]
    for row in results:
        fld = row["field"]
        fam = row["family"]["id"] if row["family"] else ""
        for kind, sub in sorted(row["codes"].items()):
            rows.append(",".join(str(v) for v in (
                fld["p"], fld["h"], fld["n"], '"' + row["polynomial"] + '"',
                fam, kind, sub["params"][0], sub["params"][2],
                sub["nonzero_weights"], row["all_match"])))
    return rows


def _emit(report, args, csv_rows=None):
    fmt = args.format
    if fmt == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    elif fmt == "csv":
        if csv_rows is None:
            raise UsageError("csv format is only available for sweep")
        text = "\n".join(csv_rows) + "\n"
    else:
        text = _render_pretty(report) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_pretty(report, indent=0):
    lines = []
    pad = "  " * indent
    for key in sorted(report):
        val = report[key]
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_render_pretty(val, indent + 1))
        elif isinstance(val, list):
            lines.append(f"{pad}{key}: {val}")
        else:
            lines.append(f"{pad}{key}: {val}")
    return "\n".join(lines)


def _add_field_args(sp):
    sp.add_argument("--p", type=int, required=True, help="prime characteristic")
    sp.add_argument("--h", type=int, required=True, help="degree of GF(q) over GF(p)")
    sp.add_argument("--n", type=int, required=True, help="degree of GF(q^n) over GF(q)")
    sp.add_argument("--base-poly", help="override: base irreducible, comma coeffs low-first")
    sp.add_argument("--ext-poly", help="override: extension irreducible, comma coeffs")
    sp.add_argument("--format", choices=("pretty", "json", "csv"), default="json")
    sp.add_argument("--output", help="write the report to this path instead of stdout")
    sp.add_argument("--workers", type=int, default=None,
                    help=f"worker threads for the kernels (or {WORKERS_ENV})")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="linsetcodes",
        description="exact analysis of direction-set pointsets and their codes")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="full pipeline for one polynomial")
    _add_field_args(an)
    an.add_argument("--coeffs", help="q-polynomial coefficients a0,a1,...")
    an.add_argument("--family", help="family id such as table1.i")
    for name in _FAMILY_PARAM_NAMES:
        an.add_argument(f"--{name}", type=int, default=None)
    an.add_argument("--inner", help="inner polynomial coefficients for table2/3 rows")
    an.add_argument("--ubasis", help="subfield basis elements for table3.ii")
    an.add_argument("--kind", choices=("b", "c", "both"), default="both")
    an.add_argument("--verify", choices=("all", "none", "brute", "closed"),
                    default="all")
    an.add_argument("--export-matrix", help="write the generator matrix CSV here")
    an.set_defaults(func=cmd_analyze)

    eq = sub.add_parser("equiv", help="semilinear equivalence of two polynomials")
    _add_field_args(eq)
    eq.add_argument("--coeffs-a", required=True)
    eq.add_argument("--coeffs-b", required=True)
    eq.add_argument("--linear-only", action="store_true",
                    help="restrict to GL (no Frobenius twist)")
    eq.set_defaults(func=cmd_equiv)

    cl = sub.add_parser("class", help="orbit class of the direction set")
    _add_field_args(cl)
    cl.add_argument("--coeffs", required=True)
    cl.add_argument("--monomial-candidates", action="store_true",
                    help="restrict candidates to x^(q^i) when the guard bars full enumeration")
    cl.set_defaults(func=cmd_class)

    sw = sub.add_parser("sweep", help="batch of analyze runs from a JSON grid")
    sw.add_argument("--grid", required=True, help="JSON file with a 'runs' list")
    sw.add_argument("--format", choices=("pretty", "json", "csv"), default="json")
    sw.add_argument("--output")
    sw.add_argument("--workers", type=int, default=None)
    sw.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (TooLarge, BudgetExceeded) as exc:
        sys.stderr.write(f"guard exceeded: {exc}\n")
        return EXIT_GUARD
    except (UsageError, LinsetError, OSError, ValueError,
            json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc.__class__.__name__}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
