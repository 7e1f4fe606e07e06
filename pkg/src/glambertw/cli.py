"""Command-line interface: solve, terms, verify, radius, compare, sweep.

Reports go to stdout (JSON, CSV, or text), diagnostics to stderr.  Exit
codes: 0 success, 1 solver or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional

from . import identities, numeric, solvers
from .engine import PoleAtBaseError
from .solvers import DegenerateParamsError, SolveOptions


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glambertw",
        description="Series solvers for generalized Lambert W equations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_branch=True):
        p.add_argument("--family", required=True, choices=solvers.FAMILIES)
        p.add_argument("--a", type=float, default=None)
        p.add_argument("--b", type=float, default=None)
        p.add_argument("--l", type=float, default=None)
        p.add_argument("--s", type=float, default=None)
        p.add_argument("--t", type=float, default=None)
        p.add_argument("--terms", type=int, default=40, help="maximum series terms")
        p.add_argument("--tol", type=float, default=1e-12, help="early-stop tolerance")
        p.add_argument("--accel", action="store_true", help="epsilon-accelerate the partial sums")
        if with_branch:
            p.add_argument("--branch", choices=("auto", "baseA", "baseB"), default="auto")
        p.add_argument(
            "--paperAsPrinted",
            dest="paper_as_printed",
            action="store_true",
            help="evaluate the uncorrected printed series form (errata witness)",
        )

    p_solve = sub.add_parser("solve", help="solve one equation instance")
    add_common(p_solve)
    p_solve.add_argument("--format", choices=("json", "text"), default="json")

    p_terms = sub.add_parser("terms", help="per-term table of the series")
    add_common(p_terms)
    p_terms.add_argument("--format", choices=("json", "csv", "text"), default="csv")

    p_verify = sub.add_parser("verify", help="run the exact identity suite")
    p_verify.add_argument("--suite", choices=("identities",), default="identities")
    p_verify.add_argument("--max-n", type=int, default=10)
    p_verify.add_argument("--format", choices=("json", "text"), default="json")

    p_radius = sub.add_parser("radius", help="empirical convergence-radius estimate")
    add_common(p_radius, with_branch=False)
    p_radius.add_argument("--method", choices=("ratio", "dombSykes"), default="ratio")
    p_radius.add_argument("--format", choices=("json", "text"), default="json")

    p_cmp = sub.add_parser("compare", help="series root vs. the Newton oracle")
    add_common(p_cmp)
    p_cmp.add_argument("--format", choices=("json", "text"), default="json")

    p_sweep = sub.add_parser("sweep", help="JSON-lines solve reports over an l grid")
    add_common(p_sweep)
    p_sweep.add_argument("--l-min", type=float, required=True)
    p_sweep.add_argument("--l-max", type=float, required=True)
    p_sweep.add_argument("--steps", type=int, default=10)
    return parser


def _collect_params(args, optional: tuple = ()) -> dict:
    keys = solvers.param_keys(args.family)
    params = {}
    missing = []
    for k in keys:
        v = getattr(args, k, None)
        if v is None:
            if k not in optional:
                missing.append(f"--{k}")
        else:
            params[k] = v
    if missing:
        raise UsageError(
            f"family {args.family!r} requires {', '.join(missing)} "
            f"(expects {', '.join('--' + k for k in keys)})"
        )
    extra = [
        f"--{k}"
        for k in ("a", "b", "l", "s", "t")
        if k not in keys and getattr(args, k, None) is not None
    ]
    if extra:
        raise UsageError(f"family {args.family!r} does not take {', '.join(extra)}")
    return params


class UsageError(Exception):
    pass


def _options(args) -> SolveOptions:
    return SolveOptions(
        max_terms=args.terms,
        tol=args.tol,
        accelerate=args.accel,
        branch=getattr(args, "branch", "auto"),
    )


def _emit_json(record: dict) -> None:
    sys.stdout.write(json.dumps(record) + "\n")


def _emit_text(record: dict, indent: str = "") -> None:
    for key, value in record.items():
        if isinstance(value, dict):
            sys.stdout.write(f"{indent}{key}:\n")
            _emit_text(value, indent + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            sys.stdout.write(f"{indent}{key}: [{len(value)} entries]\n")
        else:
            sys.stdout.write(f"{indent}{key}: {value!r}\n")


def _cmd_solve(args) -> int:
    params = _collect_params(args)
    report = solvers.solve_family(
        args.family, params, _options(args), paper_as_printed=args.paper_as_printed
    )
    record = report.to_dict()
    if args.format == "json":
        _emit_json(record)
    else:
        _emit_text(record)
    if not report.converged:
        print("solver did not converge", file=sys.stderr)
        return 1
    return 0


def _cmd_terms(args) -> int:
    params = _collect_params(args)
    term = solvers.term_function(args.family, params, args.paper_as_printed)
    base = solvers.series_base(args.family, params, args.paper_as_printed)
    resid_f, _ = solvers.residual_functions(args.family, params)
    rows = []
    partial = base
    for n in range(1, args.terms + 1):
        t = term(n)
        if not math.isfinite(t):
            break
        partial += t
        rows.append(
            {
                "n": n,
                "term": t,
                "partial_sum": partial,
                "abs_residual": abs(resid_f(partial)),
            }
        )
    if args.format == "csv":
        sys.stdout.write("n,term,partial_sum,abs_residual\n")
        for r in rows:
            sys.stdout.write(
                f"{r['n']},{r['term']!r},{r['partial_sum']!r},{r['abs_residual']!r}\n"
            )
    elif args.format == "json":
        _emit_json({"family": args.family, "params": params, "rows": rows})
    else:
        for r in rows:
            sys.stdout.write(
                f"n={r['n']:3d}  term={r['term']: .17e}  "
                f"sum={r['partial_sum']: .17e}  |residual|={r['abs_residual']:.3e}\n"
            )
    return 0


def _cmd_verify(args) -> int:
    result = identities.identity_suite(max_n=args.max_n)
    if args.format == "json":
        _emit_json(result)
    else:
        for c in result["checks"]:
            mark = "ok" if c["passed"] else "FAIL"
            sys.stdout.write(f"{mark:4s} {c['check']} n={c['n']}\n")
        sys.stdout.write(f"errata entries: {len(result['errata'])}\n")
        sys.stdout.write(f"all passed: {result['allPassed']}\n")
    if not result["allPassed"]:
        print("identity suite failed", file=sys.stderr)
        return 1
    return 0


def _cmd_radius(args) -> int:
    params = _collect_params(args, optional=("l",))
    params.setdefault("l", 1.0)
    coeffs = solvers.family_coefficients(args.family, params, max(args.terms, 20))
    estimate = numeric.radius_estimate(coeffs, method=args.method)
    record = {"family": args.family, "params": params}
    record.update(estimate.to_dict())
    if args.format == "json":
        _emit_json(record)
    else:
        _emit_text(record)
    return 0


def _cmd_compare(args) -> int:
    params = _collect_params(args)
    record = numeric.compare_report(
        args.family, params, _options(args), paper_as_printed=args.paper_as_printed
    )
    if args.format == "json":
        _emit_json(record)
    else:
        _emit_text(record)
    return 0


def _cmd_sweep(args) -> int:
    params = _collect_params(args, optional=("l",))
    if args.steps < 1:
        raise UsageError("--steps must be >= 1")
    opts = _options(args)
    failures = 0
    for i in range(args.steps):
        frac = i / (args.steps - 1) if args.steps > 1 else 0.0
        l = args.l_min + (args.l_max - args.l_min) * frac
        p = dict(params)
        p["l"] = l
        report = solvers.solve_family(
            args.family, p, opts, paper_as_printed=args.paper_as_printed
        )
        _emit_json(report.to_dict())
        if not report.converged:
            failures += 1
    if failures:
        print(f"{failures} grid point(s) did not converge", file=sys.stderr)
        return 1
    return 0


_COMMANDS = {
    "solve": _cmd_solve,
    "terms": _cmd_terms,
    "verify": _cmd_verify,
    "radius": _cmd_radius,
    "compare": _cmd_compare,
    "sweep": _cmd_sweep,
}


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (DegenerateParamsError, PoleAtBaseError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except numeric.NoRootError as exc:
        print(f"oracle failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
