"""Command-line front end.

Every subcommand prints one JSON document to stdout and short progress
lines to stderr (silenced by --json). Exit code 0 means every check
passed, 1 means a check failed (or, under --strict, a printed-formula
prediction disagreed with measurement), 2 means a usage error or a size
bound violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from .exact_linalg import RatMatrix, format_rational
from .scheme import (
    DEFAULT_MAX_POINTS,
    SchemeParams,
    SizeBound,
    enumerate_shapes,
    intersection_numbers,
    intersection_table_json,
    relation_matrix,
    verify_axioms,
)
from .spectral import (
    adjacency_n,
    eigen_n,
    krawchouk_table,
    valency_n,
    verify_base_duality,
    verify_spectral_n,
)
from .terwilliger import (
    lambda_set,
    omega_set,
    structure_report,
    terwilliger_closure,
    theta_enumerate,
    theta_feasible,
    verify_terw_identities,
)

SUITE_INSTANCES: tuple[tuple[tuple[int, ...], int], ...] = (
    ((2,), 1),
    ((3,), 1),
    ((2,), 2),
    ((2,), 3),
    ((2, 2), 1),
    ((2, 3), 1),
    ((2, 2), 2),
    ((2, 2, 2), 1),
)


def _parse_csv_ints(text: str, what: str, parser: argparse.ArgumentParser) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        parser.error(f"{what} must be a comma-separated list of integers")
    if not values:
        parser.error(f"{what} must not be empty")
    return values


def _params_from_args(args, parser: argparse.ArgumentParser) -> SchemeParams:
    q = _parse_csv_ints(args.q, "--q", parser)
    if any(x < 2 for x in q):
        parser.error("--q entries must be integers at least 2")
    if args.n < 1:
        parser.error("--n must be at least 1")
    return SchemeParams(q, args.n)


def _parse_shape(text: str, length: int, total: int, parser: argparse.ArgumentParser, what: str):
    values = _parse_csv_ints(text, what, parser)
    if len(values) != length or any(v < 0 for v in values) or sum(values) != total:
        parser.error(
            f"{what} must be {length} non-negative integers summing to {total}"
        )
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordered-hamming",
        description="Exact constructions and verifications for ordered Hamming schemes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, need_params=True):
        if need_params:
            p.add_argument("--q", required=True, help="comma-separated alphabet sizes, each >= 2")
            p.add_argument("--n", required=True, type=int, help="word length, >= 1")
        p.add_argument(
            "--max-points",
            type=int,
            default=DEFAULT_MAX_POINTS,
            help="largest allowed |X^n| for matrix-producing work (default 256)",
        )
        p.add_argument("--json", action="store_true", help="suppress stderr logging")

    add_common(sub.add_parser("shapes", help="list all relation shapes"))
    add_common(sub.add_parser("scheme-verify", help="check the association scheme axioms"))

    p = sub.add_parser("adjacency", help="one lifted adjacency matrix, cross-checked")
    add_common(p)
    p.add_argument("--shape", required=True, help="comma-separated shape entries")

    p = sub.add_parser("eigenmatrix", help="first or second eigenmatrix at depth n")
    add_common(p)
    p.add_argument("--which", choices=("P", "Q"), default="P")

    p = sub.add_parser("krawchouk", help="Krawtchouk coefficient table")
    add_common(p)
    p.add_argument("--reversed", action="store_true", help="use the reversed alphabet sequence")

    p = sub.add_parser("theta", help="enumerate support grids for one margin pair")
    add_common(p)
    p.add_argument("--lambda", dest="lam", required=True, help="row-sum shape (m entries)")
    p.add_argument("--mu", required=True, help="column-sum shape (m entries)")

    add_common(sub.add_parser("omega", help="all feasible margin pairs"))
    add_common(sub.add_parser("identities", help="run the structural identity suite"))

    p = sub.add_parser("closure", help="dimension of the generated matrix algebra")
    add_common(p)
    p.add_argument("--generators", choices=("bm", "idem"), default="bm")

    p = sub.add_parser("report", help="full structure report with measured dimensions")
    add_common(p)
    p.add_argument("--strict", action="store_true", help="fail when a printed formula disagrees")

    p = sub.add_parser("suite", help="run the built-in instance suite")
    add_common(p, need_params=False)
    p.add_argument("--strict", action="store_true", help="fail when a printed formula disagrees")
    return parser


def _log(args, message: str) -> None:
    if not getattr(args, "json", False):
        print(message, file=sys.stderr)


def _emit(payload: dict) -> None:
    print(json.dumps(payload, separators=(",", ":")))


def _overall(checks: dict) -> bool:
    return all(v for v in checks.values() if v is not None)


def _run_report(command: str, params: SchemeParams | None, checks: dict, data: dict) -> dict:
    payload = {"command": command}
    if params is not None:
        payload["params"] = {"q": list(params.q), "n": params.n}
    payload["checks"] = checks
    payload["overall_pass"] = _overall(checks)
    payload["data"] = data
    return payload


def _cmd_shapes(args, parser) -> dict:
    params = _params_from_args(args, parser)
    shapes = enumerate_shapes(params)
    return _run_report("shapes", params, {}, {"shapes": [list(s) for s in shapes]})


def _cmd_scheme_verify(args, parser) -> dict:
    params = _params_from_args(args, parser)
    report = verify_axioms(params, args.max_points)
    checks = report.to_json()
    checks.pop("all_pass")
    table = intersection_numbers(params, args.max_points)
    return _run_report(
        "scheme-verify", params, checks, {"intersection_numbers": intersection_table_json(table)}
    )


def _cmd_adjacency(args, parser) -> dict:
    params = _params_from_args(args, parser)
    shape = _parse_shape(args.shape, params.m + 1, params.n, parser, "--shape")
    lifted = adjacency_n(shape, params, args.max_points)
    brute = relation_matrix(shape, params, args.max_points)
    checks = {"matches_relation_matrix": lifted == brute}
    data = {
        "shape": list(shape),
        "valency": valency_n(shape, params),
        "matrix": lifted.to_json(),
    }
    return _run_report("adjacency", params, checks, data)


def _cmd_eigenmatrix(args, parser) -> dict:
    params = _params_from_args(args, parser)
    P, Q = eigen_n(params)
    size_identity = P * Q == RatMatrix.identity(params.class_count).scale(params.num_points)
    mat = P if args.which == "P" else Q
    data = {
        "which": args.which,
        "shape_order": [list(s) for s in enumerate_shapes(params)],
        "matrix": mat.to_json(),
    }
    return _run_report("eigenmatrix", params, {"pq_product_is_size_identity": size_identity}, data)


def _cmd_krawchouk(args, parser) -> dict:
    params = _params_from_args(args, parser)
    table = krawchouk_table(params, reversed_q=args.reversed)
    shapes = enumerate_shapes(params)
    rows = [[format_rational(table[(mu, lam)]) for mu in shapes] for lam in shapes]
    data = {
        "reversed": bool(args.reversed),
        "shape_order": [list(s) for s in shapes],
        "table": rows,
    }
    return _run_report("krawchouk", params, {}, data)


def _cmd_theta(args, parser) -> dict:
    params = _params_from_args(args, parser)
    lam = _parse_shape(args.lam, params.m, params.n, parser, "--lambda")
    mu = _parse_shape(args.mu, params.m, params.n, parser, "--mu")
    grids = theta_enumerate(lam, mu, params)
    feasible = theta_feasible(lam, mu, params)
    checks = {"feasible_iff_nonempty": feasible == bool(grids)}
    data = {
        "lambda": list(lam),
        "mu": list(mu),
        "feasible": feasible,
        "matrices": [[list(row) for row in grid] for grid in grids],
    }
    return _run_report("theta", params, checks, data)


def _cmd_omega(args, parser) -> dict:
    params = _params_from_args(args, parser)
    pairs = omega_set(params)
    lam_info = lambda_set(params)
    consistent = all(
        theta_feasible(lam, mu, params) == bool(theta_enumerate(lam, mu, params))
        for lam, mu in pairs
    )
    data = {
        "pairs": [[list(lam), list(mu)] for lam, mu in pairs],
        "size": len(pairs),
        "lambda_size": lam_info.size,
        "epsilon": lam_info.epsilon,
        "multiset_binomial": math.comb(lam_info.size + params.n - 1, params.n),
    }
    return _run_report("omega", params, {"feasible_iff_nonempty": consistent}, data)


def _cmd_identities(args, parser) -> dict:
    params = _params_from_args(args, parser)
    checks = verify_terw_identities(params, args.max_points)
    return _run_report("identities", params, dict(checks), {})


def _cmd_closure(args, parser) -> dict:
    params = _params_from_args(args, parser)
    sub = terwilliger_closure(params, args.generators, args.max_points)
    data = {"generators": args.generators, "dimension": sub.dimension}
    return _run_report("closure", params, {}, data)


def _cmd_report(args, parser) -> dict:
    params = _params_from_args(args, parser)
    report = structure_report(params, args.max_points)
    checks = dict(report.checks)
    if args.strict:
        checks["predictions_agree"] = report.all_predictions_agree
    return _run_report("report", params, checks, report.to_json())


def _run_instance(params: SchemeParams, max_points: int, strict: bool) -> dict:
    axioms = verify_axioms(params, max_points)
    spectral = verify_spectral_n(params, max_points)
    duality = verify_base_duality(params)
    report = structure_report(params, max_points)
    checks = {
        "axioms_all_pass": axioms.all_pass,
        "spectral_all_pass": spectral.all_pass,
        "base_duality_all_pass": duality.all_pass,
    }
    checks.update(report.checks)
    if strict:
        checks["predictions_agree"] = report.all_predictions_agree
    data = {
        "instance": params.label(),
        "axioms": axioms.to_json(),
        "spectral": spectral.to_json(),
        "duality": duality.to_json(),
        "report": report.to_json(),
    }
    out = _run_report("instance", params, checks, data)
    out["disagreements"] = [
        {"source": p.source, "value": p.value}
        for p in report.predictions
        if not p.agrees
    ]
    return out


def _cmd_suite(args, parser) -> dict:
    instances = []
    disagreements = []
    overall = True
    for q, n in SUITE_INSTANCES:
        params = SchemeParams(q, n)
        if params.num_points > args.max_points:
            _log(args, f"skipping {params.label()}: over --max-points {args.max_points}")
            continue
        start = time.monotonic()
        _log(args, f"running {params.label()} ...")
        result = _run_instance(params, args.max_points, args.strict)
        elapsed = int((time.monotonic() - start) * 1000)
        _log(args, f"finished {params.label()} in {elapsed} ms")
        for entry in result["disagreements"]:
            disagreements.append({"instance": params.label(), **entry})
        overall = overall and result["overall_pass"]
        instances.append(result)
    payload = {
        "command": "suite",
        "strict": bool(args.strict),
        "instances": instances,
        "disagreements": disagreements,
        "overall_pass": overall,
    }
    return payload


_HANDLERS = {
    "shapes": _cmd_shapes,
    "scheme-verify": _cmd_scheme_verify,
    "adjacency": _cmd_adjacency,
    "eigenmatrix": _cmd_eigenmatrix,
    "krawchouk": _cmd_krawchouk,
    "theta": _cmd_theta,
    "omega": _cmd_omega,
    "identities": _cmd_identities,
    "closure": _cmd_closure,
    "report": _cmd_report,
    "suite": _cmd_suite,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[args.command]
    start = time.monotonic()
    try:
        payload = handler(args, parser)
    except SizeBound as exc:
        print(f"size bound exceeded: {exc}", file=sys.stderr)
        return 2
    elapsed = int((time.monotonic() - start) * 1000)
    _emit(payload)
    _log(args, f"{args.command} completed in {elapsed} ms")
    return 0 if payload["overall_pass"] else 1


if __name__ == "__main__":
    raise SystemExit(main())
