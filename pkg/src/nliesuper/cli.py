"""Command-line interface.

Exit codes: 0 success, 1 validation or verification failure, 2 bad input,
3 solver capacity exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone

from . import bounds, invariants, serialize
from .algebra import (
    AlgebraError,
    direct_sum,
    make_abelian,
    make_filiform,
    make_heisenberg_nlie,
    validate_grading,
    validate_jacobi,
)
from .multiplier import DEFAULT_MAX_UNKNOWNS, CapacityError, multiplier_dim
from .serialize import AlgebraFormatError
from .verify import verify_algebra, verify_corpus

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


class _InputError(Exception):
    pass


def _emit(args, payload: dict, table_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(table_lines))


def _load(path, check_grading=True):
    try:
        return serialize.load(path, check_grading=check_grading)
    except AlgebraFormatError as exc:
        raise _InputError(str(exc)) from None


def _gd(alg, sub):
    return list(invariants.graded_dims(alg, sub))


def _fmt_tuple(alg, idx):
    return "[" + ", ".join(alg.name(i) for i in idx) + "]"


def cmd_validate(args) -> int:
    alg = _load(args.file, check_grading=False)
    grading = validate_grading(alg)
    jac = [] if grading else validate_jacobi(alg)
    ok = not grading and not jac
    payload = {
        "file": args.file,
        "valid": ok,
        "grading_violations": [{"args": list(mono), "expected_parity": p} for mono, p in grading],
        "jacobi_violations": [
            {"x": list(v.x), "y": list(v.y), "residual": [str(r) for r in v.residual]} for v in jac
        ],
    }
    lines = [f"{args.file}: {'valid' if ok else 'INVALID'}"]
    for mono, p in grading:
        lines.append(f"  grading: bracket {_fmt_tuple(alg, mono)} must have parity {p}")
    for v in jac:
        lines.append(f"  jacobi: x={_fmt_tuple(alg, v.x)} y={_fmt_tuple(alg, v.y)}")
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


def invariants_payload(alg) -> dict:
    series = invariants.lower_central_series(alg)
    z = invariants.center(alg)
    fil = None
    if alg.dims.odd == 0:
        fil = invariants.is_filiform(alg)
    return {
        "arity": alg.arity,
        "dims": [alg.dims.even, alg.dims.odd],
        "lower_central_series": [_gd(alg, t) for t in series.terms],
        "derived": _gd(alg, invariants.derived_subalgebra(alg)),
        "center": _gd(alg, z),
        "nilpotency_class": series.nilpotency_class,
        "filiform": fil,
        "minimal_generators": list(invariants.minimal_generators(alg)),
    }


def cmd_invariants(args) -> int:
    alg = _load(args.file)
    p = invariants_payload(alg)
    lines = [
        f"arity               {p['arity']}",
        f"dim L               ({p['dims'][0]}|{p['dims'][1]})",
        "lower central series " + " > ".join(f"({e}|{o})" for e, o in p["lower_central_series"]),
        f"dim L^2             ({p['derived'][0]}|{p['derived'][1]})",
        f"dim Z(L)            ({p['center'][0]}|{p['center'][1]})",
        f"nilpotency class    {p['nilpotency_class'] if p['nilpotency_class'] is not None else 'not nilpotent'}",
        f"filiform            {'n/a (odd part)' if p['filiform'] is None else p['filiform']}",
        f"generators          ({p['minimal_generators'][0]}|{p['minimal_generators'][1]})",
    ]
    _emit(args, p, lines)
    return EXIT_OK


def cmd_multiplier(args) -> int:
    alg = _load(args.file)
    try:
        rep = multiplier_dim(alg, max_unknowns=args.max_unknowns)
    except CapacityError as exc:
        print(f"capacity exceeded: {exc} (raise --max-unknowns to allow larger systems)",
              file=sys.stderr)
        return EXIT_CAPACITY
    payload = rep.as_dict()
    payload["t_invariant"] = bounds.t_invariant(alg, rep.total)
    payload["upper_bound"] = bounds.multiplier_upper_bound(alg)
    lines = [
        "parity   Z2   B2    M",
        f"even   {rep.even_Z2:4d} {rep.even_B2:4d} {rep.even_M:4d}",
        f"odd    {rep.odd_Z2:4d} {rep.odd_B2:4d} {rep.odd_M:4d}",
        f"dim M(L)       {rep.total}",
        f"t(n, L)        {payload['t_invariant']}",
        f"upper bound    {payload['upper_bound']}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_bounds(args) -> int:
    alg = _load(args.file)
    reps = bounds.all_bounds(alg)
    payload = {"bounds": [{"name": b.bound_name, "inputs": b.inputs, "value": b.value} for b in reps]}
    lines = [f"{b.bound_name:<24} {b.value:>8}   {b.inputs}" for b in reps]
    _emit(args, payload, lines)
    return EXIT_OK


def _check_line(c) -> str:
    rel = {"<=": "<=", "=": "==", "in": "in"}[c["relation"]]
    status = "ok" if c["passed"] else ("FAIL" if c["asserted"] else "no")
    tag = "" if c["asserted"] else " (reported)"
    detail = f"  [{c['detail']}]" if c["detail"] else ""
    return f"  {status:<4} {c['name']:<26} {c['lhs']} {rel} {c['rhs']}{tag}{detail}"


def cmd_verify(args) -> int:
    solver = {"max_unknowns": args.max_unknowns}
    if args.corpus:
        result = verify_corpus(seed=args.seed, **solver)
        reports = result["entries"] + result["pairs"]
        passed = result["passed"]
        payload = dict(result)
    else:
        if not args.file:
            raise _InputError("verify needs a file or --corpus")
        alg = _load(args.file)
        rep = verify_algebra(alg, args.file, seed=args.seed, **solver).as_dict()
        reports = [rep]
        passed = rep["summary"]["failed"] == 0
        payload = {"seed": args.seed, "entries": [rep], "passed": passed}
    payload["timestamp"] = datetime.now(timezone.utc).isoformat()
    lines = []
    for r in reports:
        s = r["summary"]
        if r["skipped"]:
            lines.append(f"{r['algebra_id']}: skipped ({r['skipped']})")
            continue
        lines.append(f"{r['algebra_id']}: {s['passed']}/{s['checks']} checks passed")
        for c in r["checks"]:
            if not c["passed"] or args.verbose:
                lines.append(_check_line(c))
    lines.append("all asserted checks hold" if passed else "SOME ASSERTED CHECKS FAILED")
    _emit(args, payload, lines)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_make(args) -> int:
    fam = args.family
    try:
        if fam == "abelian":
            alg = make_abelian(_need(args, "n"), (_need(args, "m"), args.k or 0))
        elif fam == "heisenberg":
            alg = make_heisenberg_nlie(_need(args, "n"))
        elif fam == "filiform":
            alg = make_filiform(_need(args, "n"), _need(args, "m"))
        elif fam == "direct-sum":
            if len(args.inputs) != 2:
                raise _InputError("direct-sum takes exactly two input files")
            alg = direct_sum(_load(args.inputs[0]), _load(args.inputs[1]))
        else:  # pragma: no cover - argparse restricts choices
            raise _InputError(f"unknown family {fam}")
    except (AlgebraError, ValueError) as exc:
        if isinstance(exc, _InputError):
            raise
        raise _InputError(str(exc)) from None
    serialize.save(alg, args.output)
    if args.format == "json":
        print(json.dumps({"written": args.output, "dims": [alg.dims.even, alg.dims.odd]}))
    else:
        print(f"wrote {args.output}: arity {alg.arity}, dim ({alg.dims.even}|{alg.dims.odd}), "
              f"{len(alg.constants)} nonzero brackets")
    return EXIT_OK


def _need(args, name):
    v = getattr(args, name)
    if v is None:
        raise _InputError(f"--{name} is required for family {args.family}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default=argparse.SUPPRESS)
    common.add_argument("--max-unknowns", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(
        prog="nliesuper",
        description="Exact invariants and Schur multipliers of n-Lie superalgebras.",
    )
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--max-unknowns", type=int, default=DEFAULT_MAX_UNKNOWNS)
    p.add_argument("--seed", type=int, default=0, help="seed for sampled central ideals")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (
        ("validate", cmd_validate, "check grading and the graded Filippov-Jacobi identity"),
        ("invariants", cmd_invariants, "derived series, center, class, generators"),
        ("multiplier", cmd_multiplier, "Schur multiplier dimension via cocycles"),
        ("bounds", cmd_bounds, "evaluate the closed-form dimension bounds"),
    ):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("file")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("verify", parents=[common], help="run every applicable inequality check")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--corpus", action="store_true", help="verify the built-in corpus")
    sp.add_argument("-v", "--verbose", action="store_true", help="list passing checks too")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("make", parents=[common], help="write a built-in algebra to a file")
    sp.add_argument("family", choices=("abelian", "heisenberg", "filiform", "direct-sum"))
    sp.add_argument("inputs", nargs="*", help="input files for direct-sum")
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("-o", "--output", required=True)
    sp.set_defaults(func=cmd_make)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
