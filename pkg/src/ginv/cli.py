"""``ginv`` command-line front end.

Exit statuses: 0 success / pass, 1 infrastructure or usage error,
2 mathematical precondition (e.g. group inverse of an index > 1 matrix),
3 an identity failed, 4 a checker's hypotheses were not met.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from . import __version__
from .checks import REGISTRY, CheckResult, Verdict, check_decomposition, check_definition
from .engine import (
    NotGroupInvertible,
    core_ep,
    drazin_data,
    gg_inverse,
    group_inverse,
    m_weak_group,
    mat_index,
    moore_penrose,
    mwg_decompose,
    mwg_from_blocks,
    pierce_blocks,
    weak_group,
)
from .fileio import (
    ParseError,
    dumps,
    matrix_to_json,
    parse_matrix_file,
    write_json_atomic,
    write_matrix_file,
)
from .generators import GenSpec, SpecError
from .matrix import DimensionError, Matrix
from .suite import build_report, run_suite

EXIT_OK, EXIT_ERROR, EXIT_PRECONDITION, EXIT_FAIL, EXIT_HYPOTHESIS = 0, 1, 2, 3, 4

_VERDICT_EXIT = {
    Verdict.PASS: EXIT_OK,
    Verdict.FAIL: EXIT_FAIL,
    Verdict.HYPOTHESIS_VIOLATED: EXIT_HYPOTHESIS,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for math preconditions.
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


# --- definitional verification of computed inverses --------------------------


def _defining_equations(kind: str, A: Matrix, X: Matrix, m: int | None) -> list[tuple[str, bool]]:
    if kind == "mp":
        AX, XA = A @ X, X @ A
        return [("A X A = A", AX @ A == A), ("X A X = X", XA @ X == X),
                ("(A X)* = A X", AX.is_hermitian()), ("(X A)* = X A", XA.is_hermitian())]
    k = mat_index(A)
    Ak = A ** k
    Ak1 = Ak @ A
    ax2 = ("A X^2 = X", A @ X @ X == X)
    tail = ("A^k = X A^(k+1)", X @ Ak1 == Ak)
    if kind in ("drazin", "group"):
        eqs = [ax2, ("A X = X A", A @ X == X @ A), tail]
        if kind == "group":
            eqs.append(("A = A^2 X", A @ A @ X == A))
        return eqs
    if kind == "coreep":
        return [ax2, ("(A X)* = A X", (A @ X).is_hermitian()), tail]
    if kind == "wg":
        w = A.H @ A @ A @ X
        return [ax2, ("(A* A^2 X)* = A* A^2 X", w.is_hermitian()), tail]
    if kind == "mwg":
        r = check_definition(A, X, m)
        return [("m-weak group defining system", r.passed)]
    if kind == "gg":
        C = core_ep(A)
        return [("A X = (A^cep)^2 A^2", A @ X == C @ C @ A @ A),
                ("R(X) in R(A^k)", X.range_contained_in(Ak))]
    raise ValueError(kind)


_COMPUTE: dict[str, Callable[[Matrix, int | None], Matrix]] = {
    "mp": lambda A, m: moore_penrose(A),
    "group": lambda A, m: group_inverse(A),
    "drazin": lambda A, m: drazin_data(A).drazin,
    "coreep": lambda A, m: core_ep(A),
    "wg": lambda A, m: weak_group(A),
    "mwg": lambda A, m: m_weak_group(A, m),
    "gg": lambda A, m: gg_inverse(A),
}


def cmd_compute(args) -> int:
    if args.kind == "mwg" and args.m is None:
        raise _UsageError("compute mwg requires --m")
    A = parse_matrix_file(args.input)
    try:
        X = _COMPUTE[args.kind](A, args.m)
    except NotGroupInvertible as exc:
        print(f"error: matrix has no group inverse: index {exc.index} > 1", file=sys.stderr)
        return EXIT_PRECONDITION
    write_matrix_file(args.output, X)
    eqs = _defining_equations(args.kind, A, X, args.m)
    ok = all(flag for _, flag in eqs)
    for label, flag in eqs:
        print(f"{'ok  ' if flag else 'FAIL'} {label}")
    print(f"verified: {'pass' if ok else 'fail'}")
    return EXIT_OK if ok else EXIT_FAIL


def _print_result(result: CheckResult) -> int:
    print(dumps(result.to_json()), end="")
    return _VERDICT_EXIT[result.verdict]


def cmd_verify(args) -> int:
    if args.check not in REGISTRY:
        names = ", ".join(sorted(REGISTRY))
        print(f"error: unknown check {args.check!r}; valid checks: {names}", file=sys.stderr)
        return EXIT_ERROR
    A = parse_matrix_file(args.input)
    X = parse_matrix_file(args.x) if args.x else None
    Y = parse_matrix_file(args.y) if args.y else None
    _, run = REGISTRY[args.check]
    return _print_result(run(A, X, Y, args.m))


def cmd_decompose(args) -> int:
    A = parse_matrix_file(args.input)
    d = mwg_decompose(A, args.m)
    write_matrix_file(args.output_x, d.x)
    write_matrix_file(args.output_y, d.y)
    result = check_decomposition(A, d)
    print(f"decomposition check: {result.verdict.value}")
    return _VERDICT_EXIT[result.verdict]


def cmd_blocks(args) -> int:
    A = parse_matrix_file(args.input)
    B = pierce_blocks(A, args.m)
    X = mwg_from_blocks(B, args.m)
    write_json_atomic(args.output, {
        "m": args.m,
        "p": matrix_to_json(B.p),
        "t": matrix_to_json(B.t),
        "s": matrix_to_json(B.s),
        "n": matrix_to_json(B.n),
        "c": [matrix_to_json(c) for c in B.c],
        "mwg": matrix_to_json(X),
    })
    ok = X == m_weak_group(A, args.m)
    print(f"corner form agrees with direct computation: {'pass' if ok else 'fail'}")
    return EXIT_OK if ok else EXIT_FAIL


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("m values must be positive integers")
    return values


def cmd_harness(args) -> int:
    if args.trials < 1:
        raise _UsageError("--trials must be >= 1")
    try:
        spec = GenSpec(args.dim_max, min(args.index_max, args.dim_max), args.entry_bound, args.seed)
    except SpecError as exc:
        raise _UsageError(str(exc))
    results = run_suite(spec, args.trials, args.m, workers=args.workers)
    report = build_report(results, seed=args.seed, trials=args.trials, dim_max=args.dim_max,
                          index_max=args.index_max, m_list=args.m, entry_bound=args.entry_bound)
    write_json_atomic(args.report, report)
    s = report["summary"]
    print(f"total {s['total']}  passed {s['passed']}  failed {s['failed']}  "
          f"hypothesis-violated {s['hypothesisViolated']}")
    return EXIT_OK if s["failed"] == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ginv", description="Exact generalized inverses over Q(i).")
    parser.add_argument("--version", action="version", version=f"ginv {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="compute a generalized inverse")
    p.add_argument("kind", choices=sorted(_COMPUTE))
    p.add_argument("--m", type=int)
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run one named check")
    p.add_argument("check")
    p.add_argument("--input", required=True)
    p.add_argument("--x", help="second matrix: candidate inverse, decomposition x, or law partner b")
    p.add_argument("--y", help="decomposition y")
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="m-weak group decomposition a = x + y")
    p.add_argument("--input", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--output-x", required=True)
    p.add_argument("--output-y", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("blocks", help="corner blocks relative to p = A A^cep")
    p.add_argument("--input", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("harness", help="randomized verification run")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--dim-max", type=int, required=True)
    p.add_argument("--index-max", type=int, required=True)
    p.add_argument("--m", type=_int_list, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--report", required=True)
    p.add_argument("--entry-bound", type=int, default=3)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_harness)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "m", None) is not None and isinstance(args.m, int) and args.m < 1:
            raise _UsageError("--m must be a positive integer")
        return args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_ERROR
    except (ParseError, DimensionError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
