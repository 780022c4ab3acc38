"""Command line interface.

Subcommands: classify, enumerate, count, table, series, verify.  Output
is deterministic: identical arguments and seed give byte-identical
stdout.  Exit codes: 0 success, 1 verification or consistency failure,
2 usage or input errors.
"""

import argparse
import json
import sys
from fractions import Fraction

from .bijections import WeightAssignment
from .enumeration import PartitionClass, count, iterate
from .partition import ParseError, Partition, PartitionError
from .pipeline import (
    bell_series,
    counts_table,
    derive_a_from_b,
    derive_b_from_c,
    derive_c_from_d,
    forward_weighted,
)
from .series import Series, render_text
from .verify import run_checks

_CLASS_CHOICES = [cls.value for cls in PartitionClass]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="purecross",
        description="Classify, enumerate, and count purely crossing set "
        "partitions and their relatives; evaluate the associated "
        "generating functions exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="print the predicates and cover of one partition")
    p.add_argument("partition", help="partition text, e.g. '1,3|2,4'")

    p = sub.add_parser("enumerate", help="stream every member of a family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=_CLASS_CHOICES, default="all")
    p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("count", help="exact family size by enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=_CLASS_CHOICES, default="all")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("table", help="family sizes for n = 1 .. max-n via the series pipeline")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument(
        "--check-enum-up-to",
        type=int,
        default=0,
        metavar="M",
        help="cross-check rows n <= M against enumeration",
    )
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")

    p = sub.add_parser("series", help="coefficients of one of the four counting series")
    p.add_argument("--which", choices=["A", "B", "C", "D"], required=True)
    p.add_argument("--order", type=int, default=15)
    p.add_argument(
        "--weights",
        metavar="FILE",
        help="JSON weight assignment; switches to the weighted forward "
        "pipeline (degree-by-degree enumeration, keep the order small)",
    )
    p.add_argument("--format", choices=["plain", "tsv", "json"], default="plain")

    p = sub.add_parser("verify", help="run the library's invariant suite")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--weighted-trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)

    return parser


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _fail_parse(exc: ParseError) -> int:
    print("error: invalid partition text", file=sys.stderr)
    print(f"  {exc.text}", file=sys.stderr)
    print(f"  {' ' * exc.pos}^ {exc}", file=sys.stderr)
    return 2


def _cmd_classify(args) -> int:
    try:
        pi = Partition.parse(args.partition)
    except ParseError as exc:
        return _fail_parse(exc)
    except PartitionError as exc:
        return _fail(str(exc))
    obj = {
        "partition": str(pi),
        "n": pi.n,
        "noncrossing": pi.is_noncrossing(),
        "has_neighbors": pi.has_neighbors(),
        "connected": pi.is_connected(),
        "pc_plus": pi.is_pc_plus(),
        "purely_crossing": pi.is_purely_crossing(),
        "cover": str(pi.noncrossing_cover()),
    }
    print(json.dumps(obj))
    return 0


def _cmd_enumerate(args) -> int:
    if args.n < 1:
        return _fail("--n must be at least 1")
    members = iterate(args.n, PartitionClass(args.cls))
    if args.format == "json":
        print(json.dumps([str(pi) for pi in members]))
    else:
        for pi in members:
            print(pi)
    return 0


def _cmd_count(args) -> int:
    if args.n < 1:
        return _fail("--n must be at least 1")
    if args.workers < 1:
        return _fail("--workers must be at least 1")
    print(count(args.n, PartitionClass(args.cls), workers=args.workers))
    return 0


def _cmd_table(args) -> int:
    if args.max_n < 1:
        return _fail("--max-n must be at least 1")
    if args.check_enum_up_to < 0:
        return _fail("--check-enum-up-to must be nonnegative")
    try:
        table = counts_table(args.max_n, check_enum_up_to=args.check_enum_up_to)
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(table.to_json()))
    else:
        print(table.to_tsv())
    return 0


def _weighted_a_series(w: WeightAssignment, order: int) -> Series:
    coeffs = [Fraction(0)]
    for n in range(1, order + 1):
        coeffs.append(sum((w[pi] for pi in iterate(n, PartitionClass.PURELY_CROSSING)), Fraction(0)))
    return Series(coeffs, order=order)


def _cmd_series(args) -> int:
    if args.order < 1:
        return _fail("--order must be at least 1")
    order = args.order
    if args.weights is not None:
        try:
            with open(args.weights, encoding="utf-8") as handle:
                data = json.load(handle)
            w = WeightAssignment.from_json(data)
        except OSError as exc:
            return _fail(f"cannot read weights file: {exc}")
        except (ValueError, PartitionError) as exc:
            return _fail(f"bad weights file: {exc}")
        a = _weighted_a_series(w, order)
        b, c, d = forward_weighted(a)
        chosen = {"A": a, "B": b, "C": c, "D": d}[args.which]
    else:
        d = bell_series(order + 1)
        c = derive_c_from_d(d)
        chosen = {
            "A": lambda: derive_a_from_b(derive_b_from_c(c)),
            "B": lambda: derive_b_from_c(c),
            "C": lambda: c,
            "D": lambda: d.truncate(order),
        }[args.which]()
    if args.format == "json":
        print(json.dumps([str(v) for v in chosen.coeffs]))
    elif args.format == "tsv":
        for k, v in enumerate(chosen.coeffs):
            print(f"{k}\t{v}")
    else:
        print(render_text(chosen))
    return 0


def _cmd_verify(args) -> int:
    if args.max_n < 1:
        return _fail("--max-n must be at least 1")
    if args.weighted_trials < 1:
        return _fail("--weighted-trials must be at least 1")
    if args.workers < 1:
        return _fail("--workers must be at least 1")
    ok = run_checks(
        max_n=args.max_n,
        trials=args.weighted_trials,
        seed=args.seed,
        workers=args.workers,
    )
    return 0 if ok else 1


_HANDLERS = {
    "classify": _cmd_classify,
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "table": _cmd_table,
    "series": _cmd_series,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    """Parse arguments and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    return _HANDLERS[args.command](args)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
