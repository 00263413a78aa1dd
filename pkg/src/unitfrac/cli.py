"""Command-line front end: solve, gvalue, conjecture.

Exit codes: 0 when at least one representation (or witness) came out, 1 when
the search honestly found nothing, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from typing import Optional, Sequence

from .applications import smallest_max_denominator, verify_second_largest_range
from .multiset import Multiset
from .rationals import to_rational
from .search import SearchStats, all_representations, first_representation

_INT = re.compile(r"\s*(\d+)\s*$")
_RANGE = re.compile(r"\s*(\d+)\.\.(\d+)\s*$")
_SQUARES = re.compile(r"\s*squares\(\s*(\d+)\.\.(\d+)\s*\)\s*$")


def parse_denom_spec(spec: str) -> Multiset:
    """Denominator multiset from items like "2", "1..10", "squares(1..35)".

    Items are comma-separated and their multiplicities accumulate, so
    "2,2,1..3" holds three 2's.  Ranges are inclusive and must ascend.
    """
    values: list[int] = []
    pos = 0
    for item in spec.split(","):
        m = _INT.match(item)
        if m:
            values.append(_positive(m.group(1), pos))
        elif m := _RANGE.match(item):
            lo, hi = _ascending(m, pos)
            values.extend(range(lo, hi + 1))
        elif m := _SQUARES.match(item):
            lo, hi = _ascending(m, pos)
            values.extend(i * i for i in range(lo, hi + 1))
        else:
            raise ValueError(f"bad item {item.strip()!r} at position {pos} in denominator spec")
        pos += len(item) + 1
    return Multiset(values)


def _positive(text: str, pos: int) -> int:
    v = int(text)
    if v <= 0:
        raise ValueError(f"denominator must be positive, got {v} at position {pos}")
    return v


def _ascending(m: re.Match, pos: int) -> tuple[int, int]:
    lo, hi = _positive(m.group(1), pos), _positive(m.group(2), pos)
    if lo > hi:
        raise ValueError(f"descending range {lo}..{hi} at position {pos}")
    return lo, hi


def _progress_printer(label: str):
    def report(stats: SearchStats) -> None:
        print(
            f"{label}: {stats.branches_expanded} branches expanded, "
            f"{stats.representations_found} representations",
            file=sys.stderr,
        )

    return report


def _cmd_solve(args: argparse.Namespace) -> int:
    denoms = parse_denom_spec(args.denoms)
    target = to_rational(args.target)
    stats = SearchStats()
    on_progress = _progress_printer("solve") if args.progress else None
    started = time.perf_counter()
    if args.first:
        hit = first_representation(denoms, target, stats, on_progress)
        reps = [hit] if hit is not None else []
    else:
        reps = all_representations(denoms, target, stats, on_progress)
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    if args.json:
        print(
            json.dumps(
                {
                    "target": str(target),
                    "complete": not (args.first and reps),
                    "count": len(reps),
                    "representations": [list(r.elements()) for r in reps],
                    "stats": {
                        "branches_expanded": stats.branches_expanded,
                        "elapsed_ms": elapsed_ms,
                    },
                }
            )
        )
    else:
        for rep in reps:
            print(rep)
        if not reps:
            print("no representation", file=sys.stderr)
    return 0 if reps else 1


def _cmd_gvalue(args: argparse.Namespace) -> int:
    target = to_rational(args.target)
    stats = SearchStats()
    on_progress = _progress_printer("gvalue") if args.progress else None
    result = smallest_max_denominator(
        target,
        n_start=args.n_start,
        n_max=args.n_max,
        all_witnesses=not args.first,
        stats=stats,
        on_progress=on_progress,
    )
    if result is None:
        print(f"no representation of {target} within {{1..{args.n_max}}}", file=sys.stderr)
        return 1
    print(f"smallest n with a representation of {target} in {{1..n}}: {result.n}")
    print(f"witnesses: {len(result.witnesses)}" + (" (first only)" if args.first else ""))
    for w in result.witnesses:
        print(w)
    return 0


def _cmd_conjecture(args: argparse.Namespace) -> int:
    bounds = tuple(int(b) for b in args.bounds.split(",") if b.strip())
    if not bounds:
        raise ValueError(f"no bounds in {args.bounds!r}")
    rows = verify_second_largest_range(args.d_lo, args.d_hi, c_max=args.c_max, bounds=bounds)
    failures = 0
    for row in rows:
        if row.witness is None:
            failures += 1
            print(f"d={row.d}: no witness (c_max={args.c_max}, bounds={args.bounds})")
        else:
            print(f"d={row.d} c={row.c}: {row.witness}")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitfrac",
        description="Exhaustive unit-fraction representation search over a denominator multiset.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="find submultisets whose reciprocals sum to the target")
    solve.add_argument("--denoms", required=True, help='e.g. "2,3,4,12" or "1..10" or "squares(1..35)"')
    solve.add_argument("--target", required=True, help='rational like "3/2" or "1"')
    solve.add_argument("--first", action="store_true", help="stop at the first representation")
    solve.add_argument("--json", action="store_true", help="machine-readable output")
    solve.add_argument("--progress", action="store_true", help="progress to stderr")
    solve.set_defaults(run=_cmd_solve)

    gvalue = sub.add_parser(
        "gvalue", help="smallest n such that {1..n} can represent the target"
    )
    gvalue.add_argument("target", help='rational like "2" or "3/2"')
    gvalue.add_argument("--n-start", type=int, default=1, help="start the scan here")
    gvalue.add_argument("--n-max", type=int, default=10_000, help="give up beyond this n")
    gvalue.add_argument("--first", action="store_true", help="report one witness instead of all")
    gvalue.add_argument("--progress", action="store_true", help="progress to stderr")
    gvalue.set_defaults(run=_cmd_gvalue)

    conj = sub.add_parser(
        "conjecture",
        help="for each d in a range, find a representation of 1 whose second-largest element is d",
    )
    conj.add_argument("d_lo", type=int)
    conj.add_argument("d_hi", type=int)
    conj.add_argument("--c-max", type=int, default=1000, help="largest multiplier to consider")
    conj.add_argument("--bounds", default="100", help='escalating search bounds, e.g. "100,1000"')
    conj.set_defaults(run=_cmd_conjecture)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
