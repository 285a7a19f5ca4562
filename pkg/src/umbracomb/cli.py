"""Command-line entry point: ``umbracomb <command> [options]``.

Exit status: 0 on success (all checks pass), 1 if any check failed,
2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import noncrossing, parking, symfunc, verify

__all__ = ["main", "build_parser", "COUNT_OBJECTS"]

COUNT_OBJECTS = {
    "parking": "classical parking functions of length n",
    "parking-k": "k-parking functions of length n",
    "parking-b": "type B parking functions, [n]^n",
    "orbits": "nondecreasing parking functions (orbits)",
    "nc": "noncrossing partitions of [n]",
    "nc-k": "k-divisible noncrossing partitions of [kn]",
    "nc-b": "type B noncrossing partitions of [+-n]",
    "chains-nc": "maximal chains of NC_n",
    "chains-nc-b": "maximal chains of NC^B_n",
}


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="umbracomb",
        description="Parking functions, volume polynomials and umbral identities in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_n=True):
        if need_n:
            p.add_argument("--n", type=_positive, required=True)
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("pf", help="parking function symmetric function in the h-basis")
    common(p)
    p.add_argument("--k", type=_positive, default=1, help="k-parking variant")
    p.add_argument("--type", choices=("a", "b"), default="a")

    p = sub.add_parser("volume", help="volume polynomial aggregated by exponent multiset")
    common(p)
    p.add_argument("--type", choices=("a", "b"), default="a")
    p.add_argument("--kind", choices=("closed_form", "definition"), default="closed_form")

    p = sub.add_parser("hstar", help="Macdonald's h_n^* in the h-basis")
    common(p)
    p.add_argument("--kind", choices=("series_inversion", "lagrange_formula"), default="series_inversion")

    p = sub.add_parser("count", help="cardinalities of combinatorial families")
    common(p)
    p.add_argument("--object", choices=sorted(COUNT_OBJECTS), required=True)
    p.add_argument("--k", type=_positive, default=2)

    p = sub.add_parser("flags", help="flag f- and h-vectors of NC_{n+1}")
    common(p)

    p = sub.add_parser("verify", help="run identity suites")
    common(p, need_n=False)
    p.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    p.add_argument("--max-n", type=_positive, default=5)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--timing", action="store_true", help="include elapsed times (not reproducible)")
    return parser


def _emit(data, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, separators=(",", ":")))
    else:
        print(text)


def _count(obj: str, n: int, k: int) -> int:
    if obj == "parking":
        return parking.count_parking(n)
    if obj == "parking-k":
        return parking.count_parking(n, "k_parking", k)
    if obj == "parking-b":
        return parking.count_parking(n, "type_B")
    if obj == "orbits":
        return len(parking.orbit_representatives(n))
    if obj == "nc":
        return len(noncrossing.enumerate_nc(n))
    if obj == "nc-k":
        return len(noncrossing.enumerate_nc(n, "k_divisible", k))
    if obj == "nc-b":
        return len(noncrossing.enumerate_nc(n, "B"))
    if obj == "chains-nc":
        return noncrossing.maximal_chains(n, "A")
    if obj == "chains-nc-b":
        return noncrossing.maximal_chains(n, "B")
    raise ValueError(obj)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format

    if args.command == "pf":
        if args.type == "b":
            if args.k != 1:
                parser.error("--k applies to type a only")
            f = symfunc.pf_typeB(args.n)
        elif args.k == 1:
            f = symfunc.pf(args.n)
        else:
            f = symfunc.pf_k(args.n, args.k)
        _emit(f.to_dict(), f.pretty("·"), fmt)
        return 0

    if args.command == "volume":
        agg = parking.volume_poly(args.n, args.type.upper(), args.kind)
        text = "\n".join(f"{mu}: {c}" for mu, c in agg.to_dict().items())
        _emit(agg.to_dict(), text, fmt)
        return 0

    if args.command == "hstar":
        f = symfunc.hstar(args.n, args.kind)
        _emit(f.to_dict(), f.pretty("·"), fmt)
        return 0

    if args.command == "count":
        value = _count(args.object, args.n, args.k)
        _emit(value, str(value), fmt)
        return 0

    if args.command == "flags":
        fv = noncrossing.flag_vectors(args.n)
        data = fv.to_dict()
        rows = [f"S={{{','.join(map(str, s))}}}  alpha={fv.alpha[s]}  beta={fv.beta[s]}" for s in fv.alpha]
        _emit(data, "\n".join(rows), fmt)
        return 0

    if args.command == "verify":
        reports = verify.run_suite(args.suite, args.max_n, args.jobs)
        failed = sum(not r.passed for r in reports)
        if fmt == "json":
            print(json.dumps(
                {"suite": args.suite, "max_n": args.max_n, "total": len(reports), "failed": failed,
                 "checks": [r.to_dict(args.timing) for r in reports]},
                separators=(",", ":"),
            ))
        else:
            for r in reports:
                print(r.line(args.timing))
            print(f"{len(reports)} checks, {failed} failed")
        return 1 if failed else 0

    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
