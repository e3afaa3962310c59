"""Command-line front end: count, spectrum, enumerate, rows and query
subcommands over a hypergraph file.

Exit codes: 0 ok, 2 input error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from dataclasses import asdict, dataclass

from .analytics import (count_at_least, count_total, filter_family, spectrum,
                        transversal_number, transversals_of_size)
from .engine import run
from .hypergraph import Hypergraph, HypergraphError, load_hypergraph
from .oracles import (BRUTE_VERTEX_LIMIT, IE_EDGE_LIMIT, brute_transversals,
                      inclusion_exclusion_count)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MISMATCH = 3


@dataclass(frozen=True)
class RunReport:
    n_total: int
    r_final: int
    k_min: int
    tau_min: int
    impositions: int
    s_max_observed: int
    elapsed: float


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transversals",
        description="Exact counting and enumeration of hypergraph transversals.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="hypergraph file ('w h' header text, or .json)")
    common.add_argument("--order", choices=("input", "size-asc"), default="input",
                        help="edge imposition order (default: input)")
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", parents=[common],
                           help="count all transversals")
    count.add_argument("--at-least", type=int, metavar="K",
                       help="also count transversals of cardinality >= K")
    count.add_argument("--verify", action="store_true",
                       help="cross-check against both oracles (within limits)")
    count.add_argument("--json", action="store_true",
                       help="emit the run report as a JSON object")

    sub.add_parser("spectrum", parents=[common],
                   help="print 'k count' for every cardinality 0..w")

    enum = sub.add_parser("enumerate", parents=[common],
                          help="print all k-element transversals")
    enum.add_argument("--k", type=int, required=True)
    enum.add_argument("--limit", type=int, metavar="M",
                      help="stop after M transversals")

    sub.add_parser("rows", parents=[common],
                   help="print the final rows in canonical token form")

    query = sub.add_parser("query", parents=[common],
                           help="filter the family by required/forbidden vertices")
    query.add_argument("--require", default="", metavar="LIST",
                       help="comma-separated vertices every transversal must contain")
    query.add_argument("--forbid", default="", metavar="LIST",
                       help="comma-separated vertices no transversal may contain")
    return parser


def _load(args) -> Hypergraph:
    hg = load_hypergraph(args.file)
    if args.order == "size-asc":
        hg = Hypergraph(hg.w, tuple(sorted(hg.edges, key=len)))
    return hg


def _parse_vertex_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise HypergraphError(f"bad vertex list {text!r}") from exc


def _cmd_count(args) -> int:
    hg = _load(args)
    start = time.perf_counter()
    family = run(hg)
    elapsed = time.perf_counter() - start
    total = count_total(family)
    k_min, tau_min = transversal_number(family)
    report = RunReport(
        n_total=total, r_final=len(family.rows), k_min=k_min, tau_min=tau_min,
        impositions=family.stats.impositions, s_max_observed=family.stats.s_max,
        elapsed=elapsed)
    at_least = None
    if args.at_least is not None:
        at_least = count_at_least(family, args.at_least)

    if args.json:
        payload = asdict(report)
        if at_least is not None:
            payload["at_least_k"] = args.at_least
            payload["at_least_count"] = at_least
        print(json.dumps(payload))
    else:
        print(f"N = {report.n_total}, R = {report.r_final}, "
              f"k_min = {report.k_min}, tau_min = {report.tau_min}")
        if at_least is not None:
            print(f"N(|X| >= {args.at_least}) = {at_least}")

    if args.verify:
        if hg.w <= BRUTE_VERTEX_LIMIT:
            brute = len(brute_transversals(hg))
            if brute != total:
                print(f"verification mismatch: brute force says {brute}, "
                      f"engine says {total}", file=sys.stderr)
                return EXIT_MISMATCH
            print(f"verify brute force: {brute} ok")
        else:
            print(f"verify brute force: skipped (w > {BRUTE_VERTEX_LIMIT})")
        if hg.h <= IE_EDGE_LIMIT:
            ie = inclusion_exclusion_count(hg)
            if ie != total:
                print(f"verification mismatch: inclusion-exclusion says {ie}, "
                      f"engine says {total}", file=sys.stderr)
                return EXIT_MISMATCH
            print(f"verify inclusion-exclusion: {ie} ok")
        else:
            print(f"verify inclusion-exclusion: skipped (h > {IE_EDGE_LIMIT})")
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    family = run(_load(args))
    for k, count in enumerate(spectrum(family).counts):
        print(f"{k} {count}")
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    family = run(_load(args))
    found = transversals_of_size(family, args.k)
    if args.limit is not None:
        found = itertools.islice(found, args.limit)
    for xs in found:
        print(" ".join(map(str, xs)))
    return EXIT_OK


def _cmd_rows(args) -> int:
    family = run(_load(args))
    for row in family.rows:
        print(row.render())
    return EXIT_OK


def _cmd_query(args) -> int:
    hg = _load(args)
    require = _parse_vertex_list(args.require)
    forbid = _parse_vertex_list(args.forbid)
    if set(require) & set(forbid):
        raise HypergraphError(
            f"require and forbid overlap on {sorted(set(require) & set(forbid))}")
    family = run(hg)
    filtered = filter_family(family, require=require, forbid=forbid)
    for row in filtered.rows:
        print(row.render())
    print(f"R = {len(filtered.rows)}, N = {count_total(filtered)}")
    return EXIT_OK


_HANDLERS = {
    "count": _cmd_count,
    "spectrum": _cmd_spectrum,
    "enumerate": _cmd_enumerate,
    "rows": _cmd_rows,
    "query": _cmd_query,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (HypergraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
