"""Walk through the full pipeline on a hypergraph file: build the row
family, print it with per-row sizes, then the cardinality spectrum, the
transversal number and a subset/superset query.

Usage:
    python scripts/demo_walkthrough.py [file]
"""

from __future__ import annotations

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from transversals import (count_at_least, count_total, filter_family,
                          load_hypergraph, run, spectrum, transversal_number)

DEFAULT_FILE = pathlib.Path(__file__).resolve().parent.parent / "data" / "sample14.hg"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("file", nargs="?", default=str(DEFAULT_FILE))
    parser.add_argument("--require", default="", help="comma-separated vertices")
    parser.add_argument("--forbid", default="", help="comma-separated vertices")
    args = parser.parse_args()

    hg = load_hypergraph(args.file)
    print(f"hypergraph: w={hg.w}, h={hg.h}, d={hg.d}")

    start = time.perf_counter()
    family = run(hg)
    elapsed = time.perf_counter() - start
    total = count_total(family)
    print(f"\nfinal rows ({len(family.rows)} rows, {total} transversals, "
          f"{elapsed * 1000:.2f} ms):")
    for row in family.rows:
        print(f"  {row.render():<40}  |{row.size()}|")
    stats = family.stats
    print(f"stats: impositions={stats.impositions}, s_max={stats.s_max}, "
          f"max_stack={stats.max_stack}")

    print("\nspectrum (k : count):")
    for k, count in enumerate(spectrum(family).counts):
        if count:
            print(f"  {k:>3} : {count}")
    k_min, tau_min = transversal_number(family)
    print(f"transversal number: k_min={k_min}, tau_min={tau_min}")
    print(f"at least k_min+1 elements: {count_at_least(family, k_min + 1)}")

    require = [int(v) for v in args.require.split(",") if v]
    forbid = [int(v) for v in args.forbid.split(",") if v]
    if require or forbid:
        filtered = filter_family(family, require=require, forbid=forbid)
        print(f"\nquery require={require} forbid={forbid} "
              f"({len(filtered.rows)} rows, {count_total(filtered)} members):")
        for row in filtered.rows:
            print(f"  {row.render()}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
