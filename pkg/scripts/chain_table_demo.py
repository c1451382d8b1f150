#!/usr/bin/env python3
"""Print the chain table of a monomial pattern set on a loop quiver.

Patterns are words over single-letter loop names, e.g.:

    python scripts/chain_table_demo.py xxyyy xxx --max-n 4
"""
import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from pathalg import Quiver, enumerate_overlaps, find_partition  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("patterns", nargs="+", help="words over loop letters, e.g. xxyyy xxx")
    ap.add_argument("--max-n", type=int, default=4, dest="max_n")
    ap.add_argument("--cuts", action="store_true", help="also print one cut per word")
    args = ap.parse_args()

    letters = sorted({ch for word in args.patterns for ch in word})
    quiver = Quiver.build(["e"], [(ch, "e", "e") for ch in letters])
    pats = [quiver.path("*".join(word)) for word in args.patterns]
    table = enumerate_overlaps(quiver, pats, args.max_n)

    def flat(p):
        return str(p).replace("*", "")

    for n in range(table.depth + 1):
        mino, maxo, minq, maxq = table.extrema(n)
        print(f"level {n}: lengths overlap [{mino}, {maxo}]  quasi [{minq}, {maxq}]")
        for w in table.overlaps(n):
            pred = table.predecessor(n, w)
            line = f"  {flat(w):<20} <- {flat(pred) if pred else '-'}"
            if args.cuts and n >= 1:
                cut = find_partition(w, n, pats)
                if cut is not None:
                    u = ",".join(flat(p) for p in cut.u)
                    v = ",".join(flat(p) for p in cut.v)
                    line += f"   u=({u}) v=({v})"
            print(line)
        for (w, v) in table.quasi(n):
            pred = table.quasi_predecessor(n, w, v)
            print(f"  ({flat(w)}, {flat(v)})".ljust(24) + f" <- {flat(pred) if pred else '-'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
