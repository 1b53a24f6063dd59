"""Classify every ant of the given lengths and print the recurrent ones per length."""

import argparse

from antlab.behavior import RECURRENT, sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("lengths", nargs="*", type=int, default=[4, 6])
    ap.add_argument("--horizon", type=int, default=50_000)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--all", action="store_true", help="print every row, not just the summary")
    args = ap.parse_args()
    for n in args.lengths:
        rows = sweep(n, args.horizon, workers=args.workers)
        if args.all:
            for r in rows:
                print(r.line())
        hits = [f"{r.code} {r.letters}" for r in rows if r.classification == RECURRENT]
        print(f"n={n}: {len(hits)} recurrent of {len(rows)}: " + ", ".join(hits))


if __name__ == "__main__":
    main()
