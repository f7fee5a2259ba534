"""Time every construction route per (m, n) and write a CSV.

    python scripts/bench_methods.py --max-degree 12 --out results/bench.csv
"""

import argparse
import csv
from pathlib import Path

from ggp.cli import bench_rows

METHODS = ["eigensolver", "recurrence", "twin-recurrence", "genfunc"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-degree", type=int, default=10)
    ap.add_argument("--out", default="results/bench.csv")
    args = ap.parse_args()

    rows = bench_rows(args.max_degree, METHODS)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=["m", "n", "terms"] + METHODS)
        w.writeheader()
        w.writerows(rows)

    # per-degree totals are what usually matter
    by_deg = {}
    for r in rows:
        acc = by_deg.setdefault(r["m"] + r["n"], dict.fromkeys(METHODS[:3], 0.0))
        for m in METHODS[:3]:
            acc[m] += r[m]
    print("deg " + " ".join(f"{m:>16}" for m in METHODS[:3]))
    for d, acc in sorted(by_deg.items()):
        print(f"{d:>3} " + " ".join(f"{acc[m] * 1e3:>14.2f}ms" for m in METHODS[:3]))


if __name__ == "__main__":
    raise SystemExit(main())
