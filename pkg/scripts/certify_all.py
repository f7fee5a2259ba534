"""Full certification campaign at the acceptance bounds; writes a JSON report.

    python scripts/certify_all.py [--out results/certification.json] [--jobs N]
"""

import argparse
import json
import time
from pathlib import Path

from ggp.verify import SUITES, SuiteConfig, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="results/certification.json")
    ap.add_argument("--max-degree", type=int, default=10)
    ap.add_argument("--grid", type=int, default=25)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    config = SuiteConfig(suites=SUITES, max_degree=args.max_degree, m_max=args.grid,
                         n_max=args.grid, a1_max=30, jobs=args.jobs)
    t0 = time.perf_counter()
    report = run_suite(config)
    wall = time.perf_counter() - t0

    by_check = {}
    for r in report.results:
        tally = by_check.setdefault(r.check_name, [0, 0])
        tally[0 if r.passed else 1] += 1
    for name, (ok, bad) in sorted(by_check.items()):
        print(f"{name:16s} {ok:5d} pass {bad:3d} fail")
    print(f"total {report.summary['passed']}/{report.summary['total']} in {wall:.1f}s")
    print(report.certification_note)

    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(report.to_dict(), indent=1) + "\n")
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
