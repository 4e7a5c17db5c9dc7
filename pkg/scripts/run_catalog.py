"""Run the whole check catalog and write a JSON report.

    python3 scripts/run_catalog.py --max-n 4 --max-deg 8 --out report.json
"""
import argparse
import sys

from symz.harness import Bounds, reports_json, verify_catalog


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int)
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--max-deg", type=int, default=6)
    ap.add_argument("--points", type=int, default=5)
    ap.add_argument("--out")
    args = ap.parse_args()

    reports, code = verify_catalog("all", args.seed, Bounds(args.max_n, args.max_deg, args.points))
    for r in reports:
        print(r.line())
    total = sum(r.wall_time for r in reports)
    print(f"{len(reports)} checks in {total:.1f}s, exit {code}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(reports_json(reports))
    return code


if __name__ == "__main__":
    sys.exit(main())
