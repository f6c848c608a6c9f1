#!/usr/bin/env python3
"""Recompute the published invariant tables and write the verification rows.

Usage: python3 scripts/published_tables.py [--select all] [--out rows.json]
"""
import argparse
import json
import time

from stabinv.report import ReportConfig, rows_to_json, verify_paper_tables


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--select", default="all", choices=("char0", "char2", "char3", "all"))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", help="write the rows as JSON here")
    args = ap.parse_args()

    start = time.perf_counter()
    rows = verify_paper_tables(args.select, ReportConfig(seed=args.seed))
    for r in rows:
        note = f"  [{r.note}]" if r.note else ""
        print(f"{r.table:<11} {r.field:<7} {r.line()}{note}")
    counts = {s: sum(r.status == s for r in rows) for s in ("PASS", "FAIL", "INFO")}
    print(f"\n{counts['PASS']} pass, {counts['FAIL']} fail, {counts['INFO']} info "
          f"in {time.perf_counter() - start:.1f}s")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(rows_to_json(rows), fh, indent=2, ensure_ascii=False)


if __name__ == "__main__":
    main()
