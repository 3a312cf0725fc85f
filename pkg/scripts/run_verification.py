#!/usr/bin/env python3
"""Run the full verification battery and print one line per criterion."""

import argparse
import json
import sys
import time

from properads import verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit the raw reports")
    parser.add_argument("--only", help="comma-separated criterion prefixes to run")
    args = parser.parse_args()

    wanted = args.only.split(",") if args.only else None
    reports = []
    all_ok = True
    for key, fn in verify.CRITERIA:
        if wanted and not any(key.startswith(w) for w in wanted):
            continue
        start = time.time()
        report = fn()
        elapsed = time.time() - start
        ok = bool(report.get("ok"))
        all_ok = all_ok and ok
        reports.append({"criterion": key, "seconds": round(elapsed, 2), **report})
        print(f"{key:28s} {'PASS' if ok else 'FAIL':4s} {elapsed:7.2f}s")
    if args.json:
        print(json.dumps(reports, indent=2, default=str))
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
