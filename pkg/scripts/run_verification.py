#!/usr/bin/env python3
"""Run every verification suite at the documented default sizes.

Equivalent to ``truncdim verify --suite all``; kept as a script so the full
verification run is one command from a fresh checkout.  Exits nonzero if any
case fails.
"""

import argparse
import json
import sys

from truncdim import harness


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--json", dest="json_out", help="write all reports to this file")
    args = ap.parse_args()

    reports = []
    for name in harness.suite_names():
        report = harness.run_suite(name, threads=args.threads)
        reports.append(report)
        print(report.summary())
        for case in report.cases:
            if not case.passed:
                print(f"  FAIL {case.key}: expected {case.expected}, got {case.computed}")
    if args.json_out:
        with open(args.json_out, "w") as fh:
            json.dump([r.to_json() for r in reports], fh, indent=2)
    bad = sum(r.failed for r in reports)
    print(f"total: {sum(r.passed for r in reports)} passed, {bad} failed")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
