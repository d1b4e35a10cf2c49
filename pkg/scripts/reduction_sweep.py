#!/usr/bin/env python3
"""Sweep the reduction verifier over all small supersequence instances.

Prints one line per (instance, variant) and a summary; optionally dumps
the full reports as JSON.
"""

import argparse
import itertools
import json
import sys
import time

from floodit.reduction import ScsInstance, verify_reduction


def instances(max_k, max_len, max_l):
    pieces = [""]
    for n in range(1, max_len + 1):
        pieces.extend("".join(p) for p in itertools.product("12", repeat=n))
    for k in range(1, max_k + 1):
        for combo in itertools.combinations_with_replacement(pieces, k):
            for l in range(max_l + 1):
                yield ScsInstance(combo, l)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-strings", type=int, default=2)
    parser.add_argument("--max-length", type=int, default=2)
    parser.add_argument("--max-l", type=int, default=3)
    parser.add_argument("--json-out", default=None, help="write all reports to this file")
    args = parser.parse_args()

    reports = []
    failures = 0
    start = time.perf_counter()
    for instance in instances(args.max_strings, args.max_length, args.max_l):
        for variant in ("fixed", "free"):
            report = verify_reduction(instance, variant)
            reports.append(report.to_json())
            status = "ok" if report.passed else ("partial" if report.partial else "FAIL")
            if not report.passed and not report.partial:
                failures += 1
            print(
                f"{status:7s} {variant:5s} strings={list(instance.strings)!r:28s} "
                f"l={instance.target_length} scs={report.scs_length} "
                f"width={report.board_width} checks={report.checks}"
            )
    elapsed = time.perf_counter() - start
    print(f"\n{len(reports)} verifications in {elapsed:.1f}s, {failures} failures")
    if args.json_out:
        with open(args.json_out, "w") as fh:
            json.dump(reports, fh, indent=2)
        print(f"reports written to {args.json_out}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
