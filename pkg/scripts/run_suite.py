"""Run verification suites and print a per-entry timing table.

Example:
    python3 scripts/run_suite.py --suite all --order 40
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from kthpart.verify import SUITES, run_suite, suite_passes


@dataclass(frozen=True)
class SuiteRun:
    suite: str
    order: int


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--suite", default="all", choices=SUITES + ("all",))
    ap.add_argument("--order", type=int, default=40)
    args = ap.parse_args()
    cfg = SuiteRun(args.suite, args.order)

    reports = run_suite(cfg.suite, cfg.order)
    width = max(len(r.id) for r in reports)
    for r in reports:
        mm = r.first_mismatch
        where = f"first mismatch q^{mm.n}" if mm else ""
        flag = "ok " if r.meets_expectation else "BAD"
        print(f"{flag} {r.id:<{width}}  {r.status.value:<4}  {r.elapsed * 1000:8.1f} ms  {where}")
    total = sum(r.elapsed for r in reports)
    print(f"{len(reports)} entries, {total:.1f} s at order {cfg.order}")
    return 0 if suite_passes(reports) else 1


if __name__ == "__main__":
    sys.exit(main())
