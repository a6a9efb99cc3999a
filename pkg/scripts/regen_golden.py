"""Rewrite tests/golden/qexpr/*.out from cases.tsv.

Run after a deliberate change to the expression language or the series
format, then review the diff before committing.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from kthpart.fps import serialize
from kthpart.qexpr import expand

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden" / "qexpr"


def read_cases(path: Path) -> list[tuple[str, int, str]]:
    cases = []
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, order, expr = line.split("\t")
        cases.append((name, int(order), expr))
    return cases


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dir", type=Path, default=GOLDEN)
    args = ap.parse_args()
    for name, order, expr in read_cases(args.dir / "cases.tsv"):
        (args.dir / f"{name}.out").write_text(serialize(expand(expr, order)), encoding="utf-8")
        print(f"wrote {name}.out")


if __name__ == "__main__":
    main()
