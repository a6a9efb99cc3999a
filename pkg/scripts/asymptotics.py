"""Print exact FFW_k(n) against the leading term under both normalisations.

Example:
    python3 scripts/asymptotics.py --k 3 --n-max 10000
"""

from __future__ import annotations

import argparse
import time

from kthpart.verify import asym_table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--k", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--n-max", type=int, default=10_000)
    args = ap.parse_args()

    for k in args.k:
        t0 = time.perf_counter()
        proof = asym_table(k, args.n_max)
        statement = asym_table(k, args.n_max, proof_normalization=False)
        print(f"k={k}  ({time.perf_counter() - t0:.2f} s)")
        print(f"{'n':>8} {'FFW_k(n)':>18} {'ratio (k-1)!^2':>15} {'ratio (k-1)!':>13}")
        for a, s in zip(proof, statement):
            print(f"{a.n:>8} {a.value:>18} {a.ratio:>15.6f} {s.ratio:>13.6f}")
        print()


if __name__ == "__main__":
    main()
