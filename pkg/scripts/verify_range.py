"""Batch-verify every check family for a range of n and print a summary grid.

    python scripts/verify_range.py --n-max 6
"""

import argparse
import time

from pw_hilbert.cli import run_checks

FAMILIES = ("pw", "chl", "hl", "rhl", "atq2")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=6)
    args = parser.parse_args()

    print("n\t" + "\t".join(FAMILIES) + "\tseconds")
    failed = False
    for n in range(args.n_max + 1):
        start = time.perf_counter()
        cells = []
        for fam in FAMILIES:
            checks = run_checks(fam, n)
            ok = all(c["passed"] for c in checks)
            failed |= not ok
            cells.append(f"{'ok' if ok else 'FAIL'}({len(checks)})")
        print(f"{n}\t" + "\t".join(cells) + f"\t{time.perf_counter() - start:.2f}")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
