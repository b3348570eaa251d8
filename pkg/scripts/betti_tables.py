"""Print Betti, mixed Hodge and perversity tables for S^[n], n <= N."""

import argparse

from pw_hilbert.filtrations import perverse_filtration_X
from pw_hilbert.hilbert import betti, goettsche_oracle, mixed_hodge_table
from pw_hilbert.surfaces import X_ID, Y_ID, model


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=5)
    args = parser.parse_args()
    oracle = goettsche_oracle(args.n_max)
    for n in range(args.n_max + 1):
        b = betti(model(Y_ID), n)
        print(f"n={n} betti={b} oracle_match={b == oracle[n][:2 * n + 1]}")
        hodge = mixed_hodge_table(model(Y_ID), n)
        print("  Y weights:", {(d, w): c for (d, w, _), c in hodge.items()})
        p = perverse_filtration_X(n)
        grid = [[p.graded(d, k) for k in p.levels] for d in p.degrees]
        print("  Gr^P (rows d, cols k):")
        for d, row in enumerate(grid):
            print(f"    {d:2d} " + " ".join(f"{x:3d}" for x in row))


if __name__ == "__main__":
    main()
