"""Pairwise embeddability among the Henson tournaments B_1..B_n."""

import argparse
import time

from homhom.configurations import henson_B
from homhom.graph import embeds, is_strongly_connected
from homhom.localorder import is_local_order


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=6)
    args = ap.parse_args()
    bs = {n: henson_B(n) for n in range(1, args.nmax + 1)}

    for n, b in bs.items():
        print(f"B_{n}: {b.order} vertices, strongly connected={is_strongly_connected(b)}, "
              f"local order={is_local_order(b)}")

    start = time.perf_counter()
    print("\nembeds(B_i, B_j):")
    print("     " + " ".join(f"{j:>3}" for j in bs))
    comparable = 0
    for i, bi in bs.items():
        cells = []
        for j, bj in bs.items():
            e = embeds(bi, bj)
            comparable += e and i != j
            cells.append("  =" if i == j else ("  Y" if e else "  ."))
        print(f"{i:>3}  " + " ".join(cells))
    print(f"\ncomparable pairs: {comparable} ({time.perf_counter() - start:.2f}s)")


if __name__ == "__main__":
    main()
