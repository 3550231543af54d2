"""Minimal witnesses of tournament blow-ups.

For each base tournament and each multiplicity vector with entries in
{1, ..., max_mult}, print the minimal witness, the report items and whether
B^ lies in the age of the base.
"""

import argparse
import itertools

from homhom.configurations import circular_tournament, cycle_c3
from homhom.errors import NoWitness
from homhom.homogeneity import check_minimal_witness
from homhom.localorder import is_local_order

BASES = {"C3": cycle_c3(), "S5": circular_tournament(2), "S7": circular_tournament(3)}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--base", choices=sorted(BASES), default="C3")
    ap.add_argument("--max-mult", type=int, default=3)
    ap.add_argument("--max-total", type=int, default=8)
    args = ap.parse_args()
    t = BASES[args.base]

    print("m, |A|, bijective, B tournament, A~v, A not tournament, |B^|, B^ in age, B^ local order")
    holds = 0
    total = 0
    for m in itertools.product(range(1, args.max_mult + 1), repeat=t.order):
        if sum(m) > args.max_total:
            continue
        try:
            r = check_minimal_witness(t, m)
        except NoWitness:
            print(f"{m}: homomorphism homogeneous")
            continue
        total += 1
        holds += r.lemma_holds
        bh = r.b_hat
        lo = is_local_order(bh) if bh is not None else None
        print(f"{m}, {len(r.witness.A)}, {r.h_bijective}, {r.b_is_tournament}, {r.all_adjacent_to_v}, "
              f"{r.a_not_tournament}, {bh.order if bh else '-'}, {r.b_hat_in_age}, {lo}")
    print(f"\nall four items plus B^ outside the age: {holds}/{total}")


if __name__ == "__main__":
    main()
