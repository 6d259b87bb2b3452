#!/usr/bin/env python3
"""Print the trace-norm discontinuity witness for the limit automorphism.

For each n the element b_n is the (1,2) matrix unit in tensor factor n,
scaled by 1/n. Its norm shrinks like 1/(2n^2) while the image under the
index-scaling limit automorphism keeps norm 1/2, so the automorphism is
not continuous in the trace norm.
"""

import argparse

from cliffalg.locmat import FactorShape, witness_sequence
from cliffalg.scalars import Domain


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=10,
                    help="number of sequence terms (default 10)")
    ap.add_argument("--m", type=int, default=2,
                    help="matrix size per tensor factor (default 2)")
    args = ap.parse_args()
    shape = FactorShape(Domain.RATIONAL, args.m)
    pairs = witness_sequence(args.n, shape)
    width = len(str(args.n))
    print(f"{'n':>{width}}  ||b_n||        ||phi(b_n)||")
    for n, (before, after) in enumerate(pairs, start=1):
        print(f"{n:>{width}}  {str(before):<12}  {after}")
    print()
    print("||b_n|| -> 0 while ||phi(b_n)|| stays constant:",
          "discontinuous" if pairs[-1][0] < pairs[0][0] else "inconclusive")


if __name__ == "__main__":
    main()
