"""Degree d of k -> chi*_M(k z) and its h*-vector, compared with dim P.

For the Boolean matroid d = dim P; for other matroids d is found
empirically and can be smaller.
"""
import argparse

from matbrion.euler import NonPolynomialSequence, hstar
from matbrion.fixtures import fixture_pairs
from matbrion.polytope import dimension


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    print(f"{'matroid':<20}{'set function':<20}{'dim P':>6}{'d':>4}  h*")
    for mname, m, zname, z in fixture_pairs(args.max_n):
        if m.loops:
            continue
        try:
            h = hstar(m, z)
        except NonPolynomialSequence:
            print(f"{mname:<20}{zname:<20}{dimension(z):>6}{'?':>4}  (kmax too small)")
            continue
        print(f"{mname:<20}{zname:<20}{dimension(z):>6}{h.d:>4}  {h.entries}")


if __name__ == "__main__":
    main()
