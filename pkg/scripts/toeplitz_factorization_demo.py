"""Banded symmetric Toeplitz determinants three ways, for growing m.

Direct Bareiss elimination, the signed rectangular sz, and the product of
two bialternants should print identical columns.
"""
import argparse
from fractions import Fraction

from symz.palintoeplitz import ZRootData, det_factorized, det_from_sz, sz_rectangle, toeplitz_det
from symz.exactpoly import format_rational


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--zroots", default="1/2,3,-2")
    ap.add_argument("--leading", default="1")
    ap.add_argument("--max-m", type=int, default=10)
    args = ap.parse_args()

    zr = ZRootData(tuple(Fraction(t) for t in args.zroots.split(",")), Fraction(args.leading))
    s = zr.symbol()
    print("symbol a_0..a_n:", ", ".join(format_rational(c) for c in s.coeffs))
    print(f"{'m':>3}  {'bareiss':>28}  {'sz rectangle':>28}  {'factorized':>28}")
    for m in range(args.max_m + 1):
        direct = toeplitz_det(s, m)
        via_sz = det_from_sz(zr, m, sz_rectangle(zr, m))
        via_fact = det_from_sz(zr, m, det_factorized(zr, m))
        flag = "" if direct == via_sz == via_fact else "  MISMATCH"
        print(f"{m:>3}  {format_rational(direct):>28}  {format_rational(via_sz):>28}  {format_rational(via_fact):>28}{flag}")


if __name__ == "__main__":
    main()
