"""Expand sz_lambda in the spz and oz bases and print the coefficient table.

The coefficients are nonnegative integers and do not change once n is at
least the length of lambda.
"""
import argparse

from symz.partition import partitions_upto
from symz.zfamilies import expand_in_basis, sz_skew


def fmt(expansion):
    items = sorted(expansion.items(), key=lambda kv: (-kv[0].weight(), kv[0].parts))
    return " + ".join(f"{c}*[{','.join(map(str, p.parts))}]" if c != 1 else f"[{','.join(map(str, p.parts))}]" for p, c in items)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--weight", type=int, default=3)
    ap.add_argument("--n", type=int, default=3)
    args = ap.parse_args()

    for lam in partitions_upto(args.weight, max_length=args.n):
        if not lam.parts:
            continue
        s = sz_skew(args.n, lam)
        for family in ("spz", "oz"):
            print(f"sz[{','.join(map(str, lam.parts))}] = {fmt(expand_in_basis(s, family, args.n))}   ({family})")


if __name__ == "__main__":
    main()
