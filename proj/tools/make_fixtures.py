#!/usr/bin/env python3
"""Writes b-file fixtures for A034947, A088748 and A005811 into data/oeis.

Values come from definitions independent of the C++ library: the Kronecker
symbol (-1/n), run lengths via itertools.groupby, and cumulative sums.
"""
import argparse
import itertools
import pathlib

import gmpy2


def paperfolding(n):
    return int(gmpy2.kronecker(-1, n))


def runs(n):
    if n == 0:
        return 0
    return sum(1 for _ in itertools.groupby(bin(n)[2:]))


def write(path, header, pairs):
    with open(path, "w") as fh:
        fh.write(header)
        for i, v in pairs:
            fh.write(f"{i} {v}\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "oeis"))
    ap.add_argument("--terms", type=int, default=10000)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    n = args.terms

    write(out / "b034947.txt", "# A034947 regenerated locally: Jacobi symbol (-1/n)\n",
          ((i, paperfolding(i)) for i in range(1, n + 1)))
    write(out / "b005811.txt", "# A005811 regenerated locally: number of runs in binary\n",
          ((i, runs(i)) for i in range(n)))
    sums = itertools.accumulate(paperfolding(i) if i else 0 for i in range(n))
    write(out / "b088748.txt", "# A088748 regenerated locally: 1 + sum_{k<=n} (-1/k)\n",
          ((i, 1 + v) for i, v in enumerate(sums)))


if __name__ == "__main__":
    main()
