#!/usr/bin/env python3
"""Tabulate weighted-cospan hom counts for small monoids.

For the trivial monoid these are Bell numbers of |A| + |B|; for a monoid
of size m they are the Bell polynomial values B_n(m).
"""

import argparse
import sys

from properads.cospan import cyclic_monoid, hom_count_weighted, max_monoid, trivial_monoid

MONOIDS = {
    "trivial": trivial_monoid,
    "cyclic2": lambda: cyclic_monoid(2),
    "cyclic3": lambda: cyclic_monoid(3),
    "max": max_monoid,
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--monoid", choices=sorted(MONOIDS), default="trivial")
    parser.add_argument("--max-size", type=int, default=4)
    args = parser.parse_args()

    monoid = MONOIDS[args.monoid]()
    n = args.max_size
    print(f"hom counts |Hom(A, B)| for the {args.monoid} monoid")
    header = "     " + "".join(f"{b:>8d}" for b in range(n + 1))
    print(header)
    for a in range(n + 1):
        row = [hom_count_weighted(a, b, monoid) if a + b <= n else None
               for b in range(n + 1)]
        cells = "".join(f"{c:>8}" if c is not None else f"{'-':>8}" for c in row)
        print(f"{a:>5d}{cells}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
