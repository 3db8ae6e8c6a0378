#!/usr/bin/env python3
"""Print the positive-characteristic embedded lines that defeat axiom (3).

For every prime p and coprime a > 1 below the bound, the curve
(y^p - x^a)^p - x = 0 over GF(p) is an embedded line (its parametrization
is polynomial and bijective) whose sequence satisfies axioms (1), (2), (4)
but not (3), so it is not a coordinate line.

Usage: python3 scripts/nagata_gallery.py [--max 8] [--show-polys]
"""

import argparse

from amcurve.chain import nagata
from amcurve.numeric import is_prime


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=8, help="bound on p and a")
    ap.add_argument("--show-polys", action="store_true")
    args = ap.parse_args()

    print(f"{'p':>3} {'a':>3} {'case':>4}  {'sequence':<22} {'d_h*r_h':>9} {'r_0^2':>7}  axioms")
    for p in range(2, args.max + 1):
        if not is_prime(p):
            continue
        for a in range(2, args.max + 1):
            if a % p == 0:
                continue
            rec = nagata(p, a)
            n, r1, r2 = rec.sequence
            d2 = rec.axiom_report.dchain[1]
            flags = "".join("+" if ok else "-" for ok in rec.axiom_report.flags())
            print(
                f"{p:>3} {a:>3} {rec.case:>4}  {','.join(map(str, rec.sequence)):<22} "
                f"{d2 * r2:>9} {n * n:>7}  {flags}"
            )
            if args.show_polys:
                xt, yt = rec.param
                print(f"      f = {rec.f}")
                print(f"      g = {rec.g}")
                print(f"      x(t) = {xt}, y(t) = {yt}")


if __name__ == "__main__":
    main()
