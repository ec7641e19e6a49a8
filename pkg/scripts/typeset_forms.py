#!/usr/bin/env python3
"""Compare the corrected identities with their commonly typeset variants.

Three identities circulate with a small slip: the upper limit of the second
sum in the Miki-type Pan-Sun identity, the index order on one side of the
Woodcock symmetry, and a stray gamma factor in the gamma extension of Miki's
identity.  For each, this prints the difference of the corrected form (which
should vanish) next to the difference of the variant (which does not).
"""
from __future__ import annotations

import argparse
from fractions import Fraction

import mpmath

from bernident.identities import verify_gamma_miki, verify_pan_sun_poly, verify_woodcock


def show(label, good, bad):
    print(f"{label:34s} corrected: {'ok' if good.passed else 'FAIL':4s}  variant diff: {bad.difference}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bits", type=int, default=256)
    args = ap.parse_args()

    for n in range(2, 7):
        show(f"pan-sun miki-type n={n}",
             verify_pan_sun_poly("miki-type", n),
             verify_pan_sun_poly("miki-type", n, literal=True))
    for m, n in [(1, 3), (2, 2), (2, 4), (3, 5), (4, 2)]:
        show(f"woodcock m={m} n={n}", verify_woodcock(m, n), verify_woodcock(m, n, literal=True))
    for p in (Fraction(1, 2), Fraction(1, 3), Fraction(5, 2)):
        for n in (2, 4, 8):
            good = verify_gamma_miki(p, n, args.bits)
            bad = verify_gamma_miki(p, n, args.bits, literal=True)
            rel = mpmath.nstr(bad.detail["relative_difference"], 4)
            print(f"{'gamma-miki p=' + str(p) + ' n=' + str(n):34s} corrected: "
                  f"{'ok' if good.passed else 'FAIL':4s}  variant relative diff: {rel}")


if __name__ == "__main__":
    main()
