"""Sweep the closed-form certification boundaries over parameter grids.

For q = t^d1 (Y - 1)^d2 with theta = 1 + t^g the prefix lemma certifies
iff g > (L - d1)/d2; for the pair t^d11 (Y-1)^d2, t^d12 (Y-1)^d2 with
L = (d11 + d12) d2 the common-curve certificate certifies iff
g > (L - min(d11, d12))/d2. Prints one row per family and the number of
grid points where the certifier disagrees with the formula (should be 0).
"""

import argparse
import itertools
import time
from fractions import Fraction

from puiseux_cert import BivariateQuery, Verdict, lemma_prefix_certificate, poly_parse, proposition_common_curve
from puiseux_cert.puiseux import PuiseuxPoly

NAMES = ["x1", "x2"]


def theta(g: Fraction) -> PuiseuxPoly:
    return PuiseuxPoly(0, [(0, 1), (g, 1)])


def lemma_grid(max_d: int, den: int) -> tuple[int, int]:
    points = mismatches = 0
    for d1, d2 in itertools.product(range(1, max_d + 1), repeat=2):
        q = poly_parse(f"x1^{d1}*(x2 - 1)^{d2}", NAMES)
        for L in range(d1, d1 + 7):
            for k in range(1, den * (L + 1) + 1):
                g = Fraction(k, den)
                cert = lemma_prefix_certificate(BivariateQuery((q,), (0, 1), theta(g), L))
                points += 1
                mismatches += (cert.verdict is Verdict.CERTIFIED) != (g > Fraction(L - d1, d2))
    return points, mismatches


def pair_grid(max_d: int, den: int) -> tuple[int, int]:
    points = mismatches = 0
    for d11, d12, d2 in itertools.product(range(1, max_d + 1), repeat=3):
        f1 = poly_parse(f"x1^{d11}*(x2 - 1)^{d2}", NAMES)
        f2 = poly_parse(f"x1^{d12}*(x2 - 1)^{d2}", NAMES)
        L = (d11 + d12) * d2
        for k in range(1, den * (L + 1) + 1):
            g = Fraction(k, den)
            cert = proposition_common_curve(BivariateQuery((f1, f2), (0, 1), theta(g), L))
            points += 1
            mismatches += (cert.verdict is Verdict.CERTIFIED) != (g > Fraction(L - min(d11, d12), d2))
    return points, mismatches


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--max-d", type=int, default=4)
    parser.add_argument("--den", type=int, default=6, help="gamma grid is k/den")
    args = parser.parse_args()
    for label, fn, dmax in (("lemma", lemma_grid, args.max_d), ("pair", pair_grid, min(args.max_d, 3))):
        start = time.perf_counter()
        points, bad = fn(dmax, args.den)
        print(f"{label:6s} points={points:6d} mismatches={bad} ({time.perf_counter() - start:.1f}s)")


if __name__ == "__main__":
    main()
