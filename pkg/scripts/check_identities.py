#!/usr/bin/env python3
"""
Identity checks at desk scale.

Runs the exact identities the lab is built on: the reflection identity
of the g^ transform, the arithmetic contour integral against the prime
sum, the closed form of the digamma integral, and the family averages of
chi_{8d}(n). Each check prints its residual and a pass mark.
"""
import argparse
import math
import sys
import time
from pathlib import Path

# Add the project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.empirical import char_average
from src.errors import QDLError
from src.expansion import lemma41_lhs_contour, lemma43_lhs, lemma43_rhs, reflection_sides, term_prime_sum
from src.ratios import make_family
from src.testfn import make_testfn, make_weight


def report(label: str, ok: bool, detail: str) -> bool:
    print(f"{'✅' if ok else '❌'} {label}: {detail}")
    return ok


def check_plancherel(w) -> bool:
    worst = 0.0
    for z in (0.3, 0.5, 0.8):
        left, right = reflection_sides(w, z)
        worst = max(worst, abs(left - right))
    return report("reflection identity at z = 0.3, 0.5, 0.8", worst <= 1e-8, f"max |diff| = {worst:.2e}")


def check_arithmetic_contour(w) -> bool:
    phi = make_testfn("fejer", 1.5)
    fam = make_family(1e4, w)
    target = term_prime_sum(phi, fam)
    worst = 0.0
    for c_prime in (0.05, 0.1):
        worst = max(worst, abs(lemma41_lhs_contour(phi, fam.with_c_prime(c_prime)) - target))
    return report("arithmetic contour integral = prime sum (X=1e4, fejer 1.5)", worst <= 1e-6,
                  f"max |diff| = {worst:.2e}, prime sum = {target:.10f}")


def check_digamma_closed_form(w) -> bool:
    phi = make_testfn("fejer", 1.5)
    fam = make_family(1e3, w)
    diff = abs(lemma43_lhs(phi, w, fam) - lemma43_rhs(phi, fam))
    return report("digamma integral closed form (X=1e3)", diff <= 1e-8, f"|diff| = {diff:.2e}")


def check_char_average(w) -> bool:
    fam3, fam4 = make_family(1e3, w), make_family(1e4, w)
    nine = char_average(9, w, fam4)
    ok_nine = report("average of chi(9) at X=1e4", abs(nine - 0.75) <= 0.02, f"{nine:.5f} vs 0.75")
    a3, a4 = abs(char_average(3, w, fam3)), abs(char_average(3, w, fam4))
    slope = math.log(a4 / a3) / math.log(10.0) if a3 > 0 and a4 > 0 else float("nan")
    ok_slope = report("decay of |average of chi(3)| from X=1e3 to 1e4", -0.9 <= slope <= -0.6,
                      f"{a3:.2e} -> {a4:.2e}, exponent {slope:.3f}")
    return ok_nine and ok_slope


def main():
    """Main entry point for the identity checks."""
    parser = argparse.ArgumentParser(description="Check the exact identities at desk scale")
    parser.add_argument("--w", default="gaussian", help="Family weight (default: gaussian)")
    args = parser.parse_args()

    try:
        w = make_weight(args.w)
        results = []
        for check in (check_plancherel, check_arithmetic_contour, check_digamma_closed_form, check_char_average):
            start = time.perf_counter()
            results.append(check(w))
            print(f"   ({time.perf_counter() - start:.1f}s)")
    except QDLError as e:
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return 2

    passed = sum(results)
    print(f"\n{passed}/{len(results)} identity checks passed")
    return 0 if passed == len(results) else 3


if __name__ == "__main__":
    sys.exit(main())
