#!/usr/bin/env python3
"""
Asymptotic checks over a range of X.

Residuals that only vanish as X grows are rescaled by their expected
size and required to stay bounded across X: the Mellin main term of the
|d|^{-r} average, the asymptotic form of J(X), the agreement of the
ratios prediction with the explicit expansion, and the Katz-Sarnak
limit at X = 1e32.
"""
import argparse
import math
import sys
import time
from pathlib import Path
from typing import List

# Add the project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.errors import QDLError
from src.expansion import expansion_density, j_asymptotic, j_exact, katz_sarnak, term_prime_sum
from src.models import FamilyParams
from src.ratios import family_average_power, make_family, predict_density
from src.testfn import make_testfn, make_weight

SPREAD = 3.0
SCALED_TOL = 10.0


def report(label: str, ok: bool, detail: str) -> bool:
    print(f"{'✅' if ok else '❌'} {label}: {detail}")
    return ok


def spread(values: List[float]) -> float:
    """Ratio of the largest to the smallest value; inf if any is zero."""
    low = min(values)
    return max(values) / low if low > 0 else math.inf


def check_power_average(w) -> bool:
    ok = True
    for r in (0.2, 0.2 + 5.0j):
        scaled = []
        for X in (1e3, 1e4, 1e5):
            fam = make_family(X, w)
            diff = abs(family_average_power(r, w, fam, "exact") - family_average_power(r, w, fam, "mellin"))
            scaled.append(diff * X ** (0.5 - r.real - 0.1))
        bounded = max(scaled) <= SCALED_TOL and scaled[-1] <= SPREAD * max(scaled[:-1])
        ok &= report(f"|d|^-r average, r={r}", bounded, ", ".join(f"{s:.3g}" for s in scaled))
    return ok


def check_j_asymptotics(w) -> bool:
    phi = make_testfn("fejer", 1.5)
    scaled = []
    for X in (1e4, 1e6, 1e8):
        fam = make_family(X, w)
        scaled.append(abs(j_exact(phi, w, fam) - j_asymptotic(phi, w, fam)) * fam.L ** 2)
    return report("J(X) - asymptotic form, scaled by L^2", spread(scaled) <= SPREAD,
                  ", ".join(f"{s:.4g}" for s in scaled))


def check_prediction_vs_expansion(w) -> bool:
    ok = True
    for spec in ("fejer:0.8", "fejer:1.5", "bump2:0.8"):
        kind, _, sigma = spec.partition(":")
        phi = make_testfn(kind, float(sigma))
        scaled = []
        for X in (1e3, 1e4, 1e5, 1e6):
            fam = make_family(X, w)
            gap = abs(predict_density(phi, w, fam).value - expansion_density(phi, w, fam).value)
            scaled.append(gap * fam.L ** 2)
        ok &= report(f"prediction - expansion scaled by L^2, {spec}", spread(scaled) <= SPREAD,
                     ", ".join(f"{s:.4g}" for s in scaled))
    return ok


def check_katz_sarnak(w) -> bool:
    fam = FamilyParams(X=1e32, d_cutoff=w.d_cutoff(1e32))
    ok = True
    for sigma in (0.8, 1.5, 2.5):
        phi = make_testfn("fejer", sigma)
        density = expansion_density(phi, w, fam, formula_only=True).value
        limit = katz_sarnak(phi)
        ok &= report(f"X=1e32 expansion vs Katz-Sarnak, sigma={sigma}", abs(density - limit) <= 1e-2,
                     f"{density:.6f} vs {limit:.6f}")
        prime_sum = term_prime_sum(phi, fam, formula_only=True)
        ok &= report(f"X=1e32 prime sum vs -phi(0)/2, sigma={sigma}", abs(prime_sum + 0.5 * phi.phi0) <= 1e-2,
                     f"{prime_sum:.6f} vs {-0.5 * phi.phi0:.6f}")
    return ok


CHECKS = {
    "power-average": check_power_average,
    "j": check_j_asymptotics,
    "agreement": check_prediction_vs_expansion,
    "katz-sarnak": check_katz_sarnak,
}


def main():
    """Main entry point for the asymptotic checks."""
    parser = argparse.ArgumentParser(description="Check asymptotic identities across X")
    parser.add_argument("--only", choices=sorted(CHECKS), help="Run a single check")
    parser.add_argument("--w", default="gaussian", help="Family weight (default: gaussian)")
    args = parser.parse_args()

    names = [args.only] if args.only else list(CHECKS)
    try:
        w = make_weight(args.w)
        results = []
        for name in names:
            start = time.perf_counter()
            results.append(CHECKS[name](w))
            print(f"   ({time.perf_counter() - start:.1f}s)")
    except QDLError as e:
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return 2

    passed = sum(results)
    print(f"\n{passed}/{len(results)} asymptotic checks passed")
    return 0 if passed == len(results) else 3


if __name__ == "__main__":
    sys.exit(main())
