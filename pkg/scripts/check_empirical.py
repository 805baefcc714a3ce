#!/usr/bin/env python3
"""
Empirical density against the ratios prediction.

Computes the zeros of every character of the family at X (cached), forms
the empirical 1-level density and compares it with the prediction in
units of the bootstrap standard error. At desk scale this is a
statistical check, not a test of the X -> infinity limit.
"""
import argparse
import sys
import time
from pathlib import Path

# Add the project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config import THREADS
from src.errors import QDLError
from src.empirical import empirical_density
from src.ratios import make_family, predict_density
from src.testfn import make_weight, parse_testfn


def main():
    """Main entry point for the empirical check."""
    parser = argparse.ArgumentParser(description="Compare the empirical density with the prediction")
    parser.add_argument("--X", type=float, default=2000.0, help="Family scale (default: 2000)")
    parser.add_argument("--T", type=float, default=40.0, help="Zero height (default: 40)")
    parser.add_argument("--phi", default="bump2:0.8", help="Test function (default: bump2:0.8)")
    parser.add_argument("--threads", type=int, default=THREADS, help="Worker threads")
    parser.add_argument("--sigmas", type=float, default=3.0, help="Allowed gap in standard errors")
    args = parser.parse_args()

    start = time.perf_counter()
    try:
        phi, w = parse_testfn(args.phi), make_weight("gaussian")
        fam = make_family(args.X, w)
        empirical = empirical_density(phi, w, fam, args.T, threads=args.threads)
        prediction = predict_density(phi, w, fam)
    except QDLError as e:
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return 2

    se = empirical.diagnostics["bootstrap_se"]
    gap = abs(empirical.value - prediction.value)
    complete = 1.0 - empirical.diagnostics["incomplete_fraction"]
    print(f"empirical  {empirical.value:.6f} +- {se:.2e} (tail budget {empirical.error_budget:.1e})")
    print(f"prediction {prediction.value:.6f}")
    print(f"characters {empirical.diagnostics['characters']}, zeros {empirical.diagnostics['zeros_total']}")

    ok_gap = gap <= args.sigmas * se
    ok_complete = complete >= 0.99
    print(f"{'✅' if ok_gap else '❌'} |empirical - prediction| = {gap:.2e} "
          f"({gap / se if se > 0 else float('inf'):.2f} standard errors)")
    print(f"{'✅' if ok_complete else '❌'} complete zero sets: {complete:.1%}")
    print(f"\nFinished in {time.perf_counter() - start:.0f}s")
    return 0 if ok_gap and ok_complete else 3


if __name__ == "__main__":
    sys.exit(main())
