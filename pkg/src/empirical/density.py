"""
Empirical 1-level density

This module assembles D*(phi; X) from computed zeros:

    (1/W*) sum* w(d/X) sum_{|gamma| <= T} phi(gamma L / 2 pi)

over the enumerated family, each positive ordinate counted twice. Zero
sums are truncated at height T; the part of phi beyond T is bounded by
phi's decay envelope against the smooth zero density. Characters whose
zero set is incomplete are left out and counted, and the statistical
spread is estimated by a seeded bootstrap over characters.
"""
import logging
import math
import time
from typing import Optional

import numpy as np
from scipy.integrate import quad

from src.config import (
    BOOTSTRAP_RESAMPLES,
    DEFAULT_SEED,
    EMPIRICAL_WEIGHT_CUTOFF,
    INCOMPLETE_FRACTION_MAX,
    OSCILLATORY_U_MAX,
    PHI_TRUNCATION,
    THREADS,
)
from src.errors import DataQualityError
from src.expansion import katz_sarnak
from src.models import DensityReport, FamilyParams, ZeroSet
from src.ratios import enumerate_family
from src.special import panel_nodes
from src.testfn import TestFunction, WeightFunction
from src.zeros import find_zeros_many
from src.zeros.finder import COUNT_SLACK

logger = logging.getLogger(__name__)

QUAD_LIMIT = 200


def zero_sum(phi: TestFunction, zero_set: ZeroSet, L: float) -> float:
    """sum over +-gamma of phi(gamma L / 2 pi)."""
    if not zero_set.ordinates:
        return 0.0
    x = np.asarray(zero_set.ordinates) * L / (2.0 * math.pi)
    return 2.0 * float(np.sum(np.real(phi.phi(x))))


def zero_tail_bound(phi: TestFunction, L: float, T: float, conductor: int) -> float:
    """
    Bound for the zeros above T of one character of conductor at most `conductor`.

    Integrates phi's envelope against dN = (1/2 pi) log(q t / 2 pi) dt for both
    signs and adds COUNT_SLACK zeros at the cutoff.
    """
    scale = L / (2.0 * math.pi)
    x_start = T * scale
    x_end = max(x_start, phi.support_end(PHI_TRUNCATION))

    def density(x: float) -> float:
        return float(phi.envelope(x)) * max(math.log(conductor * x / (2.0 * math.pi * scale)), 1.0) / (2.0 * math.pi)

    head = 0.0
    if x_end > x_start:
        head, _ = quad(density, x_start, x_end, limit=QUAD_LIMIT)
    rest = phi.envelope_integral(x_end) * max(math.log(conductor * x_end / (2.0 * math.pi * scale)), 1.0) / (2.0 * math.pi)
    return 2.0 * ((head + rest) / scale + COUNT_SLACK * float(phi.envelope(x_start)))


def usp_density(phi: TestFunction) -> float:
    """
    Symplectic random-matrix density int phi(x) (1 - sin(2 pi x)/(2 pi x)) dx.

    Equals katz_sarnak(phi); integrated on the real line as a cross-check.
    """
    x_max = min(phi.support_end(PHI_TRUNCATION), OSCILLATORY_U_MAX)
    nodes, weights = panel_nodes(0.0, x_max, 0.25)
    body = np.real(phi.phi(nodes)) * (1.0 - np.sinc(2.0 * nodes))
    tail = phi.tail_integral(lambda u: 1.0 - np.sinc(2.0 * u), x_max).real
    return 2.0 * (float(np.dot(weights, body)) + tail)


def _bootstrap_se(weights: np.ndarray, sums: np.ndarray, resamples: int, seed: int) -> float:
    if weights.size < 2 or resamples < 2:
        return 0.0
    rng = np.random.default_rng(seed)
    estimates = np.empty(resamples)
    for k in range(resamples):
        idx = rng.integers(0, weights.size, weights.size)
        estimates[k] = np.dot(weights[idx], sums[idx]) / np.sum(weights[idx])
    return float(np.std(estimates, ddof=1))


def empirical_density(
    phi: TestFunction,
    w: WeightFunction,
    fam: FamilyParams,
    T: float,
    threads: int = THREADS,
    seed: int = DEFAULT_SEED,
    resamples: int = BOOTSTRAP_RESAMPLES,
    use_cache: bool = True,
    cache_root=None,
) -> DensityReport:
    """
    Empirical 1-level density from zeros up to height T.

    Args:
        phi: Test function
        w: Family weight
        fam: Family scale
        T: Zero height, at most T_MAX
        threads: Workers for the zero scans
        seed: Seed of the bootstrap
        resamples: Bootstrap resamples
        use_cache: Read and write the zero cache

    Returns:
        DensityReport with the single term "zeros"; the error budget is the
        truncation tail plus the share of weight left out

    Raises:
        DataQualityError: If more than INCOMPLETE_FRACTION_MAX of the zero sets are incomplete
    """
    start = time.perf_counter()
    enumeration = enumerate_family(w, fam)
    d, weights = enumeration.signed()
    keep = weights >= EMPIRICAL_WEIGHT_CUTOFF * float(w.w(0.0))
    excluded_share = float(np.sum(weights[~keep])) / enumeration.total
    logger.info(
        f"Empirical density over {int(np.sum(keep))} of {d.size} characters "
        f"(excluded weight share {excluded_share:.1e}), T={T}"
    )

    zero_sets = find_zeros_many(d[keep].tolist(), T, threads=threads, use_cache=use_cache, cache_root=cache_root)
    complete = np.array([z.complete_flag for z in zero_sets], dtype=bool)
    incomplete_fraction = 1.0 - float(np.mean(complete)) if complete.size else 0.0
    if incomplete_fraction > INCOMPLETE_FRACTION_MAX:
        raise DataQualityError(
            f"{np.sum(~complete)} of {complete.size} zero sets incomplete "
            f"({incomplete_fraction:.1%} > {INCOMPLETE_FRACTION_MAX:.0%})"
        )

    used_weights = weights[keep][complete]
    sums = np.array([zero_sum(phi, z, fam.L) for z, ok in zip(zero_sets, complete) if ok])
    value = float(np.dot(used_weights, sums) / np.sum(used_weights))

    tail = zero_tail_bound(phi, fam.L, T, 8 * int(np.max(np.abs(d[keep]))))
    excluded = excluded_share * (float(np.max(np.abs(sums))) + tail + abs(value))
    se = _bootstrap_se(used_weights, sums, resamples, seed)
    if excluded > se:
        logger.warning(f"Excluded weight bound {excluded:.2e} exceeds the bootstrap error {se:.2e}")
    elapsed = time.perf_counter() - start
    logger.info(f"empirical_density X={fam.X:.3g} {phi.spec}: {value:.6f} +- {se:.2e} (bootstrap) in {elapsed:.1f}s")
    return DensityReport.from_terms(
        "empirical",
        {"zeros": value},
        error_budget=tail + excluded,
        params={
            "X": fam.X, "L": fam.L, "w": w.spec, "phi": phi.spec, "sigma": phi.sigma, "T": T,
            "d_cutoff": fam.d_cutoff, "weight_cutoff": EMPIRICAL_WEIGHT_CUTOFF,
        },
        diagnostics={
            "characters": int(complete.size),
            "incomplete": int(np.sum(~complete)),
            "incomplete_fraction": incomplete_fraction,
            "zeros_total": int(sum(len(z.ordinates) for z in zero_sets)),
            "excluded_weight_share": excluded_share,
            "budget_parts": {"tail": tail, "excluded_weight": excluded},
            "bootstrap_se": se,
            "bootstrap_resamples": resamples,
            "seed": seed,
            "katz_sarnak": katz_sarnak(phi),
            "usp_density": usp_density(phi),
            "wall_time": elapsed,
        },
    )


def density_from_zero_sets(phi: TestFunction, weights: np.ndarray, zero_sets, L: float,
                           mask: Optional[np.ndarray] = None) -> float:
    """Weighted average of the zero sums of precomputed zero sets."""
    weights = np.asarray(weights, dtype=float)
    if mask is not None:
        weights = weights[mask]
        zero_sets = [z for z, ok in zip(zero_sets, mask) if ok]
    sums = np.array([zero_sum(phi, z, L) for z in zero_sets])
    return float(np.dot(weights, sums) / np.sum(weights))
