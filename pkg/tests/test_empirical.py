import math

import numpy as np
import pytest

from src.errors import DomainError
from src.expansion import katz_sarnak
from src.models import QuadraticCharacter, ZeroSet
from src.empirical import (
    char_average,
    char_average_main_term,
    density_from_zero_sets,
    empirical_density,
    usp_density,
    weight_total,
    zero_sum,
    zero_tail_bound,
)
from src.ratios import make_family
from src.testfn import make_testfn, make_weight


def synthetic(d: int, ordinates):
    return ZeroSet(character=QuadraticCharacter(d=d), height=50.0, ordinates=list(ordinates),
                   count_estimate=float(len(ordinates)), complete_flag=True)


def test_char_average_trivial_cases(gaussian, family_1e4):
    assert char_average(1, gaussian, family_1e4) == pytest.approx(1.0, abs=1e-12)
    assert char_average(2, gaussian, family_1e4) == 0.0
    with pytest.raises(DomainError):
        char_average(0, gaussian, family_1e4)


def test_char_average_main_terms():
    assert char_average_main_term(1) == 1.0
    assert char_average_main_term(9) == pytest.approx(0.75)
    assert char_average_main_term(3) == 0.0
    assert char_average_main_term(4) == 0.0
    assert char_average_main_term(225) == pytest.approx(0.75 * 5.0 / 6.0)


def test_char_average_approaches_main_term(gaussian, family_1e4):
    assert abs(char_average(9, gaussian, family_1e4) - 0.75) < 0.02
    assert abs(char_average(15, gaussian, family_1e4)) < 0.02


def test_weight_total(gaussian):
    fam = make_family(100.0, gaussian)
    # W* ~ (4/pi^2) X for the unit Gaussian
    assert weight_total(gaussian, fam) == pytest.approx(400.0 / math.pi ** 2, rel=0.05)
    doubled = make_weight("gaussian:2")
    assert weight_total(doubled, fam) == pytest.approx(2.0 * weight_total(gaussian, fam), rel=1e-12)


def test_zero_sum(fejer15):
    L = 5.0
    assert zero_sum(fejer15, synthetic(1, []), L) == 0.0
    gammas = [3.0, 7.5]
    expected = 2.0 * sum(float(fejer15.phi(g * L / (2 * math.pi))) for g in gammas)
    assert zero_sum(fejer15, synthetic(1, gammas), L) == pytest.approx(expected, abs=1e-15)


def test_density_is_linear_in_phi(fejer15):
    zero_sets = [synthetic(1, [2.0, 6.0]), synthetic(-3, [1.0]), synthetic(5, [4.0, 9.0, 13.0])]
    weights = np.array([1.0, 0.5, 0.25])
    base = density_from_zero_sets(fejer15, weights, zero_sets, 4.0)
    assert density_from_zero_sets(fejer15.scaled(2.0), weights, zero_sets, 4.0) == pytest.approx(2.0 * base)
    assert density_from_zero_sets(fejer15, 3.0 * weights, zero_sets, 4.0) == pytest.approx(base)


def test_density_mask_drops_zero_sets(fejer15):
    zero_sets = [synthetic(1, [2.0]), synthetic(-3, [1.0])]
    masked = density_from_zero_sets(fejer15, np.ones(2), zero_sets, 4.0, mask=np.array([True, False]))
    assert masked == pytest.approx(zero_sum(fejer15, zero_sets[0], 4.0))


@pytest.mark.parametrize("sigma", [0.8, 1.5])
def test_usp_density_is_katz_sarnak(sigma):
    phi = make_testfn("fejer", sigma)
    assert usp_density(phi) == pytest.approx(katz_sarnak(phi), abs=1e-6)


def test_zero_tail_bound_decreases_with_height(fejer15):
    bounds = [zero_tail_bound(fejer15, 5.0, T, 800) for T in (10.0, 20.0, 40.0)]
    assert bounds[0] > bounds[1] > bounds[2] > 0.0


def test_empirical_density_small_family(gaussian, zero_cache):
    fam = make_family(50.0, gaussian)
    phi = make_testfn("fejer", 1.0)
    report = empirical_density(phi, gaussian, fam, 8.0, threads=2, seed=7, resamples=10,
                               cache_root=zero_cache)
    assert report.method == "empirical"
    assert list(report.terms) == ["zeros"]
    assert np.isfinite(report.value)
    assert report.error_budget > 0.0
    assert report.diagnostics["characters"] > 50
    assert report.diagnostics["seed"] == 7
    assert report.diagnostics["incomplete_fraction"] <= 0.05

    again = empirical_density(phi, gaussian, fam, 8.0, threads=1, seed=7, resamples=10,
                              cache_root=zero_cache)
    assert again.value == pytest.approx(report.value, abs=1e-9)
    assert again.diagnostics["bootstrap_se"] == pytest.approx(report.diagnostics["bootstrap_se"], abs=1e-9)
    parts = report.diagnostics["budget_parts"]
    assert report.diagnostics["bootstrap_se"] > 0.0
    assert parts["excluded_weight"] < 1e-3 * report.diagnostics["bootstrap_se"]


def test_empirical_density_ignores_weight_scale(gaussian, zero_cache):
    fam = make_family(50.0, gaussian)
    phi = make_testfn("fejer", 1.0)
    plain = empirical_density(phi, gaussian, fam, 8.0, threads=2, seed=3, resamples=10, cache_root=zero_cache)
    scaled = empirical_density(phi, make_weight("gaussian:3"), fam, 8.0, threads=2, seed=3, resamples=10,
                               cache_root=zero_cache)
    assert scaled.value == pytest.approx(plain.value, abs=1e-12)
