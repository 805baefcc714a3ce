import math

import numpy as np
import pytest

from src.arith import primes_upto
from src.errors import ConfigError, ResourceError, UnsupportedKindError
from src.expansion import (
    expansion_density,
    gamma_integrand,
    glog_sides,
    h2_direct,
    h2_mellin,
    j_asymptotic,
    j_bracket,
    katz_sarnak,
    lemma41_lhs_contour,
    lemma43_lhs,
    lemma43_rhs,
    reflection_sides,
    term_gamma_integral,
    term_main,
    term_prime_sum,
    term_weight_log,
)
from src.models import FamilyParams
from src.ratios import make_family
from src.testfn import Bump2TestFunction, make_testfn


def test_main_and_katz_sarnak_for_fejer(fejer15):
    assert term_main(fejer15) == pytest.approx(13.0 / 12.0, abs=1e-14)
    assert katz_sarnak(fejer15) == pytest.approx(1.0 / 3.0, abs=1e-14)


@pytest.mark.parametrize("sigma", [0.5, 1.0, 1.5, 2.5])
def test_katz_sarnak_is_main_minus_half_phi0(sigma):
    phi = make_testfn("fejer", sigma)
    assert katz_sarnak(phi) == pytest.approx(term_main(phi) - 0.5 * phi.phi0, abs=1e-13)


def test_weight_log_decays_like_one_over_L(fejer15, gaussian):
    small, large = make_family(1e4, gaussian), make_family(1e8, gaussian)
    ratio = term_weight_log(fejer15, gaussian, small) / term_weight_log(fejer15, gaussian, large)
    assert ratio == pytest.approx(large.L / small.L, rel=1e-12)


def test_j_bracket_value(gaussian):
    assert j_bracket(gaussian) == pytest.approx(-2.7803611164617, abs=1e-9)


def test_j_asymptotic_vanishes_below_the_transition(gaussian, family_1e4):
    assert j_asymptotic(make_testfn("fejer", 0.8), gaussian, family_1e4) == 0.0
    assert j_asymptotic(make_testfn("fejer", 1.5), gaussian, family_1e4) < 0.0


def test_prime_sum_is_empty_for_small_support(gaussian):
    fam = make_family(1e3, gaussian)
    assert term_prime_sum(make_testfn("fejer", 0.5), fam) == 0.0


def test_prime_sum_matches_direct_loop(fejer15, family_1e4):
    L = family_1e4.L
    expected = 0.0
    for p in primes_upto(200).tolist()[1:]:
        j = 1
        while 2 * j * math.log(p) / L < fejer15.sigma:
            u = 2 * j * math.log(p) / L
            expected += math.log(p) / p ** j * p / (p + 1) * float(fejer15.phi_hat(u))
            j += 1
    assert term_prime_sum(fejer15, family_1e4) == pytest.approx(-2.0 / L * expected, abs=1e-13)


def test_prime_sum_beyond_the_sieve(fejer15):
    fam = FamilyParams(X=1e32, d_cutoff=1)
    with pytest.raises(ResourceError):
        term_prime_sum(fejer15, fam)
    # for large L the sum tends to -int_0^sigma phi^ = -phi(0)/2
    value = term_prime_sum(fejer15, fam, formula_only=True)
    assert abs(value + 0.5 * fejer15.phi0) < 0.1


def test_gamma_integrand_is_finite_near_zero(fejer15, family_1e4):
    assert np.isfinite(gamma_integrand(fejer15, family_1e4, 1e-6))


def test_gamma_integral_decreases_with_sigma(family_1e4):
    values = [term_gamma_integral(make_testfn("fejer", s), family_1e4) for s in (0.5, 1.0, 1.5)]
    assert values[0] > values[1] > values[2] > 0.0


def test_digamma_integral_closed_form(fejer15, gaussian, family_1e4):
    assert lemma43_lhs(fejer15, gaussian, family_1e4) == pytest.approx(lemma43_rhs(fejer15, family_1e4), abs=1e-6)


def test_expansion_density_terms(fejer15, gaussian, family_1e4):
    report = expansion_density(fejer15, gaussian, family_1e4, j_mode="asym")
    assert report.method == "expansion"
    assert set(report.terms) == {"main", "weight_log", "gamma_integral", "prime_sum", "J"}
    assert report.terms["J"] == pytest.approx(j_asymptotic(fejer15, gaussian, family_1e4))
    assert report.value == pytest.approx(math.fsum(report.terms.values()), abs=1e-15)
    assert report.params["j_mode"] == "asymptotic"
    assert report.diagnostics["katz_sarnak"] == pytest.approx(1.0 / 3.0)


def test_expansion_density_rejects_unknown_mode(fejer15, gaussian, family_1e4):
    with pytest.raises(ConfigError):
        expansion_density(fejer15, gaussian, family_1e4, j_mode="fast")


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
def test_h2_direct_matches_mellin(gaussian, x):
    direct = h2_direct(x, gaussian)
    assert h2_mellin(x, gaussian, abscissa=-1.25) == pytest.approx(direct, abs=1e-6)
    assert h2_mellin(x, gaussian, abscissa=-0.5) == pytest.approx(direct, abs=1e-6)


def test_glog_identity(gaussian):
    left, right = glog_sides(gaussian)
    assert left == pytest.approx(right, abs=1e-8)


def test_reflection_identity(gaussian):
    left, right = reflection_sides(gaussian, 0.5)
    assert abs(left - right) < 1e-7


def test_contour_identities_need_an_entire_extension(family_1e4):
    with pytest.raises(UnsupportedKindError):
        lemma41_lhs_contour(Bump2TestFunction(0.8), family_1e4)
