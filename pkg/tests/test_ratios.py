import math

import numpy as np
import pytest

from src.config import PHI_TRUNCATION
from src.errors import DomainError, PoleError
from src.models import FamilyParams, QuadraticCharacter, ShiftPair
from src.ratios import (
    A,
    A_alpha_diag,
    A_closed_antidiagonal,
    X_d,
    enumerate_family,
    family_average_power,
    logderiv_X,
    logderiv_avg,
    make_family,
    predict_density,
    ratios_rhs,
)
from src.ratios.prediction import DUAL_T_MAX, _dual_cutoff, _Line
from src.testfn import make_testfn

PRIMES = 10**5


@pytest.mark.parametrize("r", [0.0, 0.2, 0.1 + 3.0j, -0.1 + 0.5j])
def test_A_is_one_on_the_diagonal(r):
    assert A(r, r, PRIMES) == pytest.approx(1.0, abs=1e-13)


def test_A_conjugate_symmetry():
    alpha, gamma = 0.1 + 2.0j, 0.15 - 1.0j
    assert A(np.conj(alpha), np.conj(gamma), PRIMES) == pytest.approx(np.conj(A(alpha, gamma, PRIMES)), abs=1e-13)


def test_A_broadcasts():
    values = A(np.array([0.1, 0.2, 0.3]), 0.2, PRIMES)
    assert values.shape == (3,)
    assert values[1] == pytest.approx(1.0, abs=1e-13)


@pytest.mark.parametrize("r", [0.3, 0.1 + 0.2j, 0.05 - 1.0j])
def test_A_alpha_diag_is_the_derivative(r):
    h = 1e-5
    numeric = (A(r + h, r, PRIMES) - A(r - h, r, PRIMES)) / (2 * h)
    assert A_alpha_diag(r, PRIMES) == pytest.approx(numeric, abs=1e-6)


@pytest.mark.parametrize("r", [0.1, 0.05 + 0.5j, 0.2 - 2.0j])
def test_A_closed_form_on_the_antidiagonal(r):
    assert A_closed_antidiagonal(r) == pytest.approx(A(-r, r), abs=1e-6)


def test_A_region_is_enforced():
    with pytest.raises(DomainError):
        A(-0.3, 0.1)
    with pytest.raises(DomainError):
        A_alpha_diag(-0.26)


def test_X_d_at_center_and_functional_equation():
    for d in (5, -3):
        char = QuadraticCharacter(d=d)
        assert X_d(char, 0.5) == pytest.approx(1.0, abs=1e-14)
        s = 0.3 + 4.0j
        assert X_d(char, s) * X_d(char, 1 - s) == pytest.approx(1.0, abs=1e-12)
    assert abs(X_d(QuadraticCharacter(d=-3), 0.5 + 0.7j)) == pytest.approx(1.0, abs=1e-12)


def test_logderiv_X_matches_numeric_derivative():
    char = QuadraticCharacter(d=-7)
    r, h = 0.1 + 1.0j, 1e-5
    numeric = (X_d(char, 0.5 + r + h) - X_d(char, 0.5 + r - h)) / (2 * h * X_d(char, 0.5 + r))
    assert logderiv_X(char, r) == pytest.approx(numeric, abs=1e-7)


def test_family_average_power(gaussian, family_1e4):
    assert family_average_power(0.0, gaussian, family_1e4) == pytest.approx(1.0, abs=1e-14)
    r = np.array([0.1, 0.3 + 2.0j])
    assert family_average_power(r, gaussian, family_1e4).shape == (2,)


def test_mellin_main_term_tracks_enumeration(gaussian):
    fam = make_family(1e5, gaussian)
    exact = family_average_power(0.3, gaussian, fam, method="exact")
    main = family_average_power(0.3, gaussian, fam, method="mellin")
    assert abs(exact - main) < 1e-2 * abs(main)


def test_family_average_power_errors(gaussian, family_1e4):
    with pytest.raises(DomainError):
        family_average_power(0.6, gaussian, family_1e4)
    with pytest.raises(DomainError):
        family_average_power(0.1, gaussian, family_1e4, method="bogus")


def test_enumeration_is_symmetric_in_sign(gaussian, family_1e4):
    enumeration = enumerate_family(gaussian, family_1e4)
    d, weights = enumeration.signed()
    assert len(enumeration) == d.size
    assert np.array_equal(d[0::2], -d[1::2])
    assert np.sum(weights) == pytest.approx(enumeration.total)
    assert enumeration.average(lambda d: np.sign(d).astype(float)) == pytest.approx(0.0, abs=1e-14)


def test_ratios_rhs_diagonal(gaussian, family_1e4):
    assert ratios_rhs(ShiftPair(alpha=0.2, gamma_shift=0.2), gaussian, family_1e4) == pytest.approx(1.0, abs=1e-12)


def test_ratios_rhs_poles(gaussian, family_1e4):
    with pytest.raises(PoleError) as info:
        ratios_rhs(ShiftPair(alpha=0.1, gamma_shift=-0.1), gaussian, family_1e4)
    assert info.value.residue == 1.0
    with pytest.raises(PoleError):
        ratios_rhs(ShiftPair(alpha=0.0, gamma_shift=0.1), gaussian, family_1e4)


def test_shift_pair_validation():
    with pytest.raises(ValueError):
        ShiftPair(alpha=0.3, gamma_shift=0.1)
    assert ShiftPair(alpha=0.1, gamma_shift=0.1).r == 0.1


def test_logderiv_avg_domain(gaussian, family_1e4):
    with pytest.raises(DomainError):
        logderiv_avg(0.0, gaussian, family_1e4)
    with pytest.raises(DomainError):
        logderiv_avg(0.3, gaussian, family_1e4)
    assert np.isfinite(logderiv_avg(0.12 + 1.0j, gaussian, family_1e4))


def test_family_params_validation():
    with pytest.raises(ValueError):
        FamilyParams(X=10.0, d_cutoff=5)
    with pytest.raises(ValueError):
        FamilyParams(X=1e4, d_cutoff=5, c_prime=0.3)


def test_prediction_forms_agree(gaussian, family_1e4):
    phi = make_testfn("fejer", 0.8)
    real = predict_density(phi, gaussian, family_1e4, form="real")
    contour = predict_density(phi, gaussian, family_1e4, form="contour")
    assert set(real.terms) == {"arithmetic", "log_conductor", "digamma", "dual"}
    assert real.value == pytest.approx(contour.value, abs=1e-4 + real.error_budget + contour.error_budget)


def test_prediction_rejects_unknown_form(gaussian, family_1e4):
    with pytest.raises(DomainError):
        predict_density(make_testfn("fejer", 0.8), gaussian, family_1e4, form="polar")


def test_dual_cutoff_follows_the_integrated_kernel(fejer15, family_1e4):
    line = _Line(fejer15, family_1e4, "real")
    fading = lambda r: np.exp(-np.abs(np.imag(r)))
    flat = lambda r: np.ones(np.shape(r))

    u_fading, tail_fading = _dual_cutoff(fading, fading, line)
    assert u_fading < DUAL_T_MAX * line.L / (2 * math.pi)
    assert tail_fading * fejer15.envelope(0.0) < PHI_TRUNCATION

    # a kernel that never decays is cut where the smooth part is, with its full size charged
    u_flat, tail_flat = _dual_cutoff(flat, fading, line)
    assert u_flat == u_fading
    assert tail_flat == 1.0


def test_exact_average_is_charged_past_the_dual_cutoff(gaussian, family_1e4):
    phi = make_testfn("fejer", 0.8)
    exact = predict_density(phi, gaussian, family_1e4, method="exact")
    mellin = predict_density(phi, gaussian, family_1e4, method="mellin")
    charged = exact.diagnostics["budget_parts"]["dual_truncation"]
    assert charged > mellin.diagnostics["budget_parts"]["dual_truncation"]
    assert charged <= exact.error_budget


@pytest.mark.parametrize("r", [0.2, 0.2 + 5.0j])
def test_exact_average_remainder_stays_bounded_across_X(gaussian, r):
    for X in (1e3, 1e4, 1e5):
        fam = make_family(X, gaussian)
        exact = family_average_power(r, gaussian, fam, method="exact")
        main = family_average_power(r, gaussian, fam, method="mellin")
        assert abs(exact - main) * X ** (0.5 - np.real(r) - 0.1) <= 10.0
