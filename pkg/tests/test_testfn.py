import math

import numpy as np
import pytest
from scipy.integrate import quad

from src.errors import ConfigError, DomainError
from src.config import PHI_STRIP_HALF_WIDTH
from src.special import mellin_at
from src.testfn import (
    Bump2TestFunction,
    FejerTestFunction,
    WeightFunction,
    eval_phi_complex,
    make_testfn,
    make_weight,
    parse_testfn,
)


def test_fejer_closed_forms(fejer15):
    assert fejer15.phi_hat0 == 1.0
    assert fejer15.phi0 == pytest.approx(1.5)
    assert float(fejer15.phi_hat(1.0)) == pytest.approx(1.0 / 3.0)
    assert float(fejer15.phi_hat(2.0)) == 0.0
    assert fejer15.integral_phi_hat(0.0, 1.0) == pytest.approx(2.0 / 3.0)
    assert fejer15.integral_phi_hat(1.0, 5.0) == pytest.approx(1.0 / 12.0)


def test_fejer_transform_pair(fejer15):
    # phi(x) = 2 int_0^sigma phi^(u) cos(2 pi u x) du
    for x in (0.0, 0.3, 1.7):
        value, _ = quad(lambda u: float(fejer15.phi_hat(u)) * math.cos(2 * math.pi * u * x), 0.0, 1.5)
        assert float(fejer15.phi(x)) == pytest.approx(2.0 * value, abs=1e-10)


def test_fejer_entire_extension_agrees_on_real_line(fejer15):
    x = np.array([0.2, 1.1, 4.0])
    assert np.allclose(fejer15.phi_complex(x).real, fejer15.phi(x), atol=1e-14)


def test_envelope_bounds_phi(fejer15):
    x = np.linspace(0.0, 50.0, 2001)
    assert np.all(np.abs(fejer15.phi(x)) <= fejer15.envelope(x) + 1e-15)


def test_bump2_normalization_and_support():
    phi = Bump2TestFunction(0.8)
    assert phi.phi_hat0 == pytest.approx(1.0, abs=1e-10)
    assert float(phi.phi_hat(0.8)) == 0.0
    assert float(phi.phi_hat(0.5)) > 0.0
    assert np.all(phi.phi(np.linspace(0.0, 10.0, 101)) >= 0.0)


@pytest.mark.parametrize("sigma", [0.8, 1.5])
def test_bump2_integral_of_phi_hat_is_phi0(sigma):
    phi = Bump2TestFunction(sigma)
    assert 2.0 * phi.integral_phi_hat(0.0, sigma) == pytest.approx(phi.phi0, abs=1e-6)


def test_scaled_is_linear(fejer15):
    tripled = fejer15.scaled(3.0)
    x = np.array([0.0, 0.4, 2.5])
    assert np.allclose(tripled.phi(x), 3.0 * fejer15.phi(x))
    assert tripled.sigma == fejer15.sigma


def test_parse_testfn():
    phi = parse_testfn("bump2:0.8")
    assert isinstance(phi, Bump2TestFunction)
    assert phi.sigma == 0.8
    assert parse_testfn("fejer:1.5").spec == "fejer:1.5"
    with pytest.raises(ConfigError):
        parse_testfn("fejer")
    with pytest.raises(ConfigError):
        parse_testfn("fejer:wide")
    with pytest.raises(ConfigError):
        make_testfn("gauss", 1.0)
    with pytest.raises(ConfigError):
        FejerTestFunction(0.0)


def test_eval_phi_complex_strip(fejer15):
    assert eval_phi_complex(fejer15, 0.5 + 1j) == pytest.approx(complex(fejer15.phi_complex(0.5 + 1j)))
    with pytest.raises(DomainError):
        eval_phi_complex(fejer15, 1j * (PHI_STRIP_HALF_WIDTH + 1.0))


def test_fejer_at_i_is_sinh_squared():
    # sigma = 1: phi(i) = (sinh(pi)/pi)^2
    phi = FejerTestFunction(1.0)
    assert complex(phi.phi_complex(1j)).real == pytest.approx((math.sinh(math.pi) / math.pi) ** 2)


def test_weight_transforms(gaussian):
    assert gaussian.w_hat0 == 1.0
    assert gaussian.mellin(1.0) == pytest.approx(0.5)
    log_moment, _ = quad(lambda x: math.exp(-math.pi * x * x) * math.log(x), 0.0, np.inf)
    assert gaussian.log_moment == pytest.approx(log_moment, abs=1e-10)
    assert gaussian.mellin_logderiv_at_1 == pytest.approx(-1.5541199559354118, abs=1e-12)


def test_weight_g_is_w_hat_at_quadratic_argument(gaussian):
    y = np.array([0.0, 0.05, 0.1, 0.2])
    assert np.allclose(gaussian.g(y), gaussian.w_hat(4 * math.pi * math.e * y ** 2), rtol=1e-12)


def test_weight_mellin_g_matches_quadrature(gaussian):
    value = mellin_at(lambda x: float(gaussian.g(x)), 1.5, strip=(0.0, math.inf))
    assert value == pytest.approx(gaussian.mellin_g(1.5), abs=1e-9)


def test_weight_cutoff(gaussian):
    cutoff = gaussian.d_cutoff(1000.0)
    assert float(gaussian.w(cutoff / 1000.0)) >= 1e-16 * 0.99
    assert float(gaussian.w((cutoff + 10) / 1000.0)) < 1e-16


def test_make_weight():
    assert make_weight("gaussian:2").scale == 2.0
    assert make_weight("gaussian:2").spec == "gaussian:2"
    with pytest.raises(ConfigError):
        make_weight("cauchy")
    with pytest.raises(ConfigError):
        WeightFunction("gaussian", -1.0)


def test_bump2_support_edge():
    phi = Bump2TestFunction(1.2)
    assert float(phi.phi_hat(1.2 * (1 + 1e-6))) == 0.0
    # the convolution is of size exp(-100) here; closer to the edge it underflows
    assert float(phi.phi_hat(1.2 * (1 - 1e-2))) > 0.0


def test_bump2_phi_decays_faster_than_a_power():
    phi = Bump2TestFunction(1.5)
    x = np.linspace(0.0, 100.0, 2001)
    scaled = np.abs(phi.phi(x)) * (1.0 + x ** 2) ** 5
    assert np.all(np.isfinite(scaled))
    assert scaled[x >= 90.0].max() < 1e-2 * scaled.max()
