import math

import numpy as np
import pytest
from scipy.special import gamma as gamma_fn

from src.arith import chebyshev_theta, primes_upto
from src.errors import DomainError, PoleError
from src.special import (
    EULER_GAMMA,
    digamma,
    fourier_at,
    gamma_ratio,
    mellin_at,
    mellin_on_line,
    panel_nodes,
    zeta,
    zeta_derivative,
    zeta_logderiv,
    zeta_prime_over_zeta_at_2,
)

# gamma + log(2 pi) - 12 log(Glaisher's constant)
ZETA_LOGDERIV_2 = -0.5699609930945334


def test_zeta_special_values():
    assert zeta(2.0) == pytest.approx(math.pi ** 2 / 6, abs=1e-13)
    assert zeta(4.0) == pytest.approx(math.pi ** 4 / 90, abs=1e-13)
    assert zeta(0.0) == pytest.approx(-0.5, abs=1e-13)
    assert zeta(-1.0) == pytest.approx(-1.0 / 12.0, abs=1e-12)


def test_zeta_first_zero():
    assert abs(zeta(0.5 + 14.134725141734693j)) < 1e-9


def test_zeta_vectorized_shape():
    s = np.array([[2.0, 3.0], [0.5 + 10j, -2.5]])
    values = zeta(s)
    assert values.shape == s.shape
    assert values[0, 0] == pytest.approx(math.pi ** 2 / 6, abs=1e-13)


def test_zeta_pole_carries_laurent_data():
    with pytest.raises(PoleError) as info:
        zeta(1.0)
    assert info.value.residue == 1.0
    assert info.value.constant == pytest.approx(EULER_GAMMA)


def test_zeta_derivative_at_two():
    assert zeta_derivative(2.0) == pytest.approx(-0.9375482543158437, abs=1e-12)
    assert zeta_prime_over_zeta_at_2() == pytest.approx(ZETA_LOGDERIV_2, abs=1e-10)


def test_zeta_logderiv_domain():
    with pytest.raises(DomainError):
        zeta_logderiv(0.4)


def test_digamma_values():
    assert digamma(1.0) == pytest.approx(-EULER_GAMMA, abs=1e-14)
    assert digamma(0.5) == pytest.approx(-EULER_GAMMA - 2 * math.log(2.0), abs=1e-14)
    assert digamma(0.25) + digamma(0.75) == pytest.approx(-2 * EULER_GAMMA - 6 * math.log(2.0), abs=1e-12)
    with pytest.raises(DomainError):
        digamma(-2.0)


def test_gamma_ratio():
    assert gamma_ratio(3.0, 1.0) == pytest.approx(2.0)
    assert gamma_ratio(1.5, 0.5) == pytest.approx(0.5)
    assert gamma_ratio(1.0, 0.0) == 0.0
    assert gamma_ratio(0.3 + 2j, 0.3 + 2j) == pytest.approx(1.0)


def test_fourier_of_gaussian_is_gaussian():
    value = fourier_at(lambda x: math.exp(-math.pi * x * x), 0.7, lambda x: math.exp(-math.pi * x * x))
    assert value == pytest.approx(math.exp(-math.pi * 0.49), abs=1e-10)


def test_mellin_at_gamma_function():
    assert mellin_at(lambda x: math.exp(-x), 2.5, strip=(0.0, math.inf)) == pytest.approx(gamma_fn(2.5), abs=1e-10)


def test_mellin_at_continued_past_zero():
    # M[e^{-x^2}](s) = Gamma(s/2)/2, continued to -2 < Re s < 0
    value = mellin_at(lambda x: math.exp(-x * x), -0.5, strip=(0.0, math.inf),
                      value_at_zero=1.0, continuation_order=2)
    assert value == pytest.approx(0.5 * gamma_fn(-0.25), abs=1e-8)


def test_mellin_at_outside_strip():
    with pytest.raises(DomainError):
        mellin_at(lambda x: math.exp(-x), -0.5, strip=(0.0, math.inf))


def test_mellin_on_line_matches_gamma():
    z = np.array([2.0 + 3.0j, 1.5 - 7.0j, 3.0 + 0.0j])
    values = mellin_on_line(lambda x: np.exp(-x), z)
    assert np.max(np.abs(values - gamma_fn(z))) < 1e-10


def test_panel_nodes_integrate_polynomials_and_oscillations():
    x, w = panel_nodes(0.0, 1.0, 0.3)
    assert np.dot(w, x ** 2) == pytest.approx(1.0 / 3.0, abs=1e-14)
    x, w = panel_nodes(0.0, math.pi, 0.5)
    assert abs(np.dot(w, np.cos(x))) < 1e-13
    assert panel_nodes(1.0, 1.0, 0.1)[0].size == 0


def test_digamma_duplication():
    rng = np.random.default_rng(5)
    s = rng.uniform(0.1, 5.0, 20) + 1j * rng.uniform(-20.0, 20.0, 20)
    lhs = digamma(s) + digamma(s + 0.5)
    rhs = 2 * digamma(2 * s) - 2 * math.log(2.0)
    assert np.max(np.abs(lhs - rhs)) < 1e-10


def test_fourier_at_twice_returns_the_function():
    f = lambda x: math.exp(-math.pi * x * x)
    once = lambda xi: fourier_at(f, xi, f)
    for x in np.linspace(0.0, 3.0, 7):
        assert fourier_at(once, x, f, tol=1e-9) == pytest.approx(f(x), abs=1e-8)


def test_zeta_logderiv_matches_prime_sum():
    s, bound = 1.1, 10**6
    p = primes_upto(bound).astype(float)
    head = math.fsum(np.log(p) / (p ** s - 1.0))
    # int_P^inf x^{-s} d theta(x) with theta(x) = x past P, plus the boundary correction
    tail = bound ** (1.0 - s) / (s - 1.0) - (chebyshev_theta(bound) - bound) * bound ** -s
    assert abs(complex(zeta_logderiv(s)).real + head + tail) < 1e-2
