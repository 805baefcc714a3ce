import math

import mpmath
import numpy as np
import pytest

from src.config import T_MAX
from src.errors import DomainError
from src.arith import sieve_squarefree_odd
from src.models import QuadraticCharacter
from src.zeros import (
    cache_path,
    eval_L,
    eval_L_at,
    find_zeros,
    find_zeros_many,
    hardy_theta,
    hardy_Z,
    load_zeros,
    positive_count_estimate,
    store_zeros,
    zero_count_estimate,
)
from src.zeros.evaluator import RAY_MARGIN


def hurwitz_L(d: int, s: complex) -> complex:
    """L(s, chi_{8d}) = q^{-s} sum_{a mod q} chi(a) zeta(s, a/q), evaluated with mpmath."""
    char = QuadraticCharacter(d=d)
    q = char.conductor
    with mpmath.workdps(30):
        total = mpmath.mpf(0)
        for a in range(1, q + 1):
            chi = char.value(a)
            if chi:
                total += chi * mpmath.zeta(s, mpmath.mpf(a) / q)
        return complex(mpmath.power(q, -s) * total)


def test_hardy_theta_matches_loggamma():
    char = QuadraticCharacter(d=-3)
    t = 12.5
    expected = float(mpmath.im(mpmath.loggamma((0.5 + 1 + 1j * t) / 2))) + 0.5 * t * math.log(24 / math.pi)
    assert hardy_theta(char, t) == pytest.approx(expected, abs=1e-12)
    assert hardy_theta(char, np.array([1.0, 2.0])).shape == (2,)


@pytest.mark.parametrize("d,s", [(3, 2.0), (1, 0.5 + 1.0j), (1, 0.5 + 5.0j), (1, 0.5 + 10.0j), (-7, 0.5 + 20.0j)])
def test_eval_L_at_matches_hurwitz_oracle(d, s):
    value = eval_L_at(QuadraticCharacter(d=d), s)
    assert abs(value.value - hurwitz_L(d, s)) < 1e-9
    assert value.bound < 1e-10


def test_eval_L_conjugate_symmetry():
    char = QuadraticCharacter(d=5)
    assert eval_L(char, -7.3) == pytest.approx(np.conj(eval_L(char, 7.3)), abs=1e-12)


def test_hardy_Z_is_even_and_has_modulus_of_L():
    char = QuadraticCharacter(d=-3)
    for t in (2.0, 9.7, 33.0):
        assert hardy_Z(char, -t) == pytest.approx(hardy_Z(char, t), abs=1e-10)
        assert abs(hardy_Z(char, t)) == pytest.approx(abs(eval_L(char, t)), abs=1e-10)


def test_evaluation_range_is_enforced():
    with pytest.raises(DomainError):
        eval_L(QuadraticCharacter(d=1), T_MAX + 1.0)
    with pytest.raises(DomainError):
        eval_L(QuadraticCharacter(d=10007), 1.0)


def test_count_estimates():
    char = QuadraticCharacter(d=15)
    counts = [zero_count_estimate(char, T) for T in (10.0, 20.0, 40.0)]
    assert counts[0] < counts[1] < counts[2]
    assert positive_count_estimate(char, 40.0) == pytest.approx(hardy_theta(char, 40.0) / math.pi)
    with pytest.raises(DomainError):
        zero_count_estimate(char, 0.0)


def test_find_zeros_d1():
    char = QuadraticCharacter(d=1)
    zeros = find_zeros(char, 30.0, use_cache=False)
    assert zeros.complete_flag
    assert len(zeros.ordinates) > 5
    assert all(abs(hardy_Z(char, gamma)) < 1e-6 for gamma in zeros.ordinates)

    lower = find_zeros(char, 20.0, use_cache=False)
    prefix = [gamma for gamma in zeros.ordinates if gamma <= 20.0]
    assert np.allclose(lower.ordinates, prefix, atol=1e-7)


def test_find_zeros_height_is_checked():
    with pytest.raises(DomainError):
        find_zeros(QuadraticCharacter(d=1), T_MAX + 1.0, use_cache=False)
    with pytest.raises(DomainError):
        find_zeros(QuadraticCharacter(d=1), 0.0, use_cache=False)


def test_find_zeros_uses_the_cache(zero_cache):
    char = QuadraticCharacter(d=-3)
    first = find_zeros(char, 15.0, cache_root=zero_cache)
    assert cache_path(-3, zero_cache).exists()
    again = find_zeros(char, 10.0, cache_root=zero_cache)
    assert again.ordinates == pytest.approx([g for g in first.ordinates if g <= 10.0], abs=1e-10)


def test_short_cached_list_is_scanned_again(zero_cache):
    char = QuadraticCharacter(d=1)
    store_zeros(1, 30.0, [14.134725142], zero_cache)
    zeros = find_zeros(char, 30.0, cache_root=zero_cache)
    assert zeros.complete_flag
    assert len(zeros.ordinates) > 5
    assert load_zeros(1, 30.0, zero_cache) == pytest.approx(zeros.ordinates, abs=1e-10)


def test_incomplete_scan_is_not_cached(zero_cache, monkeypatch):
    monkeypatch.setattr("src.zeros.finder._scan", lambda char, T, step: [])
    zeros = find_zeros(QuadraticCharacter(d=-3), 30.0, cache_root=zero_cache)
    assert not zeros.complete_flag
    assert not cache_path(-3, zero_cache).exists()


def test_cache_roundtrip(zero_cache):
    store_zeros(5, 20.0, [1.5, 3.25, 17.0], zero_cache)
    assert load_zeros(5, 20.0, zero_cache) == [1.5, 3.25, 17.0]
    assert load_zeros(5, 5.0, zero_cache) == [1.5, 3.25]
    assert load_zeros(5, 25.0, zero_cache) is None
    assert load_zeros(7, 5.0, zero_cache) is None


def test_cache_stores_empty_scans(zero_cache):
    store_zeros(-7, 1.0, [], zero_cache)
    assert load_zeros(-7, 1.0, zero_cache) == []


def test_find_zeros_many_keeps_order():
    zero_sets = find_zeros_many([1, -3, 5], 10.0, threads=2, use_cache=False)
    assert [z.character.d for z in zero_sets] == [1, -3, 5]
    assert find_zeros_many([], 10.0) == []


def test_eval_L_does_not_depend_on_the_margin():
    rng = np.random.default_rng(3)
    family = sieve_squarefree_odd(200)
    for _ in range(10):
        char = QuadraticCharacter(d=int(rng.choice(family)))
        t = float(rng.uniform(0.0, 50.0))
        assert abs(eval_L(char, t) - eval_L(char, t, margin=RAY_MARGIN / 2)) < 1e-9
