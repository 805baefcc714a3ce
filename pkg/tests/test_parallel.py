import numpy as np
import pytest

from src.parallel import map_reduce, tree_reduce
from src.ratios import FamilyEnumeration, make_family


def test_tree_reduce_order():
    assert tree_reduce(["a", "b", "c", "d", "e"], lambda x, y: f"({x}{y})") == "(((ab)(cd))e)"
    with pytest.raises(ValueError):
        tree_reduce([], lambda x, y: x + y)


def test_map_reduce_is_independent_of_thread_count():
    rng = np.random.default_rng(1)
    values = rng.standard_normal(100_000) * 10.0 ** rng.integers(-8, 8, 100_000)

    def partial(chunk):
        return float(np.sum(chunk))

    results = {threads: map_reduce(partial, values, lambda a, b: a + b, chunk_size=1000, threads=threads)
               for threads in (1, 2, 7)}
    assert results[1] == results[2] == results[7]


def test_family_averages_are_bitwise_reproducible(gaussian):
    fam = make_family(3e4, gaussian)
    r = np.array([0.1 + 1.0j, 0.3])
    single = FamilyEnumeration(gaussian, fam, threads=1).power_average(r)
    many = FamilyEnumeration(gaussian, fam, threads=4).power_average(r)
    assert np.array_equal(single, many)
