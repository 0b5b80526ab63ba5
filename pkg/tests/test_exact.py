import math
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from djcalc.exact import Partition, binomial, elementary_symmetric, falling_factorial


def esym_brute(values, j):
    """Independent oracle: literally sum products over all j-subsets."""
    return sum(math.prod(c) for c in combinations(values, j))


def test_falling_factorial_examples():
    assert falling_factorial(3, 2) == 6
    assert falling_factorial(-1, 2) == 2
    assert falling_factorial(5, 0) == 1


def test_falling_factorial_rejects_negative_k():
    with pytest.raises(ValueError):
        falling_factorial(3, -1)


def test_binomial_examples():
    assert binomial(4, -1) == 0
    assert binomial(-1, 2) == 1
    assert binomial(6, 3) == 20


def test_binomial_times_factorial_is_falling_factorial():
    for x in range(-10, 11):
        for k in range(0, 11):
            assert falling_factorial(x, k) == binomial(x, k) * math.factorial(k)


def test_elementary_symmetric_examples():
    assert elementary_symmetric((2, 2), 1) == 4
    assert elementary_symmetric((2, 2), 2) == 4
    assert elementary_symmetric((2, 3, 1), 2) == esym_brute((2, 3, 1), 2) == 11


def test_elementary_symmetric_bounds():
    assert elementary_symmetric((), 0) == 1
    assert elementary_symmetric((5, 7), 0) == 1
    with pytest.raises(ValueError):
        elementary_symmetric((1, 2), 3)
    with pytest.raises(ValueError):
        elementary_symmetric((1, 2), -1)


@given(st.lists(st.integers(-6, 6), max_size=7))
def test_generating_product_matches_elementary_symmetric(values):
    # expand prod(1 + v*t) coefficient by coefficient
    coeffs = [1]
    for v in values:
        coeffs = [c + v * (coeffs[i - 1] if i else 0) for i, c in enumerate(coeffs)] + [v * coeffs[-1]]
    for j, c in enumerate(coeffs):
        assert c == elementary_symmetric(values, j) == esym_brute(values, j)


@given(st.lists(st.integers(1, 9), max_size=8))
def test_partition_canonicalization(parts):
    mu = Partition(parts)
    assert mu.parts == tuple(sorted(parts, reverse=True))
    assert Partition(mu.parts) == mu  # idempotent
    assert Partition(reversed(parts)) == mu  # order-insensitive


@given(st.lists(st.integers(1, 9), max_size=8))
def test_partition_profile_invariants(parts):
    mu = Partition(parts)
    profile = mu.multiplicities
    assert sum(profile.values()) == mu.length
    assert sum(v * n for v, n in profile.items()) == mu.total


def test_partition_symmetry_factor():
    assert Partition([2, 2]).symmetry_factor == 2
    assert Partition([2, 2, 2]).symmetry_factor == 6
    assert Partition([3, 1, 1, 1]).symmetry_factor == 6
    assert Partition([]).symmetry_factor == 1


@pytest.mark.parametrize("bad", [[0], [-1], [2, 0], [1.5]])
def test_partition_rejects_invalid_parts(bad):
    with pytest.raises(ValueError):
        Partition(bad)
