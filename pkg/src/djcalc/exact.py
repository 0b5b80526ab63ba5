"""Exact integer combinatorics: falling factorials, generalized binomials,
elementary symmetric polynomials, and canonical contact-order partitions.

Everything here is arbitrary-precision integer arithmetic; no floats enter
any computation path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Sequence

__all__ = [
    "falling_factorial",
    "binomial",
    "elementary_symmetric",
    "Partition",
]


def falling_factorial(x: int, k: int) -> int:
    """x(x-1)...(x-k+1); defined for any integer x, k >= 0.  Empty product is 1."""
    if k < 0:
        raise ValueError(f"falling_factorial needs k >= 0, got k={k}")
    out = 1
    for i in range(k):
        out *= x - i
    return out


def binomial(m: int, k: int) -> int:
    """Generalized binomial coefficient, valid for negative m.

    Returns 0 for k < 0 (the convention used throughout the count formulas);
    otherwise falling_factorial(m, k) / k!, which is exact since any product
    of k consecutive integers is divisible by k!.
    """
    if k < 0:
        return 0
    num = falling_factorial(m, k)
    den = factorial(k)
    q, rem = divmod(num, den)
    assert rem == 0, f"binomial({m},{k}) not integral"
    return q


def elementary_symmetric(values: Sequence[int], j: int) -> int:
    """e_j(values): the sum of all products of j distinct entries; e_0 = 1."""
    n = len(values)
    if j < 0 or j > n:
        raise ValueError(f"elementary_symmetric needs 0 <= j <= {n}, got j={j}")
    # coefficient DP on prod(1 + v*t), truncated at degree j
    coeffs = [0] * (j + 1)
    coeffs[0] = 1
    for v in values:
        for i in range(min(j, len(coeffs) - 1), 0, -1):
            coeffs[i] += v * coeffs[i - 1]
    return coeffs[j]


@dataclass(frozen=True)
class Partition:
    """A multiset of positive contact orders, stored weakly decreasing.

    Input order is irrelevant: parts are canonicalized at construction, and
    every downstream operation consumes the canonical form.
    """

    parts: tuple[int, ...] = field(default=())

    def __init__(self, parts: Iterable[int] = ()) -> None:
        canonical = tuple(sorted(parts, reverse=True))
        for a in canonical:
            if not isinstance(a, int) or a < 1:
                raise ValueError(f"partition parts must be positive integers, got {a!r}")
        object.__setattr__(self, "parts", canonical)

    @property
    def length(self) -> int:
        """Number of parts (the number of distinct contact points)."""
        return len(self.parts)

    @property
    def total(self) -> int:
        """Sum of the parts (the degree of the contact divisor)."""
        return sum(self.parts)

    @property
    def multiplicities(self) -> dict[int, int]:
        """Map part value -> number of parts with that value."""
        profile: dict[int, int] = {}
        for a in self.parts:
            profile[a] = profile.get(a, 0) + 1
        return profile

    @property
    def symmetry_factor(self) -> int:
        """Product of n_v! over the multiplicity profile (orders within equal parts)."""
        out = 1
        for n in self.multiplicities.values():
            out *= factorial(n)
        return out

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.parts) + ")"
