"""Virtual counts of divisors with prescribed contact multiplicities in a
linear series, evaluated along two independent exact routes, plus the
classical closed-form specializations (double points, simple ramification,
tangential trisecants, odd theta characteristics).

Route one ("bracket") evaluates the classical recursion-derived expression in
a division-free product form.  Route two ("coefficient") extracts the
multilinear coefficient of t_1...t_e in

    (1 + a_1^2 t_1 + ... + a_e^2 t_e)^g * (1 + a_1 t_1 + ... + a_e t_e)^(d-r-g)

by direct subset summation, with the negative exponent d-r-g handled through
generalized falling factorials.  The two routes share no code beyond integer
multiplication, which is what makes their agreement a meaningful check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation, IntegralityError
from .exact import Partition, binomial, elementary_symmetric, falling_factorial

__all__ = [
    "CountResult",
    "bracket",
    "coefficient_count",
    "dj_count",
    "double_point_count",
    "plucker_total",
    "ramification_count_check",
    "tangential_trisecant_count",
    "odd_theta_count",
    "MAX_SUBSET_LENGTH",
]

# Bitmask subset enumeration bound; far beyond any meaningful instance but
# keeps 1 << e well away from pathological inputs.
MAX_SUBSET_LENGTH = 62


@dataclass(frozen=True)
class CountResult:
    """A count together with the route that produced it.

    `value` is the count under the semantics given by `ordered`:
    ordered counts distinguish the labelling of equal contact orders,
    unordered counts divide that out.  Both values are retained;
    value * symmetry factor == ordered_value exactly.
    """

    value: int
    path: str
    ordered: bool
    ordered_value: int


def bracket(mu: Partition, g: int) -> int:
    """Ordered contact-divisor count in division-free product form.

    For mu = (a_1,...,a_e) this is

        (prod a_i) * sum_{k=0}^{e} (-1)^k e_{e-k}(a) * prod_{j in [g-e, g], j != g-e+k} j,

    which equals the classical alternating-fraction expression wherever the
    latter's denominators g-e+k are nonzero (the prefactor g!/(g-e-1)! is the
    product of all of them) and extends it by cancellation elsewhere.
    """
    if mu.length == 0:
        raise ContractViolation("bracket requires a nonempty partition")
    if g < 0:
        raise ContractViolation(f"bracket requires g >= 0, got g={g}")
    parts = mu.parts
    e = mu.length
    prod_a = 1
    for a in parts:
        prod_a *= a
    lo = g - e
    total = 0
    for k in range(e + 1):
        skip = lo + k
        prod_j = 1
        for j in range(lo, g + 1):
            if j != skip:
                prod_j *= j
        term = elementary_symmetric(parts, e - k) * prod_j
        total += -term if k % 2 else term
    return prod_a * total


def coefficient_count(g: int, r: int, d: int, mu: Partition) -> int:
    """Ordered count via the multilinear coefficient, by subset summation.

    Requires the finite-count shape |mu| = d and len(mu) = d - r.  Returns

        sum over S of ff(g,|S|) * prod_{i in S} a_i^2 * ff(d-r-g, e-|S|) * prod_{i not in S} a_i

    without ever expanding the generating polynomial.
    """
    e = mu.length
    if e == 0:
        raise ContractViolation("coefficient_count requires a nonempty partition")
    if g < 0:
        raise ContractViolation(f"coefficient_count requires g >= 0, got g={g}")
    if mu.total != d:
        raise ContractViolation(f"|mu| = d violated: |mu|={mu.total}, d={d}")
    if e != d - r:
        raise ContractViolation(f"len(mu) = d - r violated: len(mu)={e}, d-r={d - r}")
    if e > MAX_SUBSET_LENGTH:
        raise ContractViolation(f"partition length {e} exceeds subset cap {MAX_SUBSET_LENGTH}")
    parts = mu.parts
    ff_sq = [falling_factorial(g, k) for k in range(e + 1)]
    ff_lin = [falling_factorial(d - r - g, k) for k in range(e + 1)]
    total = 0
    for mask in range(1 << e):
        size = 0
        prod = 1
        for i in range(e):
            if mask >> i & 1:
                size += 1
                prod *= parts[i] * parts[i]
            else:
                prod *= parts[i]
        total += ff_sq[size] * ff_lin[e - size] * prod
    return total


def dj_count(g: int, r: int, d: int, mu: Partition, path: str = "coefficient") -> CountResult:
    """Unordered contact-divisor count: the ordered count divided by the
    symmetry factor prod n_v! of the partition, with exact divisibility asserted.

    `path` selects the ordered-count route ("coefficient" or "bracket"); both
    must agree, and the CLI cross-checks them.
    """
    if path == "coefficient":
        ordered = coefficient_count(g, r, d, mu)
    elif path == "bracket":
        # same preconditions as the coefficient route, so the two stay comparable
        if mu.total != d:
            raise ContractViolation(f"|mu| = d violated: |mu|={mu.total}, d={d}")
        if mu.length != d - r:
            raise ContractViolation(f"len(mu) = d - r violated: len(mu)={mu.length}, d-r={d - r}")
        ordered = bracket(mu, g)
    else:
        raise ValueError(f"unknown count path {path!r}")
    sym = mu.symmetry_factor
    value, rem = divmod(ordered, sym)
    if rem != 0:
        raise IntegralityError(
            f"symmetry factor {sym} does not divide ordered count {ordered} "
            f"for g={g}, r={r}, d={d}, mu={mu}"
        )
    return CountResult(value=value, path=path, ordered=False, ordered_value=ordered)


def double_point_count(g: int, r: int, d: int) -> int:
    """Closed form for divisors with r double points, 2x_1+...+2x_r+x_{r+1}+...+x_{d-r}:

        2^r * sum_{k=0}^{r} C(g,k) * C(d-r-k, r-k)

    using the zero convention for binomials with negative lower index.
    """
    if d < 2 * r:
        raise ContractViolation(f"double_point_count requires d >= 2r, got d={d}, r={r}")
    total = sum(binomial(g, k) * binomial(d - r - k, r - k) for k in range(r + 1))
    return (1 << r) * total


def plucker_total(g: int, r: int, d: int) -> int:
    """Total ramification weight of a g^r_d: (r+1)d + (r+1)r(g-1)."""
    return (r + 1) * d + (r + 1) * r * (g - 1)


def ramification_count_check(g: int, r: int, d: int) -> tuple[int, int]:
    """The simple-ramification count both ways: the contact-divisor count for
    mu = (r+1, 1^(d-r-1)) next to the closed-form total.  The entries agree.
    """
    if d < r + 1:
        raise ContractViolation(f"ramification_count_check requires d >= r+1, got d={d}, r={r}")
    mu = Partition((r + 1,) + (1,) * (d - r - 1))
    return dj_count(g, r, d, mu).value, plucker_total(g, r, d)


def tangential_trisecant_count(d: int, g: int) -> int:
    """Virtual number of tangential trisecants of a space curve:
    2(d-2)(d-3) + 2g(d-6).  May be negative outside the enumerative range.
    """
    return 2 * (d - 2) * (d - 3) + 2 * g * (d - 6)


def odd_theta_count(g: int) -> int:
    """Number of odd theta characteristics on a genus-g curve: 2^(g-1)(2^g - 1)."""
    if g < 1:
        raise ContractViolation(f"odd_theta_count requires g >= 1, got g={g}")
    return (1 << (g - 1)) * ((1 << g) - 1)
