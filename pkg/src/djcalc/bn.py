"""Brill-Noether numbers and expected dimensions of generalized secant loci.

For a genus-g curve with a g^r_d and a contact partition mu with a rank
deficiency f, the universal secant locus (series together with contact
points) has every irreducible component of dimension

    rho(g,r,d) + e - f(r+1-|mu|+f)

on a general curve, provided rho(g,r,d) >= 0; when that quantity is
negative, the locus is empty for every series on a general curve.  The
specialized predicates for tangential secants, degenerate multi-tangents,
tangent hyperplanes, flex/bitangent lines and total ramification points are
each one inequality, kept in cleared-denominator integer form, and each is
required to agree with the general predicate at its (mu, f) specialization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation, HypothesisViolation
from .exact import Partition
from .lls import RamificationSequence

__all__ = [
    "SeriesParams",
    "DJProblem",
    "rho",
    "rho_raw",
    "rho_adjusted",
    "expected_dim_sigma",
    "expected_dim_fixed_series",
    "is_empty_for_general_curve",
    "span_dimension",
    "corollary_tangential_secant",
    "corollary_degenerate_tangents",
    "corollary_tangent_hyperplane_dim",
    "corollary_flex_bitangent",
    "corollary_total_ramification",
]


@dataclass(frozen=True)
class SeriesParams:
    """The triple (g, r, d) of a g^r_d on a genus-g curve."""

    g: int
    r: int
    d: int

    def __post_init__(self) -> None:
        if self.g < 0:
            raise ValueError(f"genus must be >= 0, got g={self.g}")
        if self.r < 1:
            raise ValueError(f"series dimension must be >= 1, got r={self.r}")
        if self.d < 1:
            raise ValueError(f"degree must be >= 1, got d={self.d}")


@dataclass(frozen=True)
class DJProblem:
    """A generalized secant problem: series parameters, contact partition mu,
    and the rank deficiency f, with |mu|-r <= f <= |mu| and f >= 0 (so the
    residual series has projective dimension r-|mu|+f >= 0).
    """

    params: SeriesParams
    mu: Partition
    f: int

    def __post_init__(self) -> None:
        s = self.mu.total
        r = self.params.r
        if self.f < 0 or self.f < s - r or self.f > s:
            raise ValueError(
                f"f={self.f} outside the valid range [{max(s - r, 0)}, {s}] "
                f"for |mu|={s}, r={r}"
            )

    @property
    def residual_rank(self) -> int:
        """r+1-|mu|+f, the section count of the residual series (>= 1)."""
        return self.params.r + 1 - self.mu.total + self.f


def rho_raw(g: int, r: int, d: int) -> int:
    """The Brill-Noether polynomial g - (r+1)(g-d+r), with no range checks."""
    return g - (r + 1) * (g - d + r)


def rho(params: SeriesParams) -> int:
    """Brill-Noether number of the series parameters."""
    return rho_raw(params.g, params.r, params.d)


def rho_adjusted(params: SeriesParams, alpha: RamificationSequence) -> int:
    """rho(g,r,d) minus the ramification weight imposed at a marked point."""
    if alpha.d != params.d or alpha.r != params.r:
        raise ValueError(
            f"ramification sequence context (r={alpha.r}, d={alpha.d}) does not "
            f"match series (r={params.r}, d={params.d})"
        )
    return rho(params) - sum(alpha.entries)


def expected_dim_sigma(p: DJProblem) -> int:
    """Dimension of every component of the universal secant locus on a
    general curve: rho + e - f(r+1-|mu|+f).  Requires rho >= 0.
    """
    rho_value = rho(p.params)
    if rho_value < 0:
        raise HypothesisViolation(
            f"rho({p.params.g},{p.params.r},{p.params.d}) = {rho_value} < 0; "
            "the dimension statement assumes rho >= 0"
        )
    return rho_value + p.mu.length - p.f * p.residual_rank


def expected_dim_fixed_series(p: DJProblem) -> int:
    """Lower bound for the secant locus of one fixed series: e - f(r+1-|mu|+f).

    When |mu| = d and f = d - r this is the classical virtual dimension e-d+r.
    """
    return p.mu.length - p.f * p.residual_rank


def is_empty_for_general_curve(p: DJProblem) -> bool:
    """True iff the expected dimension is negative, which forces the secant
    locus to be empty for every series on a general curve.
    """
    return expected_dim_sigma(p) < 0


def span_dimension(mu: Partition, f: int) -> int:
    """Projective dimension |mu|-f-1 of the span of the osculating spaces
    a_1.x_1, ..., a_e.x_e cut out by a deficiency-f secant condition.
    """
    return mu.total - f - 1


def _check_rho(g: int, r: int, d: int) -> int:
    value = rho(SeriesParams(g, r, d))
    if value < 0:
        raise HypothesisViolation(f"rho({g},{r},{d}) = {value} < 0")
    return value


def corollary_tangential_secant(g: int, r: int, d: int, e: int) -> bool:
    """True iff a general curve of genus g has no tangential (e+1)-secant
    (e-1)-plane in any g^r_d: the inequality 2e < r+1-rho.

    Agrees with the general emptiness predicate at mu=(2,1^(e-1)), f=1.
    """
    rho_value = _check_rho(g, r, d)
    if not 1 <= e <= r:
        raise ContractViolation(f"corollary_tangential_secant requires 1 <= e <= r, got e={e}, r={r}")
    return 2 * e < r + 1 - rho_value


def corollary_degenerate_tangents(g: int, r: int, d: int, e: int) -> bool:
    """True iff no g^r_d on a general curve has e tangent lines spanning only
    a (2e-2)-plane: the inequality 3e < r+2-rho.

    Agrees with the general emptiness predicate at mu=(2^e), f=1.
    """
    rho_value = _check_rho(g, r, d)
    if e < 1 or 2 * e > r + 1:
        raise ContractViolation(
            f"corollary_degenerate_tangents requires 1 <= e and 2e <= r+1, got e={e}, r={r}"
        )
    return 3 * e < r + 2 - rho_value


def corollary_tangent_hyperplane_dim(g: int, r: int, d: int, e: int) -> int:
    """Dimension rho + r - e of the locus of series admitting an e-secant
    tangent hyperplane (negative value = empty on a general curve).

    Identically equal to the general dimension formula at mu=(2^e), f=2e-r.
    """
    rho_value = _check_rho(g, r, d)
    if r < 3:
        raise ContractViolation(f"corollary_tangent_hyperplane_dim requires r >= 3, got r={r}")
    if e < r + 1:
        raise ContractViolation(f"corollary_tangent_hyperplane_dim requires e >= r+1, got e={e}, r={r}")
    return rho_value + r - e


def corollary_flex_bitangent(g: int, r: int, d: int, a1: int, a2: int) -> bool:
    """True iff no degree-d embedding of a general curve in P^r has a secant
    line meeting it with multiplicities (a1, a2): the inequality
    a1+a2 > (rho+2r)/(r-1), evaluated as (a1+a2)(r-1) > rho+2r in integers.

    Agrees with the general emptiness predicate at mu=(a1,a2), f=a1+a2-2.
    """
    rho_value = _check_rho(g, r, d)
    if r < 3:
        raise ContractViolation(f"corollary_flex_bitangent requires r >= 3, got r={r}")
    if a1 < 1 or a2 < 1:
        raise ContractViolation(f"corollary_flex_bitangent requires a1, a2 >= 1, got a1={a1}, a2={a2}")
    return (a1 + a2) * (r - 1) > rho_value + 2 * r


def corollary_total_ramification(g: int, r: int, d: int, a: int) -> bool:
    """True iff no g^r_d on a general curve has a point of contact order a
    leaving a residual pencil: the inequality 2a > rho-1+2r.

    Agrees with the general emptiness predicate at mu=(a), f=a+1-r.  On the
    canonical series (d=2g-2, r=g-1) the bound says h^0(O(a.x)) <= a+2-g for
    a >= g-1, so a general curve has no pencil of degree g-1 totally
    ramified at a point.
    """
    rho_value = _check_rho(g, r, d)
    if a < r:
        raise ContractViolation(f"corollary_total_ramification requires a >= r, got a={a}, r={r}")
    return 2 * a > rho_value - 1 + 2 * r
