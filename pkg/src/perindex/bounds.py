"""Divisibility bounds on the index of a torsion degree-3 class.

Every bound is reported as a divisibility statement with an explicit
direction tag, never as a numeric inequality: an upper report asserts that
the index divides the bound, a lower report that the bound divides the index.
Collapsing either to "<=" would lose the content.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numtheory import factorize, is_prime, m_closed, n_func, prime_support
from .stable_tables import (
    ExponentEntry,
    ExponentTable,
    PROVENANCE_FORMULA,
    stable_exponent_BZr,
)

__all__ = [
    "BoundReport",
    "OrdersProfile",
    "HypothesisViolatedError",
    "KIND_UPPER",
    "KIND_LOWER",
    "TAG_PRODUCT",
    "TAG_PRIME_POWER",
    "TAG_SKELETON",
    "TAG_PU_ORDER",
    "TAG_OBSTRUCTION",
    "TAG_CONSISTENCY",
    "COMPOSITE_RULE_NOTE",
    "upper_bound_product",
    "upper_bound_prime_power",
    "lower_bound_skeleton",
    "pu_eta_power_order",
    "degree_admissible",
    "min_admissible_degree",
    "check_per_ind_consistency",
    "dimension_forces_period",
]

KIND_UPPER = "upper"
KIND_LOWER = "lower"

TAG_PRODUCT = "stable-exponent-product"
TAG_PRIME_POWER = "prime-power-halfdim"
TAG_SKELETON = "skeleton-cup-powers"
TAG_PU_ORDER = "projective-unitary-cup-order"
TAG_OBSTRUCTION = "cup-order-obstruction"
TAG_CONSISTENCY = "period-index-prime-support"

COMPOSITE_RULE_NOTE = (
    "composite period: stable exponents multiplied over coprime prime-power components"
)


class HypothesisViolatedError(ValueError):
    """The half-dimension prime-power bound was requested outside 2l > d+1."""


@dataclass(frozen=True)
class BoundReport:
    """A divisibility statement about the index of a class of period r.

    kind="upper" asserts "ind divides bound"; kind="lower" asserts "bound
    divides ind".  bound is None when some needed exponent is Unknown; the
    known factors then still give a partial product, reported explicitly
    rather than silently substituted by 1.
    """

    bound: int | None
    kind: str
    theorem: str
    factors: tuple[tuple[int, ExponentEntry], ...] = ()
    assumptions: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "assumptions", tuple(self.assumptions))
        if self.kind not in (KIND_UPPER, KIND_LOWER):
            raise ValueError(f"kind must be 'upper' or 'lower', got {self.kind!r}")
        if self.bound is not None:
            if self.bound < 1:
                raise ValueError(f"bound must be >= 1, got {self.bound}")
            if self.factors and self.partial_product != self.bound:
                raise ValueError(
                    f"bound {self.bound} does not equal the product of its known factors"
                )

    @property
    def known(self) -> bool:
        return self.bound is not None

    @property
    def partial_product(self) -> int:
        return math.prod(e.value for _, e in self.factors if e.known)

    def unknown_indices(self) -> tuple[int, ...]:
        return tuple(j for j, e in self.factors if not e.known)

    def describe(self) -> str:
        if self.known:
            if self.kind == KIND_UPPER:
                return f"ind divides {self.bound}"
            return f"{self.bound} divides ind"
        unknown = ", ".join(str(j) for j in self.unknown_indices())
        return (
            f"{self.kind} bound unknown: known factors give {self.partial_product}, "
            f"entries unknown at j={unknown}"
        )


@dataclass(frozen=True)
class OrdersProfile:
    """The orders o_s of the cup powers of a degree-2 class of order r.

    o_1 equals r and every o_s divides r: cup powers of an r-torsion class
    stay r-torsion.  An o_s of 1 records a vanishing power.
    """

    r: int
    orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(self.orders))
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        if not self.orders:
            raise ValueError("orders must be nonempty")
        if self.orders[0] != self.r:
            raise ValueError(f"o_1 must equal r, got {self.orders[0]} != {self.r}")
        for s, o in enumerate(self.orders, start=1):
            if o < 1 or self.r % o != 0:
                raise ValueError(f"o_{s} = {o} does not divide r = {self.r}")


def upper_bound_product(d: int, r: int, table: ExponentTable | None = None) -> BoundReport:
    """Upper bound prod e_j over j = 1..d-1, where e_j is the exponent of the
    degree-j reduced stable homotopy of B Z/r.

    The index of any class of period r on a d-dimensional complex divides the
    bound.  Unknown entries leave the bound Unknown with the partial factors
    listed.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if r < 2:
        raise ValueError(f"period must be >= 2, got {r}")
    factors = tuple((j, stable_exponent_BZr(r, j, table)) for j in range(1, d))
    assumptions: tuple[str, ...] = ()
    if factors and len(factorize(r).pairs) > 1:
        assumptions = (COMPOSITE_RULE_NOTE,)
    bound = None
    if all(e.known for _, e in factors):
        bound = math.prod(e.value for _, e in factors)
    return BoundReport(bound, KIND_UPPER, TAG_PRODUCT, factors, assumptions)


def upper_bound_prime_power(d: int, ell: int, k: int) -> BoundReport:
    """Upper bound (l**k)**[d/2] for a class of prime-power period l**k,
    valid only under the hypothesis 2l > d+1.

    Outside the hypothesis this refuses with HypothesisViolatedError rather
    than silently degrading; callers fall back to upper_bound_product.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if not is_prime(ell):
        raise ValueError(f"ell must be prime, got {ell}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if 2 * ell <= d + 1:
        raise HypothesisViolatedError(
            f"prime-power bound needs 2*{ell} > {d}+1; use the exponent product instead"
        )
    r = ell**k
    factors = tuple(
        (j, ExponentEntry(r, PROVENANCE_FORMULA)) for j in range(1, d) if j % 2
    )
    return BoundReport(r ** (d // 2), KIND_UPPER, TAG_PRIME_POWER, factors)


def lower_bound_skeleton(r: int, a: int) -> BoundReport:
    """Lower bound for the canonical period-r class on the (a+1)-skeleton of
    the universal period-r space: n_func(r, [(a-1)/2]) divides its index."""
    if r < 2:
        raise ValueError(f"period must be >= 2, got {r}")
    if a < 3:
        raise ValueError(f"skeleton parameter must be >= 3, got {a}")
    s = (a - 1) // 2
    value = n_func(r, s)
    factors = ((s, ExponentEntry(value, "closed-formula")),)
    assumptions = (f"the skeleton class has period exactly {r}",)
    return BoundReport(value, KIND_LOWER, TAG_SKELETON, factors, assumptions)


def pu_eta_power_order(n: int, s: int) -> int:
    """Order of the s-th cup power of the degree-2 generator of the projective
    unitary group of degree n: m_closed(n, s)."""
    if n < 2:
        raise ValueError(f"degree must be >= 2, got {n}")
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    return m_closed(n, s)


def degree_admissible(n: int, profile: OrdersProfile) -> bool:
    """Whether a degree-n algebra can carry a class with the given cup-power
    orders: every o_s must divide m_closed(n, s)."""
    if n < 2:
        raise ValueError(f"candidate degree must be >= 2, got {n}")
    return all(m_closed(n, s) % o == 0 for s, o in enumerate(profile.orders, start=1))


def min_admissible_degree(profile: OrdersProfile, search_cap: int) -> int | None:
    """Smallest admissible degree <= search_cap, or None when none exists.

    For the constant profile (every order equal to r up to S) the result is
    always a multiple of n_func(r, S); that consistency is re-checked here on
    every hit.
    """
    if search_cap < 2:
        raise ValueError(f"search_cap must be >= 2, got {search_cap}")
    constant = all(o == profile.r for o in profile.orders)
    for n in range(2, search_cap + 1):
        if degree_admissible(n, profile):
            if constant:
                forced = n_func(profile.r, len(profile.orders))
                if n % forced != 0:
                    raise RuntimeError(
                        f"internal consistency failure: {n} admissible but not a "
                        f"multiple of the forced divisor {forced}"
                    )
            return n
    return None


def check_per_ind_consistency(per: int, ind: int) -> bool:
    """True iff per divides ind and the two have the same prime divisors."""
    if per < 1 or ind < 1:
        raise ValueError(f"per and ind must be >= 1, got {per}, {ind}")
    return ind % per == 0 and prime_support(per) == prime_support(ind)


def dimension_forces_period(d: int) -> bool:
    """In dimension at most 4 the index collapses to the period."""
    return d <= 4
