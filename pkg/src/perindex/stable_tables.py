"""Finitely generated abelian groups and the exponent tables for the reduced
stable homotopy of the classifying spaces B Z/r.

The exponents e_j of these groups are the raw material of the main upper
bound.  Prime powers l**n are answered from the low-degree pattern (cyclic of
order l**n in odd degrees, trivial in even degrees, valid below degree
2l - 2); r = 2 additionally ships a table through degree 5.  Everything else
is Unknown unless the caller supplies literature values through an extension
table.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .numtheory import factorize, padic_valuation, prime_support

__all__ = [
    "FinAbGroup",
    "InfiniteExponentError",
    "ExponentEntry",
    "ExponentTable",
    "UNKNOWN_ENTRY",
    "PROVENANCE_FORMULA",
    "PROVENANCE_TABLE",
    "PROVENANCE_UNKNOWN",
    "exponent",
    "r_primary_exponent",
    "stable_exponent_BZr",
    "exponent_table_from_json",
    "load_exponent_table",
]

PROVENANCE_FORMULA = "formula-range"
PROVENANCE_TABLE = "shipped-table"
PROVENANCE_UNKNOWN = "unknown"


class InfiniteExponentError(ValueError):
    """Requested the exponent of a group with a free summand."""


@dataclass(frozen=True)
class FinAbGroup:
    """Finitely generated abelian group: a free rank plus invariant factors
    d_1 | d_2 | ... with every d_i >= 2."""

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(self.invariant_factors))
        if self.free_rank < 0:
            raise ValueError(f"free_rank must be >= 0, got {self.free_rank}")
        prev = 1
        for d in self.invariant_factors:
            if d < 2:
                raise ValueError(f"invariant factors must be >= 2, got {d}")
            if d % prev != 0:
                raise ValueError(
                    f"invariant factors must form a divisibility chain, {prev} does not divide {d}"
                )
            prev = d

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def order(self) -> int:
        if not self.is_finite:
            raise InfiniteExponentError("group has a free summand; order is infinite")
        return math.prod(self.invariant_factors)

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " + ".join(parts) if parts else "0"


def exponent(g: FinAbGroup) -> int:
    """Least N >= 1 annihilating g: the largest invariant factor, 1 if trivial.

    Signals InfiniteExponentError when g has a free summand.
    """
    if g.free_rank > 0:
        raise InfiniteExponentError("group has a free summand; exponent is infinite")
    return g.invariant_factors[-1] if g.invariant_factors else 1


def r_primary_exponent(g: FinAbGroup, r: int) -> int:
    """Exponent of the subgroup of g annihilated by powers of primes dividing r.

    Any free summand is ignored: consumers of this value only ever bound
    torsion phenomena, and must tolerate cohomology with free parts.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if not g.invariant_factors:
        return 1
    top = g.invariant_factors[-1]
    out = 1
    for p in sorted(prime_support(r)):
        out *= p ** padic_valuation(p, top)
    return out


@dataclass(frozen=True)
class ExponentEntry:
    """A known positive exponent tagged with its justification, or an
    explicitly unknown entry (value None, provenance "unknown")."""

    value: int | None
    provenance: str

    def __post_init__(self):
        if self.value is None:
            if self.provenance != PROVENANCE_UNKNOWN:
                raise ValueError("unknown entries must carry the 'unknown' provenance")
        else:
            if self.value < 1:
                raise ValueError(f"exponent value must be >= 1, got {self.value}")
            if not self.provenance or self.provenance == PROVENANCE_UNKNOWN:
                raise ValueError("known entries need a justifying provenance tag")

    @property
    def known(self) -> bool:
        return self.value is not None


UNKNOWN_ENTRY = ExponentEntry(None, PROVENANCE_UNKNOWN)

# Exponents of the reduced stable homotopy of B Z/2 in degrees 1..5: the
# 2-primary parts of the stable stems Z/2, Z/2, Z/24, then the exceptional
# degree-4 group Z/2, then trivial in degree 5.
_BZ2_EXPONENTS = {1: 2, 2: 2, 3: 8, 4: 2, 5: 1}

# Maps (r, j) to a user-supplied exponent for degrees beyond the shipped range.
ExponentTable = dict[tuple[int, int], int]


def stable_exponent_BZr(r: int, j: int, table: ExponentTable | None = None) -> ExponentEntry:
    """Exponent of the reduced stable homotopy of B Z/r in degree j.

    Composite r is answered by multiplying the answers for its coprime
    prime-power components whenever all of them are known.  Unknown is a
    value, never an error; callers must propagate it explicitly.
    """
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    fact = factorize(r)
    if len(fact.pairs) == 1:
        ell, n = fact.pairs[0]
        if j < 2 * ell - 2:
            return ExponentEntry(ell**n if j % 2 else 1, PROVENANCE_FORMULA)
        if r == 2 and j in _BZ2_EXPONENTS:
            return ExponentEntry(_BZ2_EXPONENTS[j], PROVENANCE_TABLE)
        if table and (r, j) in table:
            return ExponentEntry(table[(r, j)], PROVENANCE_TABLE)
        return UNKNOWN_ENTRY
    if table and (r, j) in table:
        return ExponentEntry(table[(r, j)], PROVENANCE_TABLE)
    value = 1
    provenance = PROVENANCE_FORMULA
    for ell, n in fact.pairs:
        part = stable_exponent_BZr(ell**n, j, table)
        if not part.known:
            return UNKNOWN_ENTRY
        value *= part.value
        if part.provenance == PROVENANCE_TABLE:
            provenance = PROVENANCE_TABLE
    return ExponentEntry(value, provenance)


def exponent_table_from_json(obj) -> ExponentTable:
    """Parse a table-extension document {"table": [{"r", "j", "invariant_factors"}]}.

    Each row gives the invariant factors of the degree-j group for B Z/r; the
    stored exponent is the largest factor (1 for an empty list).  Rows whose
    prime support escapes that of r are rejected: no table may break the
    prime-support invariant of the shipped data.
    """
    if not isinstance(obj, dict) or "table" not in obj or not isinstance(obj["table"], list):
        raise ValueError('table extension must be an object {"table": [...]}')
    out: ExponentTable = {}
    for row in obj["table"]:
        if not isinstance(row, dict) or not {"r", "j", "invariant_factors"} <= set(row):
            raise ValueError(f"bad table row: {row!r}")
        r, j, factors = row["r"], row["j"], row["invariant_factors"]
        if not isinstance(r, int) or r < 2 or not isinstance(j, int) or j < 1:
            raise ValueError(f"bad (r, j) in table row: {row!r}")
        group = FinAbGroup(0, tuple(factors))
        value = exponent(group)
        if value > 1 and not prime_support(value) <= prime_support(r):
            raise ValueError(
                f"table row for (r={r}, j={j}) has prime support outside that of r"
            )
        out[(r, j)] = value
    return out


def load_exponent_table(path) -> ExponentTable:
    with open(path, encoding="utf-8") as fh:
        return exponent_table_from_json(json.load(fh))
