"""Exact integer arithmetic underlying every divisibility bound in the package.

Factorizations, p-adic valuations, base-p carry counts, and the two
binomial-coefficient functions everything else consumes: ``m_closed`` /
``m_oracle`` (the gcd of an initial segment of a Pascal-triangle row) and
``n_func`` (the divisor that gcd forces on any admissible degree).  All
arithmetic is arbitrary-precision; there is no overflow regime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Factorization",
    "factorize",
    "is_prime",
    "prime_support",
    "padic_valuation",
    "integer_log",
    "kummer_carries",
    "m_closed",
    "m_oracle",
    "n_func",
]


def is_prime(p: int) -> bool:
    """Trial-division primality check; inputs here are degree-sized."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Factorization:
    """A positive integer as (prime, exponent) pairs with strictly increasing
    primes; the empty tuple represents 1."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = 1
        for p, e in self.pairs:
            if p <= last:
                raise ValueError(f"primes must be strictly increasing, got {p} after {last}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            if e < 1:
                raise ValueError(f"exponent of prime {p} must be >= 1, got {e}")
            last = p

    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)


@lru_cache(maxsize=None)
def factorize(a: int) -> Factorization:
    """Factor a >= 1 by trial division up to sqrt(a)."""
    if a < 1:
        raise ValueError(f"factorize requires a >= 1, got {a}")
    pairs = []
    n = a
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            pairs.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        pairs.append((n, 1))
    return Factorization(tuple(pairs))


def prime_support(a: int) -> frozenset[int]:
    """The set of primes dividing a."""
    return frozenset(factorize(a).primes())


def padic_valuation(p: int, x: int) -> int:
    """Largest v with p**v dividing x; rejects x = 0, whose valuation is infinite."""
    if not is_prime(p):
        raise ValueError(f"padic_valuation requires p prime, got {p}")
    if x < 1:
        raise ValueError(f"padic_valuation requires x >= 1, got {x}")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def integer_log(p: int, s: int) -> int:
    """Largest e >= 0 with p**e <= s, by repeated integer division.

    Never touches floating point, so exact powers of p land on the right side.
    """
    if p < 2:
        raise ValueError(f"integer_log requires base >= 2, got {p}")
    if s < 1:
        raise ValueError(f"integer_log requires s >= 1, got {s}")
    e = 0
    q = s
    while q >= p:
        q //= p
        e += 1
    return e


def kummer_carries(p: int, a: int, b: int) -> int:
    """Number of carries when adding a and b in base p.

    Equals the p-adic valuation of the binomial coefficient C(a+b, b).
    """
    if not is_prime(p):
        raise ValueError(f"kummer_carries requires p prime, got {p}")
    if a < 0 or b < 0:
        raise ValueError(f"kummer_carries requires a, b >= 0, got {a}, {b}")
    carries = 0
    carry = 0
    while a or b or carry:
        carry = 1 if (a % p) + (b % p) + carry >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries


def _check_positive_pair(a: int, s: int, first: str) -> None:
    if a < 1:
        raise ValueError(f"{first} must be >= 1, got {a}")
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s} (the gcd over an empty range is undefined)")


def m_oracle(a: int, s: int) -> int:
    """gcd of the binomial coefficients C(a,1), ..., C(a,s), exactly.

    C(a,i) = 0 once i > a; zero terms are skipped rather than folded into the
    gcd, so the running gcd is always over the nonzero coefficients.
    """
    _check_positive_pair(a, s, "a")
    g = 0
    for i in range(1, s + 1):
        c = math.comb(a, i)
        if c != 0:
            g = math.gcd(g, c)
    return g


def m_closed(a: int, s: int) -> int:
    """Closed form for m_oracle: prod p**max(n - [log_p s], 0) over the
    factorization a = prod p**n."""
    _check_positive_pair(a, s, "a")
    out = 1
    for p, n in factorize(a).pairs:
        e = n - integer_log(p, s)
        if e > 0:
            out *= p**e
    return out


def n_func(b: int, s: int) -> int:
    """prod p**(n + [log_p s]) over the factorization b = prod p**n.

    If b divides m_closed(a, s) then this value divides a: it is the divisor
    forced on any degree whose binomial gcd retains b.
    """
    _check_positive_pair(b, s, "b")
    out = 1
    for p, n in factorize(b).pairs:
        out *= p ** (n + integer_log(p, s))
    return out
