"""Conductor combinatorics and quadratic characters unramified outside N."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd, prod

from .algebra import is_prime, kronecker, squarefree_part

__all__ = [
    "ConductorData",
    "QuadChar",
    "parse_conductor",
    "max_square_divisor_root",
    "special_divisors",
    "divisors",
    "mult_order",
    "quad_chars",
]


@dataclass(frozen=True)
class ConductorData:
    """Factored conductor (or bound for it) plus user-supplied local data.

    ``bound_at`` lists primes whose exponent is only an upper bound.
    """

    factors: dict[int, int]
    bad_primes: frozenset[int] = frozenset()
    phi: dict[int, int] = field(default_factory=dict)
    semiabelian_at: frozenset[int] = frozenset()
    bound_at: frozenset[int] = frozenset()

    def __post_init__(self):
        for q, e in self.factors.items():
            if not is_prime(q) or e < 1:
                raise ValueError(f"bad conductor factor {q}^{e}")
        bad = frozenset(self.bad_primes) | frozenset(self.factors)
        object.__setattr__(self, "bad_primes", bad)
        for q in self.phi:
            if q not in self.factors:
                raise ValueError(f"Phi({q}) given for a prime not dividing the conductor")
        for q in self.semiabelian_at:
            if q not in self.factors:
                raise ValueError(f"semiabelian reduction asserted at {q}, which does not divide the conductor")

    @property
    def value(self) -> int:
        return prod(q**e for q, e in self.factors.items())

    def exponent_is_exact(self, q: int) -> bool:
        return q in self.factors and q not in self.bound_at

    def expression(self) -> str:
        return "*".join(
            f"{q}^{e}" if e > 1 else str(q) for q, e in sorted(self.factors.items())
        ) or "1"


_TERM = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_conductor(expr: str) -> dict[int, int]:
    """Parse ``2^12*5*23`` into ``{2: 12, 5: 1, 23: 1}``; ``1`` is empty."""
    factors: dict[int, int] = {}
    for term in expr.replace("·", "*").split("*"):
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"cannot parse conductor term {term!r}")
        q, e = int(m.group(1)), int(m.group(2) or 1)
        if q == 1:
            continue
        if not is_prime(q):
            raise ValueError(f"conductor term {q} is not prime")
        factors[q] = factors.get(q, 0) + e
    return factors


def max_square_divisor_root(c: ConductorData) -> int:
    """Largest d with d^2 dividing c."""
    return prod(q ** (e // 2) for q, e in c.factors.items())


def divisors(factors: dict[int, int]) -> list[int]:
    divs = [1]
    for q, e in factors.items():
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def special_divisors(c: ConductorData) -> frozenset[int]:
    """Divisors t of c with t^2 <= c, maximal under divisibility."""
    n = c.value
    small = [t for t in divisors(c.factors) if t * t <= n]
    return frozenset(t for t in small if not any(u != t and u % t == 0 for u in small))


def mult_order(p: int, d: int) -> int:
    if d < 1:
        raise ValueError("modulus must be positive")
    if d == 1:
        return 1
    if gcd(p, d) != 1:
        raise ValueError(f"{p} is not a unit mod {d}")
    x, f = p % d, 1
    while x != 1:
        x = x * p % d
        f += 1
    return f


@dataclass(frozen=True, order=True)
class QuadChar:
    """Quadratic character p -> (D/p) for a fundamental discriminant D."""

    D: int

    def __call__(self, p: int) -> int:
        return kronecker(self.D, p)

    def __str__(self):
        return f"({self.D}/.)"


def _fundamental(n: int) -> int:
    s = squarefree_part(n)
    return s if s % 4 == 1 else 4 * s


def quad_chars(bad_primes) -> list[QuadChar]:
    """All nontrivial quadratic characters ramified only at ``bad_primes``
    (and infinity), sorted by discriminant."""
    gens: list[int] = []
    for q in sorted(set(bad_primes)):
        if q == 2:
            gens += [-4, 8]
        else:
            gens.append(q if q % 4 == 1 else -q)
    chars = set()
    for r in range(1, len(gens) + 1):
        for combo in combinations(gens, r):
            chars.add(_fundamental(prod(combo)))
    return [QuadChar(D) for D in sorted(chars)]
