"""Exact integer and finite-field arithmetic used by the sieve.

Integer polynomials are :class:`IntPoly` values (coefficients lowest degree
first).  Polynomials over F_ell are plain lists of residues, also lowest
degree first, with no trailing zeros; the empty list is the zero polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, lcm
from typing import Iterable

__all__ = [
    "IntPoly",
    "FactorResult",
    "NotSemisimpleError",
    "kronecker",
    "resultant",
    "resultant_sylvester",
    "factor_small",
    "is_prime",
    "squarefree_part",
    "factor_pattern_mod",
    "is_irreducible_pattern",
    "projective_order",
    "quartic_is_irreducible",
    "primes_up_to",
]


class IntPoly:
    """Polynomial with arbitrary-precision integer coefficients.

    ``IntPoly([c0, c1, ..., cn])`` is c0 + c1*x + ... + cn*x^n.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def from_high(cls, coeffs: Iterable[int]) -> "IntPoly":
        return cls(reversed(list(coeffs)))

    @classmethod
    def x_pow_minus_one(cls, f: int) -> "IntPoly":
        return cls([-1] + [0] * (f - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = IntPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def discriminant(self) -> int:
        n = self.degree
        if n < 1:
            raise ValueError("discriminant needs degree >= 1")
        res = resultant(self, self.derivative())
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        q, r = divmod(sign * res, self.lc)
        assert r == 0
        return q

    def mod(self, ell: int) -> list[int]:
        return _trim([c % ell for c in self.coeffs])

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(v) -> IntPoly:
    if isinstance(v, IntPoly):
        return v
    if isinstance(v, int):
        return IntPoly([v])
    return NotImplemented


# --------------------------------------------------------------------------
# integers

def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n)."""
    if n == 0:
        raise ValueError("kronecker symbol undefined for n = 0")
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = (n & -n).bit_length() - 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
        n >>= v
    # n odd and positive: Jacobi symbol
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, f in enumerate(sieve) if f]


@dataclass(frozen=True)
class FactorResult:
    """Outcome of :func:`factor_small`.

    ``remainder`` is 1 when ``|n|`` was split completely into ``factors``;
    otherwise it is a cofactor with no prime factor below the bound that
    could not be proven prime.  ``all_primes`` marks the input 0.
    """

    factors: dict[int, int] = field(default_factory=dict)
    remainder: int = 1
    all_primes: bool = False

    @property
    def complete(self) -> bool:
        return self.all_primes or self.remainder == 1

    @property
    def primes(self) -> frozenset[int]:
        return frozenset(self.factors)


_PRIME_TABLES: dict[int, list[int]] = {}
_MR_LIMIT = 3317044064679887385961981


def factor_small(n: int, bound: int = 10**6) -> FactorResult:
    """Trial division of ``|n|`` by the primes up to ``bound``.

    A leftover cofactor is kept as a prime factor when it is provably prime
    (below ``(bound+1)^2``, or deterministic Miller-Rabin range).
    """
    if n == 0:
        return FactorResult(all_primes=True)
    n = abs(n)
    if bound not in _PRIME_TABLES:
        _PRIME_TABLES[bound] = primes_up_to(bound)
    factors: dict[int, int] = {}
    for q in _PRIME_TABLES[bound]:
        if q * q > n:
            break
        if n % q == 0:
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            factors[q] = e
    if n == 1:
        return FactorResult(factors)
    if n < (bound + 1) ** 2 or (n < _MR_LIMIT and is_prime(n)):
        factors[n] = factors.get(n, 0) + 1
        return FactorResult(factors)
    return FactorResult(factors, remainder=n)


def squarefree_part(n: int) -> int:
    """The squarefree s with n = s * m^2 (sign kept)."""
    if n == 0:
        raise ValueError("squarefree part of 0 is undefined")
    sign = -1 if n < 0 else 1
    res = factor_small(n, 10**6)
    if not res.complete:
        raise ValueError(f"could not factor {n} to extract its squarefree part")
    s = 1
    for q, e in res.factors.items():
        if e % 2:
            s *= q
    return sign * s


# --------------------------------------------------------------------------
# resultants

def _qpoly_divmod(a: list, b: list) -> list:
    """Remainder of a by b over Q (lists lowest first, b nonzero, trimmed)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        q = Fraction(a[-1]) / lb
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def resultant(P: IntPoly, Q: IntPoly) -> int:
    """Exact resultant Res(P, Q) = lc(P)^deg Q * prod Q(alpha), P(alpha) = 0.

    Euclidean remainder sequence over the rationals.
    """
    if P.is_zero() or Q.is_zero():
        raise ValueError("resultant of the zero polynomial")
    a: list = list(P.coeffs)
    b: list = list(Q.coeffs)
    acc = Fraction(1)
    while True:
        m, n = len(a) - 1, len(b) - 1
        if n == 0:
            acc *= Fraction(b[0]) ** m
            break
        if m == 0:
            acc *= Fraction(a[0]) ** n
            break
        r = _qpoly_divmod(a, b)
        if not r:
            return 0
        k = len(r) - 1
        # Res(a, b) = (-1)^{mn} lc(b)^{m-k} Res(b, r)
        if (m * n) % 2:
            acc = -acc
        acc *= Fraction(b[-1]) ** (m - k)
        a, b = b, r
    assert acc.denominator == 1
    return int(acc)


def _bareiss_det(mat: list[list[int]]) -> int:
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def resultant_sylvester(P: IntPoly, Q: IntPoly) -> int:
    """Resultant as the determinant of the Sylvester matrix."""
    if P.is_zero() or Q.is_zero():
        raise ValueError("resultant of the zero polynomial")
    m, n = P.degree, Q.degree
    if m == 0 and n == 0:
        return 1
    size = m + n
    ph = list(reversed(P.coeffs))
    qh = list(reversed(Q.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + ph + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qh + [0] * (size - n - 1 - i))
    return _bareiss_det(rows)


# --------------------------------------------------------------------------
# polynomials over F_ell (lists, lowest first)

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_sub(a, b, ell):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % ell for i in range(n)])


def _fp_mul(a, b, ell):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % ell for c in out])


def _fp_divmod(a, b, ell):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv = pow(b[-1], -1, ell)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 1)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % ell
        shift = len(a) - 1 - db
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % ell
        _trim(a)
    return _trim(q), a


def _fp_monic(a, ell):
    inv = pow(a[-1], -1, ell)
    return [c * inv % ell for c in a]


def _fp_gcd(a, b, ell):
    while b:
        a, b = b, _fp_divmod(a, b, ell)[1]
    return _fp_monic(a, ell) if a else a


def _fp_powmod(base, e, mod, ell):
    result = [1]
    base = _fp_divmod(base, mod, ell)[1]
    while e:
        if e & 1:
            result = _fp_divmod(_fp_mul(result, base, ell), mod, ell)[1]
        base = _fp_divmod(_fp_mul(base, base, ell), mod, ell)[1]
        e >>= 1
    return result


def factor_pattern_mod(P: IntPoly, ell: int) -> tuple[tuple[int, int], ...]:
    """Degrees and multiplicities of the irreducible factors of P mod ell.

    Returned as a sorted tuple of ``(degree, multiplicity)`` pairs, one per
    irreducible factor.
    """
    f = P.mod(ell)
    if not f:
        raise ValueError(f"polynomial vanishes mod {ell}")
    if len(f) == 1:
        return ()
    f = _fp_monic(f, ell)
    pattern: list[tuple[int, int]] = []
    rest = f
    x = [0, 1]
    frob = x  # x^(ell^e) mod f
    e = 0
    while len(rest) > 1:
        e += 1
        frob = _fp_powmod(frob, ell, f, ell)
        # product of the distinct irreducible factors of degree e left in rest
        g = _fp_gcd(rest, _fp_sub(frob, x, ell), ell)
        if len(g) <= 1:
            if 2 * e > len(rest) - 1:
                # every factor left has degree > e, so only one is left
                pattern.append((len(rest) - 1, 1))
                break
            continue
        # multiplicities: peel off g-parts repeatedly
        counts: list[int] = []
        r = rest
        while True:
            h = _fp_gcd(r, g, ell)
            if len(h) <= 1:
                break
            counts.append((len(h) - 1) // e)
            r = _fp_divmod(r, h, ell)[0]
        rest = r
        # counts[m-1] = number of degree-e factors with multiplicity >= m
        for m in range(len(counts)):
            nxt = counts[m + 1] if m + 1 < len(counts) else 0
            pattern.extend([(e, m + 1)] * (counts[m] - nxt))
    return tuple(sorted(pattern))


def is_irreducible_pattern(pattern) -> bool:
    return len(pattern) == 1 and pattern[0][1] == 1


class NotSemisimpleError(ValueError):
    """Reduction has a repeated root; pick another sample prime."""


def projective_order(P: IntPoly, ell: int) -> int:
    """Order modulo scalars of a semisimple element with char. poly P mod ell.

    This is the least n >= 1 with x^n congruent to a constant mod P, i.e. the
    lcm of the multiplicative orders of all root ratios alpha_i/alpha_1.
    """
    f = P.mod(ell)
    if len(f) < 2:
        raise ValueError("need a nonconstant polynomial mod ell")
    f = _fp_monic(f, ell)
    if f[0] == 0:
        raise ValueError("zero root: not an invertible class")
    pattern = factor_pattern_mod(IntPoly(f), ell)
    if any(m > 1 for _, m in pattern):
        raise NotSemisimpleError(f"{P} has a repeated factor mod {ell}")
    bound = 1
    for d, _ in pattern:
        bound = lcm(bound, ell**d - 1)
    n = bound
    for q in factor_small(bound).factors:
        while n % q == 0 and len(_fp_powmod([0, 1], n // q, f, ell)) <= 1:
            n //= q
    return n


def quartic_is_irreducible(P: IntPoly) -> bool:
    """Irreducibility over Q of a monic integer quartic with nonzero constant term."""
    if P.degree != 4 or not P.is_monic():
        raise ValueError("expected a monic quartic")
    e0, e1, e2, e3 = P.coeffs[:4]
    if e0 == 0:
        return False
    divs = _divisors(abs(e0))
    for r in divs:
        for s in (r, -r):
            if P(s) == 0:
                return False
    # (x^2 + a x + b)(x^2 + c x + d), b d = e0
    for b0 in divs:
        for b in (b0, -b0):
            d = e0 // b
            if d != b:
                num = e1 - b * e3
                if num % (d - b):
                    continue
                a = num // (d - b)
                c = e3 - a
                if b + d + a * c == e2:
                    return False
            elif e1 == b * e3:
                disc = e3 * e3 - 4 * (e2 - 2 * b)
                if disc >= 0 and isqrt(disc) ** 2 == disc and (e3 + isqrt(disc)) % 2 == 0:
                    return False
    return True


def _divisors(n: int) -> list[int]:
    res = factor_small(n)
    if not res.complete:
        raise ValueError(f"cannot factor {n}")
    divs = [1]
    for q, e in res.factors.items():
        divs = [dv * q**k for dv in divs for k in range(e + 1)]
    return sorted(divs)
