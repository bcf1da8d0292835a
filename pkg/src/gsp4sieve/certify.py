"""Unconditional large-image certificates and per-prime verdict assembly.

Certificates are statements of the form "for every odd ell outside a finite
exclusion set, if some Kronecker symbols equal -1 then a given subgroup
class is ruled out".  The semiabelian hypothesis behind Le Duff's theorem is
never verified here; it is an input and the report says so.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from enum import Enum
from math import isqrt
from typing import Iterable, Mapping, Sequence

from .algebra import (
    IntPoly,
    factor_pattern_mod,
    factor_small,
    is_irreducible_pattern,
    kronecker,
    quartic_is_irreducible,
    squarefree_part,
)
from .arithdata import ConductorData
from .curve import FrobeniusData, char_poly

__all__ = [
    "CertKind",
    "Certificate",
    "CertificateError",
    "Elimination",
    "resolvent_quadratic",
    "leduff_certificate",
    "case_star_condition",
    "rational_split",
    "rational_split_certificate",
    "trick_odd_exponent",
    "transvection_primes",
    "leduff_witness",
    "eliminate",
    "Family",
    "double_star_routes",
    "build_family",
]


class CertificateError(ValueError):
    pass


class CertKind(str, Enum):
    LEDUFF_FULL = "LeDuffFull"
    CASE_STAR = "CaseStarLegendre"
    RATIONAL_SPLIT = "TrickRationalSplit"
    ODD_EXPONENT = "TrickOddExponent"

    def __str__(self):
        return self.value


_THEOREMS = {
    CertKind.LEDUFF_FULL: "transvection + irreducible Frobenius generate Sp(4) (Le Duff)",
    CertKind.CASE_STAR: "traces of a GL2 x GL2 image would lie in F_ell",
    CertKind.RATIONAL_SPLIT: "rational splitting of Pol_q is incompatible with a GL2(F_ell^2) image",
    CertKind.ODD_EXPONENT: "odd conductor exponent is incompatible with a GL2(F_ell^2) image",
}


@dataclass(frozen=True)
class Certificate:
    """An exclusion statement valid for odd ell not dividing ``excluded``
    and satisfying every ``(D/ell) = -1`` in ``legendre``.

    ``excluded`` always contains 2 and the bad primes passed at
    construction, so ``applies_to`` is false there by construction.
    """

    kind: CertKind
    params: tuple[tuple[str, object], ...]
    legendre: tuple[int, ...] = ()
    excluded: frozenset[int] = frozenset({2})
    excluded_divisor: int = 1  # ell must not divide this integer

    @property
    def theorem(self) -> str:
        return _THEOREMS[self.kind]

    def param(self, key: str):
        return dict(self.params)[key]

    def applies_to(self, ell: int) -> bool:
        if ell == 2 or ell in self.excluded:
            return False
        if self.excluded_divisor % ell == 0:
            return False
        return all(kronecker(D, ell) == -1 for D in self.legendre)

    def condition(self) -> str:
        return ",".join(f"({D}/ell)=-1" for D in self.legendre)

    def label(self) -> str:
        body = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.kind}({body})"


def resolvent_quadratic(fd: FrobeniusData) -> IntPoly:
    """Q_q(x) = x^2 - a x + b - 2q."""
    return IntPoly([fd.b - 2 * fd.p, -fd.a, 1])


def _quad_disc(fd: FrobeniusData) -> int:
    return fd.a * fd.a - 4 * (fd.b - 2 * fd.p)


def _odd_primes_of(n: int) -> frozenset[int]:
    res = factor_small(abs(n))
    if not res.complete:
        raise CertificateError(f"cannot fully factor {n}")
    return frozenset(q for q in res.primes if q % 2)


def leduff_certificate(
    fd_q: FrobeniusData, p: int, phi_p: int | None, bad_primes: Iterable[int] = ()
) -> Certificate:
    """G_ell = GSp(4) for ell not dividing 2 p q Phi(p) with both Legendre symbols -1."""
    if phi_p is None:
        raise CertificateError(f"Phi({p}) is required for a Le Duff certificate")
    if phi_p < 1:
        raise CertificateError("Phi(p) must be a positive integer")
    P = char_poly(fd_q)
    if not quartic_is_irreducible(P):
        raise CertificateError(f"Pol_{fd_q.p} is reducible over Q")
    dq = squarefree_part(P.discriminant())
    dQ = squarefree_part(_quad_disc(fd_q))
    return Certificate(
        CertKind.LEDUFF_FULL,
        (("q", fd_q.p), ("p", p), ("Phi", phi_p), ("disc_q", dq), ("disc_Q", dQ)),
        legendre=(dq, dQ),
        excluded=frozenset({2}) | frozenset(bad_primes),
        excluded_divisor=2 * p * fd_q.p * phi_p,
    )


def case_star_condition(fd_q: FrobeniusData, bad_primes: Iterable[int] = ()) -> Certificate:
    """Case (*) is impossible when (Delta_{Q_q}/ell) = -1, ell not dividing 2q."""
    disc = _quad_disc(fd_q)
    if disc == 0:
        raise CertificateError("resolvent discriminant vanishes")
    dQ = squarefree_part(disc)
    return Certificate(
        CertKind.CASE_STAR,
        (("q", fd_q.p), ("disc_Q", dQ)),
        legendre=(dQ,),
        excluded=frozenset({2}) | frozenset(bad_primes),
        excluded_divisor=2 * fd_q.p,
    )


def rational_split(fd_q: FrobeniusData) -> tuple[int, int] | None:
    """(A, B), A < B, with Pol_q = (x^2 + A x + q)(x^2 + B x + q) over Z."""
    disc = _quad_disc(fd_q)
    if disc <= 0:
        return None
    s = isqrt(disc)
    if s * s != disc or (fd_q.a + s) % 2:
        return None
    # A + B = -a, A B = b - 2q
    A, B = (-fd_q.a - s) // 2, (-fd_q.a + s) // 2
    return A, B


def rational_split_certificate(fd_q: FrobeniusData, bad_primes: Iterable[int] = ()) -> Certificate | None:
    split = rational_split(fd_q)
    if split is None:
        return None
    A, B = split
    return Certificate(
        CertKind.RATIONAL_SPLIT,
        (("q", fd_q.p), ("A", A), ("B", B)),
        excluded=frozenset({2, fd_q.p}) | frozenset(bad_primes),
        excluded_divisor=B - A,
    )


def trick_odd_exponent(cond: ConductorData) -> list[Certificate]:
    """One certificate per prime with odd exact exponent and known Phi."""
    certs = []
    for p, e in sorted(cond.factors.items()):
        if e % 2 == 0:
            continue
        if not cond.exponent_is_exact(p):
            warnings.warn(f"exponent of {p} is only a bound; odd-exponent trick skipped there")
            continue
        if p not in cond.phi:
            continue
        certs.append(
            Certificate(
                CertKind.ODD_EXPONENT,
                (("p", p), ("k", e // 2), ("Phi", cond.phi[p])),
                excluded=frozenset({2}) | cond.bad_primes,
                excluded_divisor=p * cond.phi[p],
            )
        )
    return certs


def transvection_primes(cond: ConductorData) -> dict[int, int]:
    """Semiabelian primes with known Phi: p -> Phi(p)."""
    return {p: cond.phi[p] for p in sorted(cond.semiabelian_at) if p in cond.phi}


# ---------------------------------------------------------------------------
# direct elimination

@dataclass(frozen=True)
class Elimination:
    ell: int
    q: int
    p: int
    phi: int
    pattern: tuple[tuple[int, int], ...]
    legendre: tuple[int, int] | None  # (Delta_q/ell), (Delta_Qq/ell) when defined

    def label(self) -> str:
        return f"LeDuffFull(q={self.q},p={self.p},Phi={self.phi})"


def leduff_witness(ell: int, fd_q: FrobeniusData, p: int, phi: int) -> Elimination | None:
    """Irreducibility of Pol_q mod ell, with ell not dividing 2 p q Phi(p)."""
    if ell == 2 or (2 * p * fd_q.p * phi) % ell == 0:
        return None
    P = char_poly(fd_q)
    pattern = factor_pattern_mod(P, ell)
    irreducible = is_irreducible_pattern(pattern)
    dq, dQ = P.discriminant(), _quad_disc(fd_q)
    legendre = None
    if (dq * dQ) % ell:
        legendre = (kronecker(dq, ell), kronecker(dQ, ell))
        if irreducible != (legendre == (-1, -1)):
            raise AssertionError(f"Legendre criterion disagrees with factorization of Pol_{fd_q.p} mod {ell}")
    elif irreducible:
        raise AssertionError(f"Pol_{fd_q.p} irreducible mod {ell} despite a vanishing discriminant")
    if not irreducible:
        return None
    return Elimination(ell, fd_q.p, p, phi, pattern, legendre)


def eliminate(
    candidates: Iterable[int],
    transvections: Mapping[int, int],
    samples: Sequence[FrobeniusData],
) -> dict[int, Elimination]:
    """Discharge each candidate with some (semiabelian p, q) pair.

    Only Frobenius polynomials irreducible over Q are used.  The first
    witness in (q, p) order wins, so the result is deterministic.
    """
    usable = sorted((fd for fd in samples if quartic_is_irreducible(char_poly(fd))), key=lambda fd: fd.p)
    out: dict[int, Elimination] = {}
    for ell in sorted(set(candidates)):
        for fd in usable:
            hit = None
            for p, phi in sorted(transvections.items()):
                hit = leduff_witness(ell, fd, p, phi)
                if hit:
                    break
            if hit:
                out[ell] = hit
                break
    return out


@dataclass
class Family:
    """Unconditional statement: maximal for ell > 3 with the Legendre
    conditions, except for the listed primes."""

    legendre: tuple[int, ...]
    star: Certificate
    double_star: list[str] = field(default_factory=list)
    exceptions: frozenset[int] = frozenset()

    def condition(self) -> str:
        return ",".join(f"({D}/ell)=-1" for D in self.legendre)

    def contains(self, ell: int) -> bool:
        return ell > 3 and ell not in self.exceptions and self.star.applies_to(ell)


def double_star_routes(
    transvections: Mapping[int, int], certs: Sequence[Certificate]
) -> list[tuple[str, object]]:
    """Ways to rule out a GL2(F_ell^2) image: (label, predicate on ell).

    A transvection already does it, since that group contains none.
    """
    routes: list[tuple[str, object]] = []
    for p, phi in sorted(transvections.items()):
        routes.append((f"transvection(p={p})", lambda ell, p=p, phi=phi: ell != p and phi % ell != 0))
    for c in certs:
        if c.kind in (CertKind.RATIONAL_SPLIT, CertKind.ODD_EXPONENT):
            routes.append((c.label(), c.applies_to))
    return routes


def _route_blind_spots(transvections: Mapping[int, int], certs: Sequence[Certificate]) -> set[int]:
    spots: set[int] = set()
    for p, phi in transvections.items():
        spots |= {p} | _odd_primes_of(phi)
    for c in certs:
        if c.kind in (CertKind.RATIONAL_SPLIT, CertKind.ODD_EXPONENT):
            spots |= set(c.excluded) | _odd_primes_of(c.excluded_divisor)
    return {q for q in spots if q > 2}


def build_family(
    star: Certificate,
    transvections: Mapping[int, int],
    certs: Sequence[Certificate],
    unconditional_candidates: Iterable[int],
    eliminated: Iterable[int] = (),
) -> Family | None:
    """Combine a case (*) certificate with the (**) routes; None if (**) has no route."""
    routes = double_star_routes(transvections, certs)
    if not routes:
        return None
    uncovered = {ell for ell in _route_blind_spots(transvections, certs) if not any(r(ell) for _, r in routes)}
    done = set(eliminated)
    exceptions = frozenset(
        ell
        for ell in set(unconditional_candidates) | uncovered
        if ell > 3 and ell not in done and star.applies_to(ell)
    )
    return Family(star.legendre, star, [name for name, _ in routes], exceptions)
