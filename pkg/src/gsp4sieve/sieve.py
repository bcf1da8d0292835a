"""The exceptional-prime sieve.

Each case turns Frobenius data at sample primes p into obstruction integers;
a prime ell survives a case when it divides the obstruction at every sample
p != ell (Frobenius at ell itself says nothing about the mod-ell image).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Iterable, Sequence

from .algebra import IntPoly, NotSemisimpleError, factor_small, projective_order, resultant
from .arithdata import QuadChar, mult_order
from .curve import FrobeniusData, char_poly
from .heckedata import HeckeTable, product_charpoly

__all__ = [
    "CaseId",
    "SieveVerdict",
    "CandidateSet",
    "case_onedim",
    "case_related_pair",
    "related_pair_poly",
    "case_quadchar",
    "case_exceptional",
    "case_hecke",
    "surviving_primes",
    "onedim_verdict",
    "related_pair_verdict",
    "quadchar_verdict",
    "hecke_verdict",
    "exceptional_verdict",
    "aggregate",
]

FACTOR_BOUND = 10**6


class CaseId(str, Enum):
    ONE_DIM = "OneDim"
    RELATED_PAIR_1 = "RelatedPairCase1"
    RELATED_PAIR_2 = "RelatedPairCase2"
    HECKE_PAIR = "HeckePair"
    QUAD_CHAR = "QuadCharStabilizer"
    EXCEPTIONAL_5 = "Exceptional5"
    EXCEPTIONAL_7 = "Exceptional7"

    def __str__(self):
        return self.value


CASE_ORDER = list(CaseId)


@dataclass
class SieveVerdict:
    """Outcome of one sieve case.

    ``odd_survivors`` holds every odd prime passing the case test;
    ``survivors`` keeps only those the method applies to (ell > 3, good).
    ``all_primes`` means the samples excluded nothing at all.
    """

    case_id: CaseId
    evidence: list[tuple[object, int]] = field(default_factory=list)
    odd_survivors: frozenset[int] = frozenset()
    survivors: frozenset[int] = frozenset()
    complete: bool = True
    all_primes: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def serre_dependent(self) -> bool:
        return self.case_id is CaseId.HECKE_PAIR


# ---------------------------------------------------------------------------
# obstruction integers

def case_onedim(fd: FrobeniusData, d: int) -> int:
    p, a, b = fd.p, fd.a, fd.b
    if gcd(p, d) != 1:
        raise ValueError(f"p = {p} is not coprime to d = {d}")
    if (p - 1) % d == 0:
        return b - a * (p + 1) + p * p + 1
    f = mult_order(p, d)
    return resultant(char_poly(fd), IntPoly.x_pow_minus_one(f))


def related_pair_poly(fd: FrobeniusData, variant: int) -> IntPoly:
    """The quartic in eps whose vanishing mod ell encodes the factorization.

    variant 1: (eps b - 1 - p^2 eps^2)(p eps + 1)^2 - a^2 p eps^2
    variant 2: (eps b - p - p eps^2)(eps + 1)^2 - a^2 eps^2
    """
    p, a, b = fd.p, fd.a, fd.b
    e = IntPoly([0, 1])
    if variant == 1:
        return (b * e - 1 - p * p * e * e) * (p * e + 1) ** 2 - a * a * p * e * e
    if variant == 2:
        return (b * e - p - p * e * e) * (e + 1) ** 2 - a * a * e * e
    raise ValueError("variant must be 1 or 2")


def case_related_pair(fd: FrobeniusData, d: int, variant: int) -> int:
    p, a, b = fd.p, fd.a, fd.b
    if gcd(p, d) != 1:
        raise ValueError(f"p = {p} is not coprime to d = {d}")
    if (p - 1) % d == 0:
        if variant == 1:
            return (b - 1 - p * p) * (p + 1) ** 2 - a * a * p
        if variant == 2:
            return 4 * (b - 2 * p) - a * a
        raise ValueError("variant must be 1 or 2")
    f = mult_order(p, d)
    return resultant(related_pair_poly(fd, variant), IntPoly.x_pow_minus_one(f))


def case_quadchar(phi: QuadChar, samples: Iterable[FrobeniusData]) -> int:
    """gcd of |a_p| over samples with phi(p) = -1, a_p != 0; 0 when none."""
    g = 0
    for fd in samples:
        if fd.a and phi(fd.p) == -1:
            g = gcd(g, fd.a)
    return g


def case_hecke(table: HeckeTable, S: Iterable[int], samples: Sequence[FrobeniusData]) -> frozenset[int]:
    v = hecke_verdict(table, S, samples)
    return v.odd_survivors if not v.all_primes else frozenset()


def hecke_value(C: IntPoly, fd: FrobeniusData) -> int:
    return resultant(product_charpoly(C, fd.p), char_poly(fd))


@dataclass
class ExceptionalResult:
    cleared: bool
    complete: bool
    witness: tuple[int, int] | None = None
    orders: list[tuple[int, int]] = field(default_factory=list)


def case_exceptional(samples: Sequence[FrobeniusData], ell: int, allowed_orders) -> ExceptionalResult:
    """Cleared when some sample has projective order outside ``allowed_orders``."""
    orders = []
    for fd in samples:
        if fd.p == ell:
            continue
        try:
            n = projective_order(char_poly(fd), ell)
        except NotSemisimpleError:
            continue
        orders.append((fd.p, n))
        if n not in allowed_orders:
            return ExceptionalResult(True, True, (fd.p, n), orders)
    return ExceptionalResult(False, bool(orders), None, orders)


# ---------------------------------------------------------------------------
# survivor extraction

def surviving_primes(
    evidence: Sequence[tuple[int, int]], factor_bound: int = FACTOR_BOUND
) -> tuple[frozenset[int], bool, bool]:
    """Odd primes ell dividing the value at every sample p != ell.

    Returns ``(primes, complete, all_primes)``.
    """
    if not evidence:
        return frozenset(), False, True
    g = 0
    for _, v in evidence:
        g = gcd(g, v)
    if g == 0:
        return frozenset(), False, True
    res = factor_small(g, factor_bound)
    found = {q for q in res.primes if q % 2}
    for p, _ in evidence:
        others = 0
        for q, v in evidence:
            if q != p:
                others = gcd(others, v)
        if others % p == 0:  # includes the vacuous case others == 0
            found.add(p)
    return frozenset(found), res.complete, False


def _restrict(primes: Iterable[int], bad: frozenset[int]) -> frozenset[int]:
    return frozenset(q for q in primes if q > 3 and q not in bad)


def _coprime_samples(samples, d):
    return [fd for fd in samples if gcd(fd.p, d) == 1]


def onedim_verdict(samples: Sequence[FrobeniusData], d: int, bad: frozenset[int]) -> SieveVerdict:
    usable = _coprime_samples(samples, d)
    ev = [(fd.p, case_onedim(fd, d)) for fd in usable]
    return _verdict(CaseId.ONE_DIM, ev, bad)


def related_pair_verdict(samples: Sequence[FrobeniusData], d: int, variant: int, bad: frozenset[int]) -> SieveVerdict:
    usable = _coprime_samples(samples, d)
    case = CaseId.RELATED_PAIR_1 if variant == 1 else CaseId.RELATED_PAIR_2
    ev = [(fd.p, case_related_pair(fd, d, variant)) for fd in usable]
    return _verdict(case, ev, bad)


def _verdict(case: CaseId, ev, bad) -> SieveVerdict:
    odd, complete, all_primes = surviving_primes(ev)
    v = SieveVerdict(case, ev, odd, _restrict(odd, bad), complete and bool(ev), all_primes)
    if not ev:
        v.notes.append("no usable sample primes")
    elif all_primes:
        v.notes.append("every obstruction value is 0; more samples needed")
    elif not complete:
        v.notes.append("obstruction gcd has an unfactored part; survivor list may be incomplete")
    return v


def quadchar_verdict(chars: Sequence[QuadChar], samples: Sequence[FrobeniusData], bad: frozenset[int]) -> SieveVerdict:
    v = SieveVerdict(CaseId.QUAD_CHAR)
    odd: set[int] = set()
    for phi in chars:
        ev = [(fd.p, fd.a) for fd in samples if fd.a and phi(fd.p) == -1]
        g = case_quadchar(phi, samples)
        v.evidence.append((phi.D, g))
        primes, complete, all_primes = surviving_primes(ev)
        if all_primes:
            v.all_primes = True
            v.complete = False
            v.notes.append(f"{phi}: no sample with phi(p) = -1 and a_p != 0")
            continue
        if not complete:
            v.complete = False
        odd |= primes
    v.odd_survivors = frozenset(odd)
    v.survivors = _restrict(odd, bad)
    return v


def hecke_verdict(table: HeckeTable, S: Iterable[int], samples: Sequence[FrobeniusData], bad: frozenset[int] = frozenset()) -> SieveVerdict:
    v = SieveVerdict(CaseId.HECKE_PAIR)
    odd: set[int] = set()
    missing = []
    for t in sorted(S):
        ev = []
        for fd in samples:
            if t % fd.p == 0:
                continue
            C = table.charpoly(t, fd.p)
            if C is None:
                continue
            val = hecke_value(C, fd)
            ev.append((fd.p, val))
            v.evidence.append((f"t={t},p={fd.p}", val))
        if not ev:
            missing.append(t)
            continue
        if table.dims.get(t) == 0:
            v.notes.append(f"level {t}: S_2 is zero, nothing survives")
            continue
        primes, complete, all_primes = surviving_primes(ev)
        if all_primes:
            v.all_primes = True
            v.complete = False
            v.notes.append(f"level {t}: every resultant vanishes")
            continue
        if not complete:
            v.complete = False
            v.notes.append(f"level {t}: unfactored part in the resultant gcd")
        odd |= primes
    if missing:
        v.all_primes = True
        v.complete = False
        shown = ", ".join(map(str, missing[:6])) + (", ..." if len(missing) > 6 else "")
        v.notes.append(f"no Hecke data for any sample prime at {len(missing)} level(s): {shown}")
    v.odd_survivors = frozenset(odd)
    v.survivors = _restrict(odd, bad)
    return v


def exceptional_verdict(samples: Sequence[FrobeniusData], ell: int, allowed_orders) -> SieveVerdict:
    case = CaseId.EXCEPTIONAL_5 if ell == 5 else CaseId.EXCEPTIONAL_7
    res = case_exceptional(samples, ell, allowed_orders)
    v = SieveVerdict(case, [(p, n) for p, n in res.orders])
    if res.cleared:
        p, n = res.witness
        v.notes.append(f"Frob_{p} has projective order {n} in PGSp(4, F_{ell}); no exceptional group has it")
    else:
        v.odd_survivors = v.survivors = frozenset([ell])
        v.complete = res.complete
        v.notes.append("no sample excludes the exceptional groups" if res.complete else "no usable samples")
    return v


# ---------------------------------------------------------------------------
# aggregation

@dataclass
class CandidateSet:
    """Union of survivors with per-prime provenance."""

    provenance: dict[int, list[CaseId]]
    not_analyzed: frozenset[int]
    unresolved: list[CaseId]
    assume_serre: bool
    notes: list[str] = field(default_factory=list)

    @property
    def primes(self) -> frozenset[int]:
        return frozenset(self.provenance)

    def unconditional_primes(self) -> frozenset[int]:
        """Candidates from cases that do not rely on Serre's conjecture."""
        return frozenset(
            ell for ell, cases in self.provenance.items() if any(c is not CaseId.HECKE_PAIR for c in cases)
        )


def aggregate(verdicts: Sequence[SieveVerdict], bad_primes: Iterable[int], assume_serre: bool = False) -> CandidateSet:
    bad = frozenset(bad_primes)
    prov: dict[int, list[CaseId]] = {}
    unresolved = []
    for v in sorted(verdicts, key=lambda v: CASE_ORDER.index(v.case_id)):
        if v.all_primes:
            unresolved.append(v.case_id)
        for ell in sorted(v.survivors):
            prov.setdefault(ell, []).append(v.case_id)
    notes = [
        "twisted-cubic stabilizer: excluded a priori (incompatible with the inertia description at ell)",
    ]
    if any(v.case_id is CaseId.HECKE_PAIR for v in verdicts):
        notes.append("HeckePair exclusions are conditional on Serre's conjecture")
    return CandidateSet(
        provenance=dict(sorted(prov.items())),
        not_analyzed=frozenset({2, 3}) | bad,
        unresolved=unresolved,
        assume_serre=assume_serre,
        notes=notes,
    )
