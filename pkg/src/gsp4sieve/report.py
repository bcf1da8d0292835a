"""Run the full sieve for one curve and render the result.

The rendered report has a human-readable part followed by machine lines,
one per prime or statement::

    CANDIDATE ell=<l> case=<id>[,<id>...]
    ELIMINATED ell=<l> by=<certificate>
    NOT-ANALYZED ell=<l> [survives=<id>,...]
    MAXIMAL ell=<l> basis=conditional|family
    FAMILY cond="(D/ell)=-1[,...]" verdict=maximal range=ell>3 except=<l,...|->
    SUMMARY <text>

Every prime listed gets exactly one of the first four line types.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence

from ._orders import ALLOWED_PROJECTIVE_ORDERS
from .algebra import is_prime, primes_up_to, quartic_is_irreducible
from .arithdata import ConductorData, max_square_divisor_root, quad_chars, special_divisors
from .certify import (
    Certificate,
    CertificateError,
    Elimination,
    Family,
    build_family,
    case_star_condition,
    eliminate,
    leduff_certificate,
    rational_split_certificate,
    transvection_primes,
    trick_odd_exponent,
)
from .curve import CurveModel, FrobeniusData, char_poly, frobenius_table, has_good_reduction
from .heckedata import HeckeTable
from .sieve import (
    CaseId,
    CandidateSet,
    SieveVerdict,
    aggregate,
    exceptional_verdict,
    hecke_verdict,
    onedim_verdict,
    quadchar_verdict,
    related_pair_verdict,
)

__all__ = [
    "VerdictClass",
    "AnalysisConfig",
    "Report",
    "analyze",
    "render",
    "parse_machine_lines",
    "summary_statement",
]

SAMPLE_KINDS = ("reducible", "hecke", "quadchar", "certificate", "exceptional")
REDUCIBLE_UNRESOLVED = "ReducibleUnresolved"


class VerdictClass(str, Enum):
    NOT_ANALYZED = "not analyzed"
    CANDIDATE = "candidate exceptional"
    CONDITIONAL = "proven maximal (conditional on Serre)"
    UNCONDITIONAL = "proven maximal (unconditional)"
    FAMILY = "covered by Legendre family"

    def __str__(self):
        return self.value


@dataclass
class AnalysisConfig:
    curve: CurveModel
    conductor: ConductorData
    samples: Mapping[str, Sequence[int]]
    hecke: HeckeTable | None = None
    assume_serre: bool = False
    star: Sequence[int] = ()
    table_bound: int = 50
    workers: int | None = None
    allowed_orders: frozenset[int] = ALLOWED_PROJECTIVE_ORDERS


@dataclass
class Report:
    config: AnalysisConfig
    d: int
    S: frozenset[int]
    frobenius: dict[int, FrobeniusData]
    verdicts: list[SieveVerdict]
    candidates: CandidateSet
    certificates: list[Certificate]
    eliminated: dict[int, Elimination]
    families: list[Family]
    table: dict[int, tuple[VerdictClass, str]]
    summary: str
    warnings: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def incomplete(self) -> bool:
        return bool(self.warnings)


# ---------------------------------------------------------------------------
# analysis

def _usable_primes(curve: CurveModel, cond: ConductorData, primes, warnings_: list[str]) -> list[int]:
    out = []
    for p in sorted(set(primes)):
        if p in cond.bad_primes or not has_good_reduction(curve, p):
            warnings_.append(f"sample p = {p} skipped: bad reduction for the model or conductor")
            continue
        out.append(p)
    return out


def analyze(cfg: AnalysisConfig) -> Report:
    warns: list[str] = []
    cond = cfg.conductor
    bad = cond.bad_primes
    samples = {k: tuple(cfg.samples.get(k, ())) for k in SAMPLE_KINDS}
    if not samples["exceptional"]:
        samples["exceptional"] = tuple(sorted({p for k in SAMPLE_KINDS for p in samples[k]}))
    all_primes = {p for v in samples.values() for p in v}
    if not all_primes:
        raise ValueError("no sample primes given")
    for p in all_primes:
        if not is_prime(p):
            raise ValueError(f"sample {p} is not prime")
    good = set(_usable_primes(cfg.curve, cond, all_primes, warns))
    frob = frobenius_table(cfg.curve, sorted(good), workers=cfg.workers)

    def pick(kind):
        return [frob[p] for p in samples[kind] if p in frob]

    d = max_square_divisor_root(cond)
    S = special_divisors(cond)
    verdicts = [
        onedim_verdict(pick("reducible"), d, bad),
        related_pair_verdict(pick("reducible"), d, 1, bad),
        related_pair_verdict(pick("reducible"), d, 2, bad),
    ]
    if cfg.hecke is None:
        warns.append("HeckePair case skipped: no Hecke tables supplied")
    else:
        verdicts.append(hecke_verdict(cfg.hecke, S, pick("hecke"), bad))
    verdicts.append(quadchar_verdict(quad_chars(bad), pick("quadchar"), bad))
    for ell in (5, 7):
        if ell not in bad:
            verdicts.append(exceptional_verdict(pick("exceptional"), ell, cfg.allowed_orders))
    for v in verdicts:
        if not v.complete:
            for n in v.notes or ["incomplete"]:
                warns.append(f"{v.case_id}: {n}")
    cands = aggregate(verdicts, bad, cfg.assume_serre)

    # certificates
    trans = transvection_primes(cond)
    cert_fds = pick("certificate")
    certs: list[Certificate] = []
    for fd in cert_fds:
        for p, phi in trans.items():
            try:
                certs.append(leduff_certificate(fd, p, phi, bad))
            except CertificateError:
                pass
    star_qs = set(cfg.star) or {fd.p for fd in cert_fds}
    stars = []
    for fd in cert_fds:
        if fd.p in star_qs and quartic_is_irreducible(char_poly(fd)):
            try:
                stars.append(case_star_condition(fd, bad))
            except CertificateError:
                pass
    certs += stars
    splits = [c for c in (rational_split_certificate(fd, bad) for fd in cert_fds) if c]
    certs += splits
    certs += trick_odd_exponent(cond)
    double_star = [c for c in certs if c.kind.value in ("TrickRationalSplit", "TrickOddExponent")]

    targets = set(cands.primes) | {q for q in cands.not_analyzed if q % 2}
    eliminated = eliminate(targets, trans, cert_fds)

    uncond = cands.unconditional_primes()
    non_hecke_unresolved = [c for c in cands.unresolved if c is not CaseId.HECKE_PAIR]
    families: list[Family] = []
    if non_hecke_unresolved:
        if stars:
            warns.append("Legendre families withheld: some non-Hecke case is unresolved")
    else:
        seen = set()
        for star in stars:
            fam = build_family(star, trans, double_star, uncond, eliminated)
            if fam is not None and fam.legendre not in seen:
                seen.add(fam.legendre)
                families.append(fam)

    table = _partition(cfg, cands, eliminated, families, verdicts)
    rep = Report(
        cfg, d, S, frob, verdicts, cands, certs, eliminated, families, table, "", warns, list(cands.notes)
    )
    rep.summary = summary_statement(rep)
    if trans:
        rep.notes.append(
            "assumes semiabelian reduction at p = "
            + ", ".join(map(str, trans))
            + " as supplied (transvections in the image)"
        )
        rep.notes.append(
            "irreducibility of the mod-2 representation (isolation in the isogeny class) is out of algorithmic reach"
        )
    if any(v.case_id in (CaseId.EXCEPTIONAL_5, CaseId.EXCEPTIONAL_7) for v in verdicts):
        rep.notes.append("exceptional-group orders include doubled orders for index-2 extensions (conservative)")
    return rep


def _partition(cfg, cands: CandidateSet, eliminated, families, verdicts) -> dict[int, tuple[VerdictClass, str]]:
    uncond = cands.unconditional_primes()
    unresolved = [str(c) for c in cands.unresolved]
    bad_survivors: dict[int, list[str]] = {}
    for v in verdicts:
        for ell in v.odd_survivors:
            if ell in cands.not_analyzed:
                bad_survivors.setdefault(ell, []).append(str(v.case_id))
    primes = set(primes_up_to(cfg.table_bound)) | set(cands.primes) | set(cands.not_analyzed) | set(eliminated)
    out: dict[int, tuple[VerdictClass, str]] = {}
    for ell in sorted(primes):
        if ell in eliminated:
            out[ell] = (VerdictClass.UNCONDITIONAL, eliminated[ell].label())
        elif ell in cands.not_analyzed:
            out[ell] = (VerdictClass.NOT_ANALYZED, ",".join(bad_survivors.get(ell, [])))
        elif ell in uncond:
            out[ell] = (VerdictClass.CANDIDATE, ",".join(map(str, cands.provenance[ell])))
        elif any(f.contains(ell) for f in families):
            fam = next(f for f in families if f.contains(ell))
            out[ell] = (VerdictClass.FAMILY, fam.condition())
        elif ell in cands.provenance:
            out[ell] = (VerdictClass.CANDIDATE, ",".join(map(str, cands.provenance[ell])))
        elif unresolved:
            out[ell] = (VerdictClass.CANDIDATE, ",".join(unresolved))
        elif cfg.assume_serre and cfg.hecke is not None:
            out[ell] = (VerdictClass.CONDITIONAL, "")
        else:
            out[ell] = (VerdictClass.CANDIDATE, REDUCIBLE_UNRESOLVED)
    return out


def _exception_phrase(rest: Sequence[int]) -> str:
    if not rest:
        return ""
    if len(rest) == 1:
        return f", ℓ ≠ {rest[0]}"
    return ", ℓ ∉ {" + ", ".join(map(str, rest)) + "}"


def summary_statement(rep: Report) -> str:
    """One sentence for all ell, e.g. "maximal for every ℓ > 5, ℓ ≠ 23"."""
    cfg = rep.config
    generic_ok = cfg.assume_serre and cfg.hecke is not None and not rep.candidates.unresolved
    if not generic_ok:
        if rep.families:
            fams = "; ".join(_family_text(f) for f in rep.families)
            return "unconditional: " + fams
        reason = "Serre's conjecture not assumed" if not cfg.assume_serre else "analysis incomplete"
        return f"no statement for all large ℓ ({reason})"
    open_ = sorted({2} | {ell for ell, (c, _) in rep.table.items() if c in (VerdictClass.CANDIDATE, VerdictClass.NOT_ANALYZED)})
    k, i = 2, 0
    ps = primes_up_to(max(open_) + 1) if open_ else [2]
    while i < len(ps) and ps[i] in open_:
        k = ps[i]
        i += 1
    rest = [q for q in open_ if q > k]
    return f"maximal for every ℓ > {k}{_exception_phrase(rest)} (assuming Serre's conjecture)"


def _family_text(f: Family) -> str:
    cond = " and ".join(f"({D}/ℓ) = −1" for D in f.legendre)
    exc = _exception_phrase(sorted(f.exceptions))
    return f"{cond} ⇒ maximal for ℓ > 3{exc}"


# ---------------------------------------------------------------------------
# rendering

def _short(n: int) -> str:
    if abs(n) < 10**48:
        return str(n)
    # str() of huge ints is slow and capped by the interpreter
    sign = "-" if n < 0 else ""
    return f"{sign}<{abs(n).bit_length()}-bit integer, last digits ...{abs(n) % 10**8:08d}>"


def render(rep: Report) -> str:
    cfg = rep.config
    cond = cfg.conductor
    L: list[str] = []
    L.append(f"# gsp4sieve report: curve {cfg.curve.label}")
    L.append("")
    L.append("## Inputs")
    L.append(f"curve: y^2 = {cfg.curve.f}")
    bound = f" (bound at {', '.join(map(str, sorted(cond.bound_at)))})" if cond.bound_at else ""
    L.append(f"conductor: {cond.expression()}{bound}")
    if cond.phi:
        L.append("Phi: " + ", ".join(f"Phi({p}) = {v}" for p, v in sorted(cond.phi.items())))
    if cond.semiabelian_at:
        L.append("semiabelian (asserted): " + ", ".join(map(str, sorted(cond.semiabelian_at))))
    L.append(f"d = {rep.d}, S = {{{', '.join(map(str, sorted(rep.S)))}}}")
    for kind in SAMPLE_KINDS:
        vals = cfg.samples.get(kind, ())
        if vals:
            L.append(f"samples[{kind}]: {', '.join(map(str, vals))}")
    L.append(f"assume Serre: {'yes' if cfg.assume_serre else 'no'}")
    L.append(f"Hecke tables: {'yes' if cfg.hecke is not None else 'none'}")
    L.append("")
    L.append("## Frobenius data")
    for p, fd in sorted(rep.frobenius.items()):
        L.append(f"p = {p}: a = {fd.a}, b = {fd.b}, Pol = {char_poly(fd)}")
    L.append("")
    L.append("## Sieve cases")
    for v in rep.verdicts:
        tag = " [conditional on Serre]" if v.serre_dependent else ""
        status = "complete" if v.complete else "INCOMPLETE"
        L.append(f"### {v.case_id}{tag} ({status})")
        for key, val in v.evidence:
            L.append(f"  {key}: {_short(val)}")
        L.append(f"  odd survivors: {sorted(v.odd_survivors)}; candidates: {sorted(v.survivors)}")
        for n in v.notes:
            L.append(f"  note: {n}")
    L.append("")
    L.append("## Certificates")
    if not rep.certificates:
        L.append("(none)")
    for c in rep.certificates:
        cond_s = f" when {c.condition()}" if c.legendre else ""
        L.append(f"- {c.label()}{cond_s}: {c.theorem}")
    L.append("")
    L.append("## Per-prime verdicts")
    for ell, (cls, why) in rep.table.items():
        L.append(f"ℓ = {ell}: {cls}" + (f" [{why}]" if why else ""))
    L.append("")
    if rep.families:
        L.append("## Unconditional families")
        for f in rep.families:
            L.append(f"- {_family_text(f)}; case (**) via {', '.join(f.double_star)}")
        L.append("")
    L.append("## Summary")
    L.append(rep.summary)
    L.append("")
    if rep.notes:
        L.append("## Notes")
        L += [f"- {n}" for n in rep.notes]
        L.append("")
    if rep.warnings:
        L.append("## Warnings")
        L += [f"- {w}" for w in rep.warnings]
        L.append("")
    L.append("## Machine lines")
    L += machine_lines(rep)
    return "\n".join(L) + "\n"


def machine_lines(rep: Report) -> list[str]:
    out = []
    for ell, (cls, why) in rep.table.items():
        if cls is VerdictClass.CANDIDATE:
            out.append(f"CANDIDATE ell={ell} case={why}")
        elif cls is VerdictClass.UNCONDITIONAL:
            out.append(f"ELIMINATED ell={ell} by={why}")
        elif cls is VerdictClass.NOT_ANALYZED:
            out.append(f"NOT-ANALYZED ell={ell}" + (f" survives={why}" if why else ""))
        elif cls is VerdictClass.CONDITIONAL:
            out.append(f"MAXIMAL ell={ell} basis=conditional")
        else:
            out.append(f"MAXIMAL ell={ell} basis=family")
    for f in rep.families:
        exc = ",".join(map(str, sorted(f.exceptions))) or "-"
        out.append(f'FAMILY cond="{f.condition()}" verdict=maximal range=ell>3 except={exc}')
    out.append(f"SUMMARY {rep.summary}")
    return out


@dataclass
class MachineSummary:
    candidates: dict[int, tuple[str, ...]]
    partition: dict[int, VerdictClass]
    families: list[tuple[str, tuple[int, ...]]]
    summary: str


_LINE = re.compile(r"^(CANDIDATE|ELIMINATED|NOT-ANALYZED|MAXIMAL) ell=(\d+)(?: (\w+)=(\S+))?$")
_FAM = re.compile(r'^FAMILY cond="([^"]*)" verdict=maximal range=ell>3 except=(\S+)$')


def parse_machine_lines(text: str) -> MachineSummary:
    cands: dict[int, tuple[str, ...]] = {}
    part: dict[int, VerdictClass] = {}
    fams: list[tuple[str, tuple[int, ...]]] = []
    summary = ""
    for line in text.splitlines():
        m = _LINE.match(line)
        if m:
            kind, ell, val = m.group(1), int(m.group(2)), m.group(4)
            if ell in part:
                raise ValueError(f"prime {ell} listed twice")
            if kind == "CANDIDATE":
                cands[ell] = tuple(val.split(","))
                part[ell] = VerdictClass.CANDIDATE
            elif kind == "ELIMINATED":
                part[ell] = VerdictClass.UNCONDITIONAL
            elif kind == "NOT-ANALYZED":
                part[ell] = VerdictClass.NOT_ANALYZED
            else:
                part[ell] = VerdictClass.CONDITIONAL if val == "conditional" else VerdictClass.FAMILY
            continue
        m = _FAM.match(line)
        if m:
            exc = () if m.group(2) == "-" else tuple(int(x) for x in m.group(2).split(","))
            fams.append((m.group(1), exc))
        elif line.startswith("SUMMARY "):
            summary = line[len("SUMMARY "):]
    return MachineSummary(cands, part, fams, summary)
