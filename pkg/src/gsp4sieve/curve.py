"""Genus-2 curves y^2 = f(x): reduction, point counts and Frobenius data."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from . import _kernels
from .algebra import IntPoly, is_prime, kronecker

__all__ = [
    "CurveModel",
    "FrobeniusData",
    "BadReductionError",
    "CountingError",
    "parse_curve",
    "load_curve",
    "has_good_reduction",
    "count_points",
    "frobenius_data",
    "frobenius_table",
    "char_poly",
]

DEFAULT_MAX_ELEMENTS = 10**6


class BadReductionError(ValueError):
    pass


class CountingError(RuntimeError):
    """Point counts inconsistent with a genus-2 zeta function."""


@dataclass(frozen=True)
class CurveModel:
    label: str
    f_coeffs: tuple[int, ...]  # c6, c5, ..., c0
    disc: int = field(init=False, compare=False)

    def __post_init__(self):
        if len(self.f_coeffs) != 7:
            raise ValueError("f needs exactly 7 coefficients c6..c0")
        f = IntPoly.from_high(self.f_coeffs)
        if f.degree not in (5, 6):
            raise ValueError(f"deg f must be 5 or 6, got {f.degree}")
        disc = f.discriminant()
        if disc == 0:
            raise ValueError("f is not squarefree")
        object.__setattr__(self, "disc", disc)

    @property
    def f(self) -> IntPoly:
        return IntPoly.from_high(self.f_coeffs)

    @property
    def degree(self) -> int:
        return self.f.degree


@dataclass(frozen=True, order=True)
class FrobeniusData:
    p: int
    a: int
    b: int

    def check_bounds(self) -> bool:
        # |a| <= 4 sqrt(p), |b| <= 6p
        return self.a * self.a <= 16 * self.p and abs(self.b) <= 6 * self.p


def parse_curve(text: str) -> CurveModel:
    """Parse ``label = ...`` / ``f = c6,...,c0`` lines."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value'")
        key, val = (s.strip() for s in line.split("=", 1))
        if key not in ("label", "f"):
            raise ValueError(f"line {lineno}: unknown key {key!r}")
        values[key] = val
    if "f" not in values:
        raise ValueError("curve file has no 'f = ...' line")
    try:
        coeffs = tuple(int(c) for c in values["f"].split(","))
    except ValueError as exc:
        raise ValueError(f"bad coefficient list {values['f']!r}") from exc
    return CurveModel(values.get("label", "unnamed"), coeffs)


def load_curve(path: str | Path) -> CurveModel:
    return parse_curve(Path(path).read_text(encoding="utf-8"))


def has_good_reduction(curve: CurveModel, p: int) -> bool:
    if p == 2 or not is_prime(p):
        return False
    return curve.f.lc % p != 0 and curve.disc % p != 0


def _least_nonresidue(p: int) -> int:
    n = 2
    while kronecker(n, p) != -1:
        n += 1
    return n


def count_points(curve: CurveModel, p: int, k: int = 1, max_elements: int = DEFAULT_MAX_ELEMENTS) -> int:
    """#C(F_{p^k}) of the smooth projective model, k in {1, 2}."""
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    if not has_good_reduction(curve, p):
        raise BadReductionError(f"{curve.label}: p = {p} is not a good odd prime for this model")
    q = p**k
    if q > max_elements:
        raise ValueError(f"F_{p}^{k} has {q} elements, above the cost bound {max_elements}")
    f = curve.f
    nonres = _least_nonresidue(p) if k == 2 else 0
    affine = q + _kernels.char_sum(list(f.coeffs), p, k, nonres)
    lc = f.lc % p
    if f.degree == 5:
        infinity = 1
    elif k == 1:
        infinity = 1 + kronecker(lc, p)
    else:
        # elements of F_p^* are squares in F_{p^2}
        assert pow(lc, (q - 1) // 2, p) == 1
        infinity = 2
    return affine + infinity


def frobenius_data(curve: CurveModel, p: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FrobeniusData:
    n1 = count_points(curve, p, 1, max_elements)
    n2 = count_points(curve, p, 2, max_elements)
    a = p + 1 - n1
    twice_b = n2 - p * p - 1 + a * a
    if twice_b % 2:
        raise CountingError(f"{curve.label}, p = {p}: odd value for 2*b_p ({twice_b})")
    fd = FrobeniusData(p, a, twice_b // 2)
    if not fd.check_bounds():
        raise CountingError(f"{curve.label}, p = {p}: {fd} violates the Weil bounds")
    return fd


def frobenius_table(
    curve: CurveModel,
    primes: Iterable[int],
    workers: int | None = None,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> dict[int, FrobeniusData]:
    """Frobenius data at each good prime, keyed and ordered by p."""
    good = sorted({p for p in primes if has_good_reduction(curve, p)})
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(lambda p: frobenius_data(curve, p, max_elements), good))
    return {fd.p: fd for fd in rows}


def char_poly(fd: FrobeniusData) -> IntPoly:
    """x^4 - a x^3 + b x^2 - p a x + p^2."""
    p, a, b = fd.p, fd.a, fd.b
    return IntPoly([p * p, -p * a, b, -a, 1])

