"""Hecke characteristic-polynomial tables for S_2(Gamma_0(t)).

Table files are plain text, one directive per line::

    # comment
    dim <t> <n>                    dimension of S_2(Gamma_0(t))
    T <t> <p> : <c_n>,...,<c_0>    char. poly of T_p on the full space

The polynomial covers the whole space, oldforms included with their
standard degeneracy multiplicities; producing it that way is the table
generator's job.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from math import comb
from pathlib import Path

import numpy as np

from .algebra import IntPoly

__all__ = [
    "HeckeTable",
    "HeckeTableError",
    "parse_hecke_table",
    "load_hecke_dir",
    "product_charpoly",
]


class HeckeTableError(ValueError):
    pass


@dataclass
class HeckeTable:
    entries: dict[tuple[int, int], IntPoly] = field(default_factory=dict)
    dims: dict[int, int] = field(default_factory=dict)
    sources: dict[int, str] = field(default_factory=dict)

    def charpoly(self, t: int, p: int) -> IntPoly | None:
        """C_{t,p}, or None when the table lacks it.  Zero-dimensional
        levels give the constant 1 for every p."""
        if (t, p) in self.entries:
            return self.entries[(t, p)]
        if self.dims.get(t) == 0:
            return IntPoly([1])
        return None

    def merge(self, other: "HeckeTable") -> None:
        for t, n in other.dims.items():
            if t in self.dims and self.dims[t] != n:
                raise HeckeTableError(f"conflicting dimensions for level {t}")
            self.dims[t] = n
        for key, poly in other.entries.items():
            if key in self.entries:
                raise HeckeTableError(f"duplicate entry for level {key[0]}, p = {key[1]}")
            self.entries[key] = poly
        self.sources.update(other.sources)


def parse_hecke_table(text: str, source: str = "<string>") -> HeckeTable:
    table = HeckeTable()
    pending: list[tuple[int, int, int, IntPoly]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "dim" and len(parts) == 3:
                t, n = int(parts[1]), int(parts[2])
                if t < 1 or n < 0:
                    raise ValueError
                if t in table.dims and table.dims[t] != n:
                    raise HeckeTableError(f"{source}:{lineno}: conflicting dimension for level {t}")
                table.dims[t] = n
                table.sources[t] = source
            elif parts[0] == "T":
                head, _, tail = line.partition(":")
                hp = head.split()
                if len(hp) != 3 or not tail.strip():
                    raise ValueError
                t, p = int(hp[1]), int(hp[2])
                coeffs = [int(c) for c in tail.split(",")]
                poly = IntPoly.from_high(coeffs)
                if poly.is_zero():
                    raise HeckeTableError(f"{source}:{lineno}: zero characteristic polynomial")
                if poly.lc < 0:
                    poly = -poly
                if (t, p) in table.entries or any(x[:2] == (t, p) for x in pending):
                    raise HeckeTableError(f"{source}:{lineno}: duplicate entry for level {t}, p = {p}")
                pending.append((t, p, lineno, poly))
            else:
                raise ValueError
        except HeckeTableError:
            raise
        except (ValueError, IndexError):
            raise HeckeTableError(f"{source}:{lineno}: malformed line {raw!r}") from None
    for t, p, lineno, poly in pending:
        if t not in table.dims:
            raise HeckeTableError(f"{source}:{lineno}: no 'dim' line for level {t}")
        if poly.degree != table.dims[t]:
            raise HeckeTableError(
                f"{source}:{lineno}: degree {poly.degree} does not match dim S_2({t}) = {table.dims[t]}"
            )
        if not _roots_within_ramanujan(poly, p):
            warnings.warn(f"{source}:{lineno}: T_{p} eigenvalue beyond 2*sqrt({p}); table may be corrupt")
        table.entries[(t, p)] = poly
    return table


def _roots_within_ramanujan(poly: IntPoly, p: int) -> bool:
    if poly.degree < 1:
        return True
    roots = np.roots([float(c) for c in reversed(poly.coeffs)])
    return bool(np.all(np.abs(roots) <= 2 * np.sqrt(p) * (1 + 1e-6) + 1e-6))


def load_hecke_dir(path: str | Path) -> HeckeTable:
    """Merge every ``*.txt`` table found in a directory."""
    table = HeckeTable()
    for f in sorted(Path(path).glob("*.txt")):
        table.merge(parse_hecke_table(f.read_text(encoding="utf-8"), source=f.name))
    return table


def product_charpoly(C: IntPoly, p: int) -> IntPoly:
    """prod over roots lam of C of (x^2 - lam x + p).

    Eliminating lam from C(lam) = 0 and x^2 - lam x + p = 0 gives
    x^n C((x^2 + p)/x) / lc(C), an integer polynomial of degree 2n.
    """
    if C.is_zero():
        raise ValueError("zero polynomial")
    n = C.degree
    out = [0] * (2 * n + 1)
    # (x^2 + p)^k x^(n-k) = sum_j binom(k, j) p^(k-j) x^(2j + n - k)
    for k, c in enumerate(C.coeffs):
        if not c:
            continue
        for j in range(k + 1):
            out[2 * j + n - k] += c * comb(k, j) * p ** (k - j)
    lc = C.lc
    if any(v % lc for v in out):
        raise ValueError("characteristic polynomial must be monic up to sign")
    return IntPoly(v // lc for v in out)
