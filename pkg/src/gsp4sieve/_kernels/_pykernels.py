"""Pure-Python (numpy) versions of the compiled kernels.

Same signatures and results as ``_ckernels``; used when the extension is not
built or ``GSP4SIEVE_PURE=1`` is set.
"""
from __future__ import annotations

import numpy as np


def _chi_table(p: int) -> np.ndarray:
    chi = -np.ones(p, dtype=np.int64)
    chi[0] = 0
    chi[(np.arange(1, p, dtype=np.int64) ** 2) % p] = 1
    return chi


def char_sum(coeffs, p: int, k: int, nonres: int) -> int:
    c = [int(v) % p for v in coeffs]
    chi = _chi_table(p)
    if k == 1:
        x = np.arange(p, dtype=np.int64)
        r = np.zeros(p, dtype=np.int64)
        for cj in reversed(c):
            r = (r * x + cj) % p
        return int(chi[r].sum())
    x, y = np.meshgrid(np.arange(p, dtype=np.int64), np.arange(p, dtype=np.int64))
    x = x.ravel()
    y = y.ravel()
    ra = np.zeros_like(x)
    rb = np.zeros_like(x)
    for cj in reversed(c):
        ta = (ra * x + (rb * y % p) * nonres + cj) % p
        rb = (ra * y + rb * x) % p
        ra = ta
    norm = (ra * ra - nonres * (rb * rb % p)) % p
    return int(chi[norm].sum())


def closure_size(gens, ell: int, limit: int = 10_000_000) -> int:
    weights = np.array([ell**i for i in range(16)], dtype=np.int64)
    mats = [np.asarray(g, dtype=np.int64).reshape(4, 4) % ell for g in gens]
    space = ell**16
    if space <= 200_000_000:
        seen = np.zeros(space, dtype=bool)
    else:
        raise ValueError("field too large for the bitmap closure")
    ident = np.eye(4, dtype=np.int64)[None]
    seen[int(ident.ravel() @ weights)] = True
    frontier = ident
    total = 1
    while len(frontier):
        new_codes = []
        new_mats = []
        for g in mats:
            prod = np.einsum("nij,jk->nik", frontier, g) % ell
            codes = prod.reshape(-1, 16) @ weights
            codes, idx = np.unique(codes, return_index=True)
            fresh = ~seen[codes]
            seen[codes[fresh]] = True
            new_codes.append(codes[fresh])
            new_mats.append(prod[idx[fresh]])
        frontier = np.concatenate(new_mats) if new_mats else frontier[:0]
        total += len(frontier)
        if total > limit:
            raise OverflowError(f"closure exceeds {limit} elements")
    return total
