"""Brute-force finite-group checks over small fields.

Symplectic matrices are 4x4 integer numpy arrays reduced mod ell, for the
form J = [[0, I], [-I, 0]].  A matrix M is a similitude with multiplier m
when M^T J M = m J.
"""
from __future__ import annotations

from itertools import permutations, product
from math import lcm
from pathlib import Path

import numpy as np

from . import _kernels
from .algebra import IntPoly, factor_pattern_mod, is_irreducible_pattern

__all__ = [
    "J",
    "multiplier",
    "is_symplectic",
    "transvection",
    "random_transvection",
    "random_symplectic",
    "random_irreducible_element",
    "charpoly_mod",
    "symplectic_closure",
    "sp4_order",
    "standard_generators",
    "dickson_holds",
    "verify_dickson",
    "exceptional_order_sets",
    "allowed_projective_orders",
    "write_orders_module",
]

J = np.array([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]], dtype=np.int64)
CLOSURE_FIELDS = (3,)


def multiplier(M, ell: int) -> int | None:
    """The m with M^T J M = m J mod ell, or None if M is no similitude."""
    M = np.asarray(M, dtype=np.int64) % ell
    G = (M.T @ J @ M) % ell
    m = int(G[0, 2])
    if m == 0 or not np.array_equal(G, (m * J) % ell):
        return None
    return m


def is_symplectic(M, ell: int) -> bool:
    return multiplier(M, ell) == 1


def transvection(v, c: int, ell: int) -> np.ndarray:
    """x -> x + c <x, v> v."""
    v = np.asarray(v, dtype=np.int64).reshape(4, 1)
    return (np.eye(4, dtype=np.int64) + c * (v @ v.T) @ J.T) % ell


def random_transvection(ell: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        v = rng.integers(0, ell, 4)
        if v.any():
            return transvection(v, int(rng.integers(1, ell)), ell)


def random_symplectic(ell: int, rng: np.random.Generator, mult: int = 1, length: int = 40) -> np.ndarray:
    """Product of random transvections, times diag(1, 1, m, m)."""
    M = np.eye(4, dtype=np.int64)
    for _ in range(length):
        M = (M @ random_transvection(ell, rng)) % ell
    return (M @ np.diag([1, 1, mult, mult])) % ell


def charpoly_mod(M, ell: int) -> tuple[int, ...]:
    """Characteristic polynomial coefficients mod ell, highest degree first."""
    A = np.asarray(M, dtype=object) % ell
    n = A.shape[0]
    coeffs = [1]
    Mk = np.zeros((n, n), dtype=object)
    ident = np.eye(n, dtype=object)
    c = 1
    # Faddeev-LeVerrier over Z; the divisions by k are exact
    for k in range(1, n + 1):
        Mk = A @ Mk + c * ident
        c = -int(np.trace(A @ Mk)) // k
        coeffs.append(c)
    return tuple(x % ell for x in coeffs)


def sp4_order(ell: int) -> int:
    return ell**4 * (ell**2 - 1) * (ell**4 - 1)


def symplectic_closure(generators, ell: int) -> int:
    """Order of the subgroup of Sp(4, F_ell) generated by ``generators``."""
    if ell not in CLOSURE_FIELDS:
        raise ValueError(f"full closure is only run over F_3 (cost guard), got ell = {ell}")
    gens = []
    for g in generators:
        if not is_symplectic(g, ell):
            raise ValueError("generator is not in Sp(4)")
        gens.append([int(x) for x in (np.asarray(g) % ell).ravel()])
    return _kernels.closure_size(gens, ell)


def random_irreducible_element(ell: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        M = random_symplectic(ell, rng)
        if is_irreducible_pattern(factor_pattern_mod(IntPoly.from_high(charpoly_mod(M, ell)), ell)):
            return M


def standard_generators(ell: int = 3) -> list[np.ndarray]:
    """A transvection and an element with irreducible characteristic polynomial."""
    rng = np.random.default_rng(20260)
    return [transvection([1, 0, 0, 0], 1, ell), random_irreducible_element(ell, rng)]


def dickson_holds(M, ell: int) -> bool:
    """Char. poly of a multiplier-m similitude has the form (1, -a, b, -m a, m^2)."""
    m = multiplier(M, ell)
    if m is None:
        return False
    _, c1, _, c3, c4 = charpoly_mod(M, ell)
    return c3 % ell == (m * c1) % ell and c4 % ell == (m * m) % ell


def verify_dickson(ell: int, trials: int = 1000, seed: int = 0) -> tuple[int, int]:
    """Check the reciprocal shape on random similitudes; returns (passed, trials)."""
    rng = np.random.default_rng(seed)
    passed = 0
    for _ in range(trials):
        M = random_symplectic(ell, rng, mult=int(rng.integers(1, ell)))
        passed += dickson_holds(M, ell)
    return passed, trials


# ---------------------------------------------------------------------------
# exceptional groups

def _perm_order(perm) -> int:
    seen = [False] * len(perm)
    order = 1
    for i in range(len(perm)):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                n += 1
            order = lcm(order, n)
    return order


def _is_even(perm) -> bool:
    return sum(1 for i in range(len(perm)) for j in range(i) if perm[j] > perm[i]) % 2 == 0


def _symmetric(n: int, even: bool):
    return [p for p in permutations(range(n)) if not even or _is_even(p)]


def _compose(a, b):
    return tuple(a[b[i]] for i in range(len(b)))


def _perm_closure(gens):
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = _compose(s, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def _projective_line_group(special: bool):
    """PSL(2,5) (special) or PGL(2,5) acting on the 6 points of P^1(F_5); index 5 is infinity."""
    inf = 5

    def moebius(a, b, c, d):
        img = []
        for x in range(6):
            if x == inf:
                img.append(inf if c == 0 else a * pow(c, -1, 5) % 5)
            else:
                den = (c * x + d) % 5
                img.append(inf if den == 0 else (a * x + b) * pow(den, -1, 5) % 5)
        return tuple(img)

    scale = 4 if special else 2
    return _perm_closure([moebius(1, 1, 0, 1), moebius(scale, 0, 0, 1), moebius(0, 4, 1, 0)])


def exceptional_order_sets() -> dict[str, frozenset[int]]:
    a6, s6, a7 = _symmetric(6, True), _symmetric(6, False), _symmetric(7, True)
    sets = {
        "A6": frozenset(_perm_order(p) for p in a6),
        "S6": frozenset(_perm_order(p) for p in s6),
        "A7": frozenset(_perm_order(p) for p in a7),
    }
    sets["2^4:A5"] = frozenset(_affine_orders(alternating=True))
    sets["2^4:S5"] = frozenset(_affine_orders(alternating=False))
    return sets


def allowed_projective_orders(sets: dict[str, frozenset[int]] | None = None) -> frozenset[int]:
    """Orders possible in an exceptional group or an index-2 extension of one."""
    if sets is None:
        sets = exceptional_order_sets()
    base = set().union(*sets.values())
    return frozenset(base | {2 * n for n in base})


# F_2^4 modules for A5 and S5 -------------------------------------------------

def _ext_orders(group_actions) -> set[int]:
    """Element orders of V x| G, each g given as a dict on the 16 vectors of V."""
    orders = set()
    for gmap in group_actions:
        vecs = list(gmap)
        n, cur = 1, dict(gmap)
        while any(cur[v] != v for v in vecs):
            cur = {v: gmap[cur[v]] for v in vecs}
            n += 1
        for v in vecs:
            s, w = 0, v
            for _ in range(n):
                s ^= w
                w = gmap[w]
            orders.add(n if s == 0 else 2 * n)
    return orders


def _deleted_5point(perms):
    vecs = [m for m in range(32) if bin(m).count("1") % 2 == 0]
    out = []
    for p in perms:
        out.append({m: sum(1 << p[i] for i in range(5) if m >> i & 1) for m in vecs})
    return out


def _deleted_6point(perms):
    def norm(m):
        return m ^ 63 if m & 1 else m

    vecs = sorted({norm(m) for m in range(64) if bin(m).count("1") % 2 == 0})
    out = []
    for p in perms:
        out.append({m: norm(sum(1 << p[i] for i in range(6) if m >> i & 1)) for m in vecs})
    return out


# F_4 = {0, 1, w, w^2} encoded 0, 1, 2, 3 with w^2 = w + 1; addition is XOR
_F4_LOG = {1: 0, 2: 1, 3: 2}
_F4_EXP = [1, 2, 3]


def _f4_mul(a, b):
    if a == 0 or b == 0:
        return 0
    return _F4_EXP[(_F4_LOG[a] + _F4_LOG[b]) % 3]


def _semilinear_sl24(with_frobenius: bool):
    """SL(2,4), or SigmaL(2,4) with the field automorphism, acting on F_4^2."""
    mats = [
        (a, b, c, d)
        for a, b, c, d in product(range(4), repeat=4)
        if _f4_mul(a, d) ^ _f4_mul(b, c) == 1
    ]
    frobs = (False, True) if with_frobenius else (False,)
    out = []
    for (a, b, c, d), fr in product(mats, frobs):
        gmap = {}
        for x, y in product(range(4), repeat=2):
            x0, y0 = (_f4_mul(x, x), _f4_mul(y, y)) if fr else (x, y)
            gmap[_f4_pack(x, y)] = _f4_pack(_f4_mul(a, x0) ^ _f4_mul(b, y0), _f4_mul(c, x0) ^ _f4_mul(d, y0))
        out.append(gmap)
    return out


def _f4_pack(x, y):
    return x | (y << 2)


def _affine_orders(alternating: bool) -> set[int]:
    five = [p for p in permutations(range(5)) if not alternating or _is_even(p)]
    six = sorted(_projective_line_group(special=alternating))
    orders = set()
    orders |= _ext_orders(_deleted_5point(five))
    orders |= _ext_orders(_deleted_6point(six))
    orders |= _ext_orders(_semilinear_sl24(with_frobenius=not alternating))
    return orders


# ---------------------------------------------------------------------------
# generated constants

ORDERS_MODULE = Path(__file__).with_name("_orders.py")


def render_orders_module() -> str:
    sets = exceptional_order_sets()
    allowed = allowed_projective_orders(sets)
    lines = [
        '"""Element orders of the exceptional subgroups of PGSp(4, F_ell).',
        "",
        "Generated by ``gsp4sieve grouplab --regen-orders``; do not edit.",
        '"""',
        "",
        "EXCEPTIONAL_ORDERS = {",
    ]
    for name in sorted(sets):
        lines.append(f"    {name!r}: frozenset({sorted(sets[name])}),")
    lines += ["}", "", f"ALLOWED_PROJECTIVE_ORDERS = frozenset({sorted(allowed)})", ""]
    return "\n".join(lines)


def write_orders_module(path: Path = ORDERS_MODULE) -> bool:
    """Rewrite the constants file; returns True if its content changed."""
    text = render_orders_module()
    path = Path(path)
    if path.exists() and path.read_text(encoding="utf-8") == text:
        return False
    path.write_text(text, encoding="utf-8")
    return True
