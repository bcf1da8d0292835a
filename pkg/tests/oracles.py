"""Slow, independent reference implementations used only by the tests.

Nothing here shares code with the package beyond plain integers.
"""
from fractions import Fraction
from itertools import product


def euler_legendre(a, p):
    """(a/p) for an odd prime p by Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def trial_is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def naive_point_count(f_high, p, k):
    """#C(F_{p^k}) for y^2 = f, k in {1, 2}, by listing every x and squaring every y.

    F_{p^2} = F_p[t]/(t^2 - n) with n a non-residue; elements are pairs.
    """
    n = next(c for c in range(2, p) if euler_legendre(c, p) == -1)
    if k == 1:
        elems = [(x, 0) for x in range(p)]
    else:
        elems = list(product(range(p), repeat=2))

    def mul(u, v):
        return ((u[0] * v[0] + n * u[1] * v[1]) % p, (u[0] * v[1] + u[1] * v[0]) % p)

    sq_count = {}
    for y in elems:
        s = mul(y, y)
        sq_count[s] = sq_count.get(s, 0) + 1
    total = 0
    for x in elems:
        val = (0, 0)
        for c in f_high:
            val = mul(val, x)
            val = ((val[0] + c) % p, val[1])
        total += sq_count.get(val, 0)
    deg = len(f_high) - 1 - next(i for i, c in enumerate(f_high) if c)
    lc = next(c for c in f_high if c)
    if deg == 5:
        total += 1
    elif k == 1:
        total += 1 + euler_legendre(lc, p)
    else:
        total += 2
    return total


def fraction_det(mat):
    """Determinant by plain Gaussian elimination over Q."""
    m = [[Fraction(x) for x in row] for row in mat]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for j in range(c, n):
                m[r][j] -= f * m[c][j]
    assert det.denominator == 1
    return int(det)


def sylvester_resultant(p_high, q_high):
    """Resultant from the Sylvester matrix; coefficients highest degree first."""
    m, n = len(p_high) - 1, len(q_high) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(p_high) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(q_high) + [0] * (size - n - 1 - i))
    return fraction_det(rows)


def _poly_mod_div(a, b, p):
    """Remainder of a by monic b over F_p, lowest degree first."""
    a = [x % p for x in a]
    while len(a) >= len(b):
        c = a[-1]
        if c:
            shift = len(a) - len(b)
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bi) % p
        a.pop()
    return a


def monic_irreducibles(p, deg):
    """All monic irreducible polynomials of degree deg over F_p (brute force)."""
    out = []
    for tail in product(range(p), repeat=deg):
        f = list(tail) + [1]
        ok = True
        for d in range(1, deg // 2 + 1):
            for g in out_cache(p, d):
                if not any(_poly_mod_div(f, g, p)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(f)
    return out


_CACHE = {}


def out_cache(p, d):
    if (p, d) not in _CACHE:
        _CACHE[(p, d)] = monic_irreducibles(p, d)
    return _CACHE[(p, d)]


def brute_factor_pattern(coeffs_low, p):
    """Sorted (degree, multiplicity) pairs of a monic poly over F_p by trial division."""
    f = [c % p for c in coeffs_low]
    pattern = {}
    for d in range(1, len(f)):
        for g in out_cache(p, d):
            while len(f) > 1:
                # exact division check
                rem = _poly_mod_div(list(f), g, p)
                if any(rem):
                    break
                f = _poly_div_exact(f, g, p)
                pattern[tuple(g)] = pattern.get(tuple(g), 0) + 1
    counts = {}
    for g, mult in pattern.items():
        key = (len(g) - 1, mult)
        counts[key] = counts.get(key, 0) + 1
    return tuple(sorted(k for k, c in counts.items() for _ in range(c)))


def _poly_div_exact(a, b, p):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = a[-1] % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        a.pop()
    return q


def companion_projective_order(coeffs_low, ell, limit=10**5):
    """Least n with C^n scalar, C the companion matrix of a monic quartic mod ell."""
    n = len(coeffs_low) - 1
    C = [[0] * n for _ in range(n)]
    for i in range(1, n):
        C[i][i - 1] = 1
    for i in range(n):
        C[i][n - 1] = (-coeffs_low[i]) % ell

    def mul(A, B):
        return [[sum(A[i][k] * B[k][j] for k in range(n)) % ell for j in range(n)] for i in range(n)]

    M = C
    for k in range(1, limit):
        d = M[0][0]
        if d and all(M[i][j] == (d if i == j else 0) for i in range(n) for j in range(n)):
            return k
        M = mul(M, C)
    raise RuntimeError("order not found")
