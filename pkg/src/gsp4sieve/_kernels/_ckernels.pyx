# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: character sums over F_p / F_{p^2} and matrix-group closure."""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport int64_t, uint8_t


def char_sum(coeffs, long p, int k, long nonres):
    """Sum of the quadratic character of F_{p^k} over the values f(x).

    ``coeffs`` are the coefficients of f reduced mod p, lowest degree first.
    F_{p^2} is F_p[t]/(t^2 - nonres); an element is a square iff its norm is
    a square in F_p.
    """
    cdef int n = len(coeffs)
    cdef int64_t *c = <int64_t *> malloc(n * sizeof(int64_t))
    cdef signed char *chi = <signed char *> malloc(p * sizeof(signed char))
    cdef int64_t x, y, i, a, b, ra, rb, ta, total = 0
    cdef int j
    if c == NULL or chi == NULL:
        free(c)
        free(chi)
        raise MemoryError()
    for j in range(n):
        c[j] = coeffs[j] % p
    for i in range(p):
        chi[i] = -1
    chi[0] = 0
    for i in range(1, p):
        chi[(i * i) % p] = 1
    with nogil:
        if k == 1:
            for x in range(p):
                ra = 0
                for j in range(n - 1, -1, -1):
                    ra = (ra * x + c[j]) % p
                total += chi[ra]
        else:
            for x in range(p):
                for y in range(p):
                    # Horner at a = x + y t
                    ra = 0
                    rb = 0
                    for j in range(n - 1, -1, -1):
                        ta = (ra * x + (rb * y % p) * nonres + c[j]) % p
                        rb = (ra * y + rb * x) % p
                        ra = ta
                    total += chi[(ra * ra - (nonres * (rb * rb % p)) % p + p) % p]
    free(c)
    free(chi)
    return total


cdef inline void _decode(int64_t code, int ell, int *m) nogil:
    cdef int i
    for i in range(16):
        m[i] = code % ell
        code //= ell


cdef inline int64_t _encode(int *m, int ell) nogil:
    cdef int64_t code = 0
    cdef int i
    for i in range(15, -1, -1):
        code = code * ell + m[i]
    return code


def closure_size(gens, int ell, long limit=10000000):
    """Order of the group generated by 4x4 matrices over F_ell.

    Matrices are encoded row-major as base-ell integers (entry i has weight
    ell^i).  Breadth-first closure under right multiplication by generators.
    """
    cdef int ngen = len(gens)
    cdef int64_t space = 1
    cdef int i, j, r, s, t, g
    for i in range(16):
        space *= ell
    if space > (<int64_t> 1) << 32:
        raise ValueError("field too large for the bitmap closure")
    cdef int *gm = <int *> malloc(16 * ngen * sizeof(int))
    cdef uint8_t *seen = <uint8_t *> calloc(space // 8 + 1, 1)
    cdef int64_t cap = limit + 1
    cdef int64_t *queue = <int64_t *> malloc(cap * sizeof(int64_t))
    cdef int a[16]
    cdef int prod[16]
    cdef int64_t head = 0, tail = 0, code, ident = 0
    cdef int acc
    cdef bint overflow = False
    if gm == NULL or seen == NULL or queue == NULL:
        free(gm)
        free(seen)
        free(queue)
        raise MemoryError()
    for g in range(ngen):
        for i in range(16):
            gm[16 * g + i] = int(gens[g][i]) % ell
    for i in range(16):
        a[i] = 1 if i % 5 == 0 else 0
    ident = _encode(a, ell)
    seen[ident >> 3] |= 1 << (ident & 7)
    queue[tail] = ident
    tail += 1
    with nogil:
        while head < tail:
            _decode(queue[head], ell, a)
            head += 1
            for g in range(ngen):
                for r in range(4):
                    for s in range(4):
                        acc = 0
                        for t in range(4):
                            acc += a[4 * r + t] * gm[16 * g + 4 * t + s]
                        prod[4 * r + s] = acc % ell
                code = _encode(prod, ell)
                if not (seen[code >> 3] & (1 << (code & 7))):
                    seen[code >> 3] |= 1 << (code & 7)
                    if tail >= cap:
                        overflow = True
                        break
                    queue[tail] = code
                    tail += 1
            if overflow:
                break
    free(gm)
    free(seen)
    free(queue)
    if overflow:
        raise OverflowError(f"closure exceeds {limit} elements")
    return int(tail)
