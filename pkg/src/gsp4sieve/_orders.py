"""Element orders of the exceptional subgroups of PGSp(4, F_ell).

Generated by ``gsp4sieve grouplab --regen-orders``; do not edit.
"""

EXCEPTIONAL_ORDERS = {
    '2^4:A5': frozenset([1, 2, 3, 4, 5, 6]),
    '2^4:S5': frozenset([1, 2, 3, 4, 5, 6, 8, 12]),
    'A6': frozenset([1, 2, 3, 4, 5]),
    'A7': frozenset([1, 2, 3, 4, 5, 6, 7]),
    'S6': frozenset([1, 2, 3, 4, 5, 6]),
}

ALLOWED_PROJECTIVE_ORDERS = frozenset([1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 14, 16, 24])
