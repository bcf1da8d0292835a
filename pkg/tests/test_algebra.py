import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from gsp4sieve.algebra import (
    IntPoly,
    NotSemisimpleError,
    factor_pattern_mod,
    factor_small,
    is_prime,
    kronecker,
    primes_up_to,
    projective_order,
    quartic_is_irreducible,
    resultant,
    resultant_sylvester,
    squarefree_part,
)
from oracles import (
    brute_factor_pattern,
    companion_projective_order,
    euler_legendre,
    sylvester_resultant,
    trial_is_prime,
)

coeff = st.integers(-30, 30)


def poly(min_deg=0, max_deg=5):
    return st.lists(coeff, min_size=min_deg + 1, max_size=max_deg + 1).filter(lambda c: c[-1] != 0).map(IntPoly)


def test_intpoly_basics():
    P = IntPoly.from_high([1, -2, 3])
    assert P.coeffs == (3, -2, 1)
    assert P.degree == 2 and P.lc == 1 and P.is_monic()
    assert P(2) == 3
    assert str(P) == "x^2 - 2*x + 3"
    assert IntPoly([0, 0]).is_zero() and IntPoly([]).degree == -1
    assert IntPoly.x_pow_minus_one(3) == IntPoly([-1, 0, 0, 1])
    assert (P * P) == IntPoly.from_high([1, -4, 10, -12, 9])
    assert P**0 == IntPoly([1])
    assert P.derivative() == IntPoly([-2, 2])


def test_discriminant_quadratic():
    assert IntPoly.from_high([1, 3, 1]).discriminant() == 5
    assert IntPoly.from_high([1, -2, -2]).discriminant() == 12


@given(st.integers(-200, 200), st.integers(3, 200))
def test_kronecker_matches_euler(a, p):
    assume(trial_is_prime(p))
    assert kronecker(a, p) == euler_legendre(a, p)


@given(st.integers(-300, 300), st.integers(1, 120), st.integers(1, 120))
def test_kronecker_multiplicative_in_denominator(a, m, n):
    assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


def test_kronecker_at_two():
    assert [kronecker(a, 2) for a in (1, 3, 5, 7, 4)] == [1, -1, -1, 1, 0]
    assert kronecker(-4, 3) == -1 and kronecker(8, 3) == -1


def test_is_prime_against_trial_division():
    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if trial_is_prime(n)]
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2**61 - 1) and not is_prime(2**61 + 1)
    assert is_prime(2**89 - 1)


def test_factor_small():
    r = factor_small(2**5 * 3 * 1000003)
    assert r.factors == {2: 5, 3: 1, 1000003: 1} and r.complete
    r = factor_small(1000003 * 1000033, bound=1000)
    assert not r.complete and r.remainder == 1000003 * 1000033
    assert factor_small(0).all_primes
    assert factor_small(-12).factors == {2: 2, 3: 1}


@given(st.integers(-10**6, 10**6).filter(bool))
def test_squarefree_part(n):
    s = squarefree_part(n)
    r = n // s
    assert n % s == 0 and r > 0 and int(r**0.5 + 0.5) ** 2 == r
    assert all(s % (q * q) for q in range(2, 100))


@given(poly(1, 5), poly(1, 5))
def test_resultant_matches_sylvester_oracle(P, Q):
    expected = sylvester_resultant(list(reversed(P.coeffs)), list(reversed(Q.coeffs)))
    assert resultant(P, Q) == expected
    assert resultant_sylvester(P, Q) == expected


@given(poly(1, 5), poly(1, 5))
def test_resultant_symmetry(P, Q):
    assert resultant(P, Q) == (-1) ** (P.degree * Q.degree) * resultant(Q, P)


@given(st.integers(-20, 20), poly(0, 6))
def test_resultant_with_linear_is_evaluation(a, Q):
    assert resultant(IntPoly([-a, 1]), Q) == Q(a)


@given(poly(1, 4), poly(1, 4), poly(1, 4))
def test_resultant_multiplicative(P, Q, R):
    assert resultant(P * Q, R) == resultant(P, R) * resultant(Q, R)


SMALL_PRIMES = [3, 5, 7]


@given(st.lists(st.integers(0, 6), min_size=4, max_size=4), st.sampled_from(SMALL_PRIMES))
def test_factor_pattern_matches_trial_division(tail, ell):
    P = IntPoly(list(tail) + [1])
    assert factor_pattern_mod(P, ell) == brute_factor_pattern(P.coeffs, ell)


@given(st.lists(st.integers(0, 10), min_size=5, max_size=7), st.sampled_from(SMALL_PRIMES))
def test_factor_pattern_reconstructs_degree(tail, ell):
    P = IntPoly(list(tail) + [1])
    pattern = factor_pattern_mod(P, ell)
    assert sum(d * m for d, m in pattern) == P.degree


def test_factor_pattern_examples():
    # (x - 1)^2 (x^2 + 1) over F_3
    P = IntPoly([-1, 1]) ** 2 * IntPoly([1, 0, 1])
    assert factor_pattern_mod(P, 3) == ((1, 2), (2, 1))
    assert factor_pattern_mod(IntPoly.from_high([1, 0, 0, 0, 2]), 5) == ((4, 1),)  # x^4 - 3 is irreducible mod 5


@given(st.lists(st.integers(0, 6), min_size=4, max_size=4), st.sampled_from([5, 7]))
def test_projective_order_matches_companion_matrix(tail, ell):
    P = IntPoly(list(tail) + [1])
    assume(P.coeffs[0] % ell)
    try:
        n = projective_order(P, ell)
    except NotSemisimpleError:
        assert any(m > 1 for _, m in factor_pattern_mod(P, ell))
        return
    assert n == companion_projective_order(list(P.coeffs), ell)


def test_projective_order_examples_and_errors():
    # root ratios 2, 4, 3 mod 7 have orders 3, 3, 6
    assert projective_order(IntPoly([-1, 1]) * IntPoly([-2, 1]) * IntPoly([-4, 1]) * IntPoly([-3, 1]), 7) == 6
    assert projective_order(IntPoly([-1, 1]) * IntPoly([-2, 1]) * IntPoly([-4, 1]), 7) == 3
    with pytest.raises(NotSemisimpleError):
        projective_order(IntPoly([-2, 1]) ** 4, 7)
    with pytest.raises(NotSemisimpleError):
        projective_order(IntPoly([-1, 1]) ** 2 * IntPoly([-2, 1]) * IntPoly([-3, 1]), 7)


@given(
    st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9).filter(bool), st.integers(-9, 9).filter(bool)
)
def test_quartic_products_are_reducible(a, b, c, d):
    assert not quartic_is_irreducible(IntPoly([b, a, 1]) * IntPoly([d, c, 1]))


def test_quartic_irreducible_examples():
    assert quartic_is_irreducible(IntPoly.from_high([1, 7, 31, 77, 121]))
    assert quartic_is_irreducible(IntPoly.from_high([1, 0, 0, 0, 2]))
    assert not quartic_is_irreducible(IntPoly.from_high([1, -2, 10, -10, 25]))  # (x^2-2x+5)(x^2+5)
    assert not quartic_is_irreducible(IntPoly.from_high([1, 0, 0, 0, -1]))
    # irreducible mod some prime => irreducible over Q
    P = IntPoly.from_high([1, 3, 7, 9, 9])
    assert factor_pattern_mod(P, 7) == ((4, 1),) or quartic_is_irreducible(P)
