import pytest
from hypothesis import given
from hypothesis import strategies as st

from gsp4sieve.algebra import is_prime, kronecker, squarefree_part
from gsp4sieve.arithdata import (
    ConductorData,
    QuadChar,
    divisors,
    max_square_divisor_root,
    mult_order,
    parse_conductor,
    quad_chars,
    special_divisors,
)


def cond(expr, **kw):
    return ConductorData(parse_conductor(expr), **kw)


def test_parse_conductor():
    assert parse_conductor("2^12*5*23") == {2: 12, 5: 1, 23: 1}
    assert parse_conductor("1") == {}
    assert parse_conductor("2^3 * 2") == {2: 4}
    for bad in ("2^x", "4*3", "", "2^^3"):
        with pytest.raises(ValueError):
            parse_conductor(bad)


@pytest.mark.parametrize(
    "expr, d, S",
    [
        ("2^12*5*23", 64, {368, 460, 512, 640}),
        ("2^8*19*151", 16, {256, 604, 608}),
        ("709", 1, {1}),
        ("2^20", 1024, {1024}),
    ],
)
def test_conductor_combinatorics(expr, d, S):
    c = cond(expr)
    assert max_square_divisor_root(c) == d
    assert special_divisors(c) == S


@given(st.dictionaries(st.sampled_from([2, 3, 5, 7, 11]), st.integers(1, 5), min_size=1, max_size=3))
def test_special_divisors_properties(factors):
    c = ConductorData(factors)
    n = c.value
    S = special_divisors(c)
    divs = divisors(factors)
    for t in S:
        assert n % t == 0 and t * t <= n
        assert not any(u != t and u % t == 0 and u * u <= n for u in divs)
    # every small divisor sits below some element of S
    for t in divs:
        if t * t <= n:
            assert any(s % t == 0 for s in S)
    d = max_square_divisor_root(c)
    assert n % (d * d) == 0 and all(n % ((d * q) ** 2) for q in (2, 3, 5, 7, 11))


def test_conductor_validation():
    with pytest.raises(ValueError):
        cond("2^4*5", phi={7: 1})
    with pytest.raises(ValueError):
        cond("2^4*5", semiabelian_at=frozenset({3}))
    c = cond("2^20*13^3", bound_at=frozenset({2}))
    assert c.exponent_is_exact(13) and not c.exponent_is_exact(2)
    assert c.expression() == "2^20*13^3"


def test_mult_order():
    assert mult_order(17, 16) == 1
    assert mult_order(3, 16) == 4
    assert mult_order(5, 1) == 1
    with pytest.raises(ValueError):
        mult_order(2, 16)


def test_quad_chars_counts():
    assert len(quad_chars({2, 5, 23})) == 15
    assert [c.D for c in quad_chars({709})] == [709]
    assert [c.D for c in quad_chars({2})] == [-8, -4, 8]
    assert quad_chars(set()) == []


@given(st.sets(st.sampled_from([2, 3, 5, 7, 11, 13, 19]), min_size=1, max_size=4))
def test_quad_chars_are_fundamental_and_unramified_elsewhere(bad):
    chars = quad_chars(bad)
    assert len(chars) == 2 ** (len(bad) + (1 if 2 in bad else 0)) - 1
    for phi in chars:
        D = phi.D
        s = squarefree_part(D)
        assert D == s if s % 4 == 1 else D == 4 * s
        # ramified only at the given primes
        for q in range(2, 60):
            if is_prime(q) and D % q == 0:
                assert q in bad
        for p in (101, 103, 107):
            assert phi(p) == kronecker(D, p) and phi(p) in (1, -1)


def test_quadchar_str():
    assert str(QuadChar(-4)) == "(-4/.)"
