"""Acceptance suite: one group of checks per numbered criterion.

A summary line per criterion is printed at the end of the run.
"""
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsp4sieve import grouplab as gl
from gsp4sieve.algebra import IntPoly, factor_pattern_mod, kronecker, resultant
from gsp4sieve.arithdata import ConductorData, max_square_divisor_root, parse_conductor, quad_chars, special_divisors
from gsp4sieve.certify import case_star_condition, leduff_certificate, rational_split
from gsp4sieve.cli import main
from gsp4sieve.curve import FrobeniusData, char_poly, frobenius_table
from gsp4sieve.fixtures import get_fixture
from gsp4sieve.heckedata import product_charpoly
from gsp4sieve.report import parse_machine_lines
from gsp4sieve.sieve import onedim_verdict, quadchar_verdict
from oracles import brute_factor_pattern, sylvester_resultant
from reference_tables import FROBENIUS

crit = pytest.mark.criterion


def _curve(name):
    return get_fixture(name).curve()


# 1 -------------------------------------------------------------------------

@crit(1)
@pytest.mark.parametrize("name, rows", [("A", 13), ("A2", 12), ("A3", 8)])
def test_c1_frobenius_tables(name, rows):
    data = FROBENIUS[name]
    assert len(data) == rows
    table = frobenius_table(_curve(name), [p for p, _, _ in data])
    assert [(p, table[p].a, table[p].b) for p, _, _ in data] == data


@crit(1)
def test_c1_pol11_a2():
    fd = frobenius_table(_curve("A2"), [11])[11]
    assert char_poly(fd) == IntPoly.from_high([1, 7, 31, 77, 121])


# 2 -------------------------------------------------------------------------

@crit(2)
@pytest.mark.parametrize(
    "expr, S, d",
    [("2^12*5*23", {368, 460, 512, 640}, 64), ("2^8*19*151", {256, 604, 608}, 16), ("709", {1}, 1)],
)
def test_c2_conductor(expr, S, d):
    c = ConductorData(parse_conductor(expr))
    assert special_divisors(c) == S and max_square_divisor_root(c) == d


@crit(2)
def test_c2_quad_chars():
    assert len(quad_chars({2, 5, 23})) == 15


# 3 -------------------------------------------------------------------------

A2 = {p: FrobeniusData(p, a, b) for p, a, b in FROBENIUS["A2"]}
A3 = {p: FrobeniusData(p, a, b) for p, a, b in FROBENIUS["A3"]}


@crit(3)
def test_c3_certificates():
    assert leduff_certificate(A2[3], 19, 1, {2, 19, 151}).condition() == "(61/ell)=-1,(5/ell)=-1"
    assert case_star_condition(A2[3]).condition() == "(5/ell)=-1"
    assert case_star_condition(A3[3]).condition() == "(3/ell)=-1"
    assert A3[3].a ** 2 - 4 * (A3[3].b - 6) == 12
    assert rational_split(A3[5]) == (-2, 0)


# 4 -------------------------------------------------------------------------

def _legendre_pair(fd, ell):
    P = char_poly(fd)
    return kronecker(P.discriminant(), ell), kronecker(fd.a**2 - 4 * (fd.b - 2 * fd.p), ell)


@crit(4)
@pytest.mark.parametrize("ell", [3, 5, 11, 19, 29, 31, 41, 61, 109, 151])
def test_c4_elimination(ell):
    witnesses = []
    for q in (11, 41, 79, 101, 199, 211):
        if q == ell:
            continue
        if factor_pattern_mod(char_poly(A2[q]), ell) == ((4, 1),):
            assert _legendre_pair(A2[q], ell) == (-1, -1)
            witnesses.append(q)
    assert witnesses


@crit(4)
@pytest.mark.parametrize("q, ell", [(11, 97), (281, 257)])
def test_c4_extra(q, ell):
    assert factor_pattern_mod(char_poly(A2[q]), ell) == ((4, 1),)
    assert _legendre_pair(A2[q], ell) == (-1, -1)


# 5 -------------------------------------------------------------------------

@crit(5)
def test_c5_quadchar_a2():
    v = quadchar_verdict(quad_chars({2, 19, 151}), [A2[p] for p in (3, 5, 97, 257)], frozenset({2, 19, 151}))
    assert v.odd_survivors == {3, 5, 11, 97, 257}


@crit(5)
def test_c5_onedim_property():
    # the OneDim survivor set is exactly what the two obstruction values allow
    v = onedim_verdict([A2[17], A2[97]], 16, frozenset({2, 19, 151}))
    for ell in v.odd_survivors:
        assert all(val % ell == 0 for p, val in v.evidence if p != ell)
    assert v.odd_survivors == {5}


# 6 -------------------------------------------------------------------------

@crit(6)
def test_c6_leprevost_13():
    fx = get_fixture("Leprevost")
    fr = frobenius_table(fx.curve(), fx.reducible)
    c = ConductorData(parse_conductor(fx.conductor), bound_at=frozenset(fx.bound_at))
    v = onedim_verdict(list(fr.values()), max_square_divisor_root(c), c.bad_primes)
    assert 13 in v.odd_survivors


# 7 -------------------------------------------------------------------------

@crit(7)
def test_c7_closure_random_pairs():
    import numpy as np

    rng = np.random.default_rng(2024)
    for _ in range(200):
        t = gl.random_transvection(3, rng)
        g = gl.random_irreducible_element(3, rng)
        assert gl.symplectic_closure([t, g], 3) == 51840


@crit(7)
@pytest.mark.parametrize("ell", [3, 5, 7])
def test_c7_dickson(ell):
    assert gl.verify_dickson(ell, 1000) == (1000, 1000)


@crit(7)
def test_c7_order_sets():
    sets = gl.exceptional_order_sets()
    assert sets["A6"] == set(range(1, 6))
    assert sets["S6"] == set(range(1, 7))
    assert sets["A7"] == set(range(1, 8))


# 8 -------------------------------------------------------------------------

polys = st.lists(st.integers(-9, 9), min_size=2, max_size=5).filter(lambda c: c[-1]).map(IntPoly)


@crit(8)
@settings(max_examples=80)
@given(polys, polys)
def test_c8_resultant_identities(P, Q):
    assert resultant(P, Q) == sylvester_resultant(list(reversed(P.coeffs)), list(reversed(Q.coeffs)))
    assert resultant(P, Q) == (-1) ** (P.degree * Q.degree) * resultant(Q, P)
    assert resultant(IntPoly([-2, 1]), Q) == Q(2)


@crit(8)
@settings(max_examples=80)
@given(st.lists(st.integers(0, 6), min_size=4, max_size=4), st.sampled_from([3, 5, 7]))
def test_c8_factor_pattern(tail, ell):
    P = IntPoly(list(tail) + [1])
    pat = factor_pattern_mod(P, ell)
    assert sum(d * m for d, m in pat) == 4
    assert pat == brute_factor_pattern(P.coeffs, ell)


@crit(8)
@settings(max_examples=80)
@given(
    st.lists(st.integers(-5, 5), max_size=3).map(lambda c: IntPoly(list(c) + [1])),
    st.lists(st.integers(-5, 5), max_size=3).map(lambda c: IntPoly(list(c) + [1])),
    st.sampled_from([2, 3, 5, 7]),
)
def test_c8_product_charpoly(C1, C2, p):
    P = product_charpoly(C1 * C2, p)
    assert all(isinstance(c, int) for c in P.coeffs) and P.is_monic()
    assert P == product_charpoly(C1, p) * product_charpoly(C2, p)


@crit(8)
@settings(max_examples=40)
@given(st.lists(st.sampled_from([3, 5, 17, 97, 257, 11, 41]), min_size=1, unique=True), st.sampled_from([79, 101]))
def test_c8_sieve_monotone(base, extra):
    bad = frozenset({2, 19, 151})
    chars = quad_chars(bad)
    v1 = quadchar_verdict(chars, [A2[p] for p in base], bad)
    v2 = quadchar_verdict(chars, [A2[p] for p in base + [extra]], bad)
    if not v1.all_primes:
        assert v2.odd_survivors <= v1.odd_survivors


@crit(8)
def test_c8_report_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    main(["analyze", "--fixture", "A2", "-o", str(a)])
    main(["analyze", "--fixture", "A2", "-o", str(b)])
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


# 9 -------------------------------------------------------------------------

def _have_tables():
    from gsp4sieve.fixtures import hecke_data_dir

    return any(hecke_data_dir().iterdir())


@crit(9)
@pytest.mark.skipif(not _have_tables(), reason="Hecke tables absent")
@pytest.mark.parametrize(
    "fixture, verdict",
    [("A", "maximal for every ℓ > 5, ℓ ≠ 23"), ("A2", "maximal for every ℓ > 2")],
)
def test_c9_end_to_end(fixture, verdict, capsys):
    t0 = time.perf_counter()
    code = main(["analyze", "--fixture", fixture, "--assume-serre"])
    out = capsys.readouterr().out
    assert code == 0
    summary = parse_machine_lines(out).summary
    assert summary.startswith(verdict + " ")
    assert time.perf_counter() - t0 < 300
