"""Degree-l monomial combinatorics: the obstruction sets X_l and the
generator series of the maximal ideal."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import E6, FIX_223377, FIX_2345
from whsing import PoincarePolynomial, s_value
from whsing.errors import TooManyLegs
from whsing.graph import SeifertData
from whsing.monomials import (
    MAX_LEGS,
    epsilon,
    indices_mask,
    m_mod_m2_coefficient,
    m_poincare,
    mask_indices,
    minimalize,
    stanley_reisner_count,
    transport_degree_identity,
    x_set,
    x_set_raw,
)

# published (l, s_l, X_l) rows for (2,(2,3,4,5),(1,1,1,4)); variable bits
# a=1, b=2, c=4, d=8
X_TABLE_2345 = {
    6: (0, set()),
    8: (0, set()),
    10: (0, set()),
    11: (0, set()),
    12: (1, {4}),
    15: (1, set()),
    16: (1, {8, 4}),
    20: (2, {8, 12, 6}),
    30: (3, {8, 2, 10, 1, 11}),
    36: (4, {8, 4, 12, 2, 10, 6, 14, 5, 7, 15}),
    60: (7, {8, 4, 12, 2, 10, 6, 14, 5, 13, 7, 15}),
}


def test_x_set_raw_matches_published_table():
    for l, (s, raw) in X_TABLE_2345.items():
        dc = x_set_raw(FIX_2345, l)
        assert dc.s == s, l
        assert set(dc.raw) == raw, l
        assert not dc.contains_one


def test_x_set_minimal_generators():
    assert x_set(FIX_2345, 12).gens == (4,)
    assert x_set(FIX_2345, 16).gens == (4, 8)
    assert x_set(FIX_2345, 20).gens == (6, 8)
    assert x_set(FIX_2345, 30).gens == (1, 2, 8)
    assert x_set(FIX_2345, 36).gens == (2, 4, 8)
    assert x_set(FIX_2345, 60).gens == (2, 4, 8)
    assert x_set(FIX_2345, 15).gens == ()
    # the three disjoint pairs at the top degree of the six-leg fixture
    assert x_set(FIX_223377, 42).gens == (3, 12, 48)
    # the lone variable of the degree-6 obstruction is the (2,1) leg, listed first
    assert x_set(E6, 6).gens == (1,)


def test_x_set_counts():
    dc = x_set(FIX_2345, 12)
    assert (dc.n, dc.m) == (1, 3)
    dc = x_set(FIX_2345, 20)
    assert (dc.n, dc.m) == (0, 1)
    dc = x_set(FIX_2345, 36)
    assert (dc.n, dc.m) == (0, 1)
    dc = x_set(FIX_223377, 42)
    assert (dc.n, dc.m) == (0, 0)


def test_transport_monomial_exponents():
    assert x_set(FIX_2345, 6).m_exponents == (0, 0, 2, 1)
    assert x_set(FIX_2345, 8).m_exponents == (0, 1, 0, 3)
    assert x_set(FIX_2345, 60).m_exponents == (0, 0, 0, 0)


def test_epsilon_additivity_on_residues():
    # eps flags exactly the legs where residues wrap when composing degrees
    sd = FIX_2345
    for l1 in range(1, 40):
        for l2 in range(1, 40):
            for i, (a, w) in enumerate(sd.legs):
                r1 = (l1 * (a - w)) % a
                r2 = (l2 * (a - w)) % a
                r12 = ((l1 + l2) * (a - w)) % a
                wrapped = r1 + r2 - r12
                assert wrapped in (0, a)
                assert epsilon(sd, i, l1, l2) == (1 if wrapped else 0)


def test_transport_degree_identity_goldens():
    for sd in (FIX_2345, FIX_223377, E6):
        for l in range(0, 2 * sd.alpha + 1):
            assert transport_degree_identity(sd, l)


def test_mask_round_trip():
    assert mask_indices(0) == []
    assert mask_indices(13) == [1, 3, 4]
    assert indices_mask([1, 3, 4]) == 13


@given(st.sets(st.integers(1, 9)))
def test_indices_mask_inverse(ix):
    assert set(mask_indices(indices_mask(ix))) == ix


@given(st.sets(st.integers(0, 255), max_size=12))
def test_minimalize_antichain(masks):
    out = minimalize(masks)
    assert set(out) <= set(masks)
    # antichain: no member divides another
    for g1, g2 in itertools.permutations(out, 2):
        assert g1 & g2 != g1
    # every input is divisible by some survivor
    for m in masks:
        assert any(g & m == g for g in out)


@given(st.lists(st.integers(1, 15), max_size=4), st.integers(0, 7))
def test_stanley_reisner_count_brute(gens, degree):
    # brute force over exponent vectors in 4 variables
    nu = 4
    count = 0
    for k in itertools.product(range(degree + 1), repeat=nu):
        if sum(k) != degree:
            continue
        support = indices_mask(i + 1 for i in range(nu) if k[i] > 0)
        if not any(g & support == g for g in gens):
            count += 1
    assert stanley_reisner_count(gens, degree, nu) == count


def test_m_poincare_goldens():
    # degree profile of the 21 invariant-ring generators
    assert m_poincare(FIX_2345) == PoincarePolynomial.parse(
        "t^6+t^8+t^10+t^11+3t^12+4t^15+2t^16+5t^20+t^30+t^36+t^60"
    )
    assert m_poincare(E6) == PoincarePolynomial.parse("t^3+t^4+2t^6")
    assert m_poincare(FIX_223377, 42) == PoincarePolynomial.parse(
        "t^6+t^14+t^21+18t^42"
    )
    assert m_poincare(FIX_2345).evaluate_at_one() == 21
    assert m_poincare(FIX_223377, 42).evaluate_at_one() == 21


def test_m_mod_m2_rejects_degree_zero():
    with pytest.raises(ValueError):
        m_mod_m2_coefficient(FIX_2345, 0)


def test_n_at_most_s(pool):
    for sd in pool:
        for l in range(1, 2 * sd.alpha + 1):
            dc = x_set(sd, l)
            if dc.gens:
                assert dc.n <= max(0, s_value(sd, l))


def test_width_guard():
    legs = tuple((2, 1) for _ in range(MAX_LEGS + 1))
    sd = SeifertData(MAX_LEGS + 1, legs)
    with pytest.raises(TooManyLegs):
        x_set(sd, 2)
