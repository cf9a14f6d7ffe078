"""Structural invariants checked across the randomized pool, tying the
combinatorial, numeric, and symbolic paths to each other."""

from math import comb, gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whsing import classify_degree, q_at_params, q_generic
from whsing.embdim import f_alpha_beta, full_report, sample_params
from whsing.monomials import m_poincare, transport_degree_identity, x_set
from whsing.series import l_max_default, s_value


def test_transport_identity(pool):
    for sd in pool:
        for l in range(0, 2 * sd.alpha + 1):
            assert transport_degree_identity(sd, l), (sd, l)


def test_x_set_is_an_antichain(pool):
    for sd in pool[:25]:
        for l in range(1, 2 * sd.alpha + 1):
            if s_value(sd, l) < 0:
                continue
            dc = x_set(sd, l)
            gens = dc.gens
            for i, g in enumerate(gens):
                for j, h in enumerate(gens):
                    if i != j:
                        assert g & h != g, (sd, l, gens)


def test_generator_count_bounded_by_slack(pool):
    # n_l monomials survive m^2 only if the slack s_l admits them
    for sd in pool:
        pm = m_poincare(sd, 2 * sd.alpha)
        for l, c in pm.to_pairs():
            s = s_value(sd, l)
            assert s >= 0
            assert c <= comb(s + sd.nu - 1, sd.nu - 1)


def test_generic_count_is_a_lower_bound(pool):
    for sd in pool[:12]:
        lmx = min(l_max_default(sd), 2 * sd.alpha)
        for l in range(1, lmx + 1):
            if s_value(sd, l) < 0:
                continue
            q, _ = q_generic(sd, l)
            for trial in range(2):
                pt = sample_params(sd.nu, 23, l, trial)
                assert q <= q_at_params(sd, l, pt), (sd, l)


def test_decided_methods_are_parameter_independent(pool):
    for sd in pool[:12]:
        pm = m_poincare(sd)
        lmx = min(l_max_default(sd), 2 * sd.alpha)
        for l in range(1, lmx + 1):
            r = classify_degree(sd, l)
            assert r.q <= pm.coefficient(l)
            if r.method == "NoSection":
                assert s_value(sd, l) < 0 and r.q == 0
                continue
            if r.method != "GenericLinearAlgebra":
                assert r.topological == "Yes"
                pt = sample_params(sd.nu, 31, l, 0)
                assert q_at_params(sd, l, pt) == r.q, (sd, l, r.method)


def test_q_at_params_is_deterministic(pool):
    sd = pool[0]
    pt = sample_params(sd.nu, 5, 7, 0)
    vals = {q_at_params(sd, sd.alpha, pt) for _ in range(3)}
    assert len(vals) == 1


def test_full_report_internal_consistency(pool):
    # full_report cross-checks every applicable closed form and raises on drift
    for sd in pool[:15]:
        rep = full_report(sd)
        assert rep.embdim_generic == rep.p_mx_generic.evaluate_at_one()
        total_q = sum(r.q for r in rep.degrees)
        assert total_q == rep.embdim_generic
        for r in rep.degrees:
            assert r.topological in ("Yes", "No", "Undecided")


coprime_small = st.tuples(st.integers(2, 120), st.integers(1, 119)).filter(
    lambda ab: ab[1] < ab[0] and gcd(ab[0], ab[1]) == 1
)


@settings(max_examples=60, deadline=None)
@given(coprime_small)
def test_f_alpha_beta_shape(pair):
    alpha, beta = pair
    p = f_alpha_beta(alpha, beta)
    degs = p.degrees()
    assert degs[-1] == alpha
    assert degs[0] == -(-alpha // beta)
    assert all(p.coefficient(d) == 1 for d in degs)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=3, max_value=9), st.integers(min_value=0, max_value=3))
def test_sample_params_always_admissible(nu, trial):
    pt = sample_params(nu, "seed", 11, trial)
    vals = list(pt.values())
    assert len(set(vals)) == len(vals)
    assert all(v != 0 for v in vals)
    assert sorted(pt) == list(range(3, nu + 1))
