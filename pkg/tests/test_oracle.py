"""Cover-side recomputation: character slices, transport, and generator counts
obtained independently of the X_l combinatorics."""

from fractions import Fraction

import pytest

from conftest import E6, FIX_14_21_5, FIX_223377, FIX_2345, FIX_420, GOLDENS
from whsing import SeifertData, ValidationError, oracle_q
from whsing.embdim import sample_params
from whsing.errors import InadmissibleParams, OracleCapExceeded
from whsing.monomials import m_poincare
from whsing.oracle import (
    enumerate_monomials,
    monomial_weight,
    mu_is_trivial,
    oracle_m_generators,
    slice_size,
    verify_psi_transport,
)
from whsing.series import PoincarePolynomial, l_max_default, s_value


def test_weight_zero_slice_is_the_constant():
    for sd in (FIX_2345, E6, FIX_223377):
        assert enumerate_monomials(sd, 0, verify=True) == [(0,) * sd.nu]


def test_slice_golden_counts():
    mons = enumerate_monomials(FIX_2345, 60, verify=True)
    assert len(mons) == 120
    assert len(set(mons)) == 120
    assert slice_size(FIX_2345, 60) == 120
    assert slice_size(FIX_2345, 60, "mu") == 165
    assert slice_size(FIX_2345, 60, "mu_inv") == 84
    assert slice_size(FIX_2345, 1) == 0
    assert enumerate_monomials(FIX_2345, 1) == []


def test_slice_membership_golden():
    assert (0, 0, 2, 1) in enumerate_monomials(FIX_2345, 6)
    assert (0, 1, 0, 3) in enumerate_monomials(FIX_2345, 8)
    assert (14, 0, 0, 0) in enumerate_monomials(FIX_2345, 60)
    table_420 = {
        60: (0, 0, 0, 0, 3),
        84: (0, 0, 1, 0, 0),
        210: (0, 2, 0, 0, 0),
        315: (0, 1, 0, 3, 0),
        335: (1, 1, 0, 1, 1),
        440: (1, 0, 0, 4, 1),
        460: (2, 0, 0, 2, 2),
    }
    for l, k in table_420.items():
        assert k in enumerate_monomials(FIX_420, l, verify=True), l
    for k in ((3, 0, 0, 0, 0), (0, 0, 0, 6, 0)):
        assert k in enumerate_monomials(FIX_420, 420, verify=True)


def test_monomial_weights():
    assert monomial_weight(FIX_2345, (0, 0, 2, 1)) == 6
    # z_i^{alpha_i} always sits at the equation weight alpha/o
    for i, (a, _) in enumerate(FIX_2345.legs):
        k = [0] * FIX_2345.nu
        k[i] = a
        assert monomial_weight(FIX_2345, tuple(k)) == Fraction(60, 7)
    twisted = enumerate_monomials(FIX_2345, 60, "mu", verify=True)
    assert all(monomial_weight(FIX_2345, k) == 60 + Fraction(60, 7) for k in twisted)


def test_character_validation():
    with pytest.raises(ValidationError):
        enumerate_monomials(FIX_2345, -1)
    with pytest.raises(ValidationError):
        enumerate_monomials(FIX_2345, 6, "chi")


def test_psi_transport():
    assert verify_psi_transport(FIX_2345, 60)
    assert verify_psi_transport(FIX_2345, 1)
    for sd in (FIX_2345, E6):
        for l in range(0, sd.alpha + 1):
            assert verify_psi_transport(sd, l), l


def test_mu_triviality_tracks_o():
    for sd in GOLDENS.values():
        assert mu_is_trivial(sd) == (sd.o == 1)


def _capped_horizon(sd, lmx):
    from whsing.oracle import BASIS_CAP

    l = 0
    while l < lmx and slice_size(sd, l + 1) <= BASIS_CAP:
        l += 1
    return l


def test_oracle_generators_match_combinatorial_path():
    assert oracle_m_generators(E6, 6) == PoincarePolynomial.parse("t^3+t^4+2t^6")
    for name, sd in GOLDENS.items():
        pm = m_poincare(sd)
        lmx = _capped_horizon(sd, max(pm.degrees()))
        assert oracle_m_generators(sd, lmx) == pm.truncate(lmx), name
    pm420 = m_poincare(FIX_420)
    assert pm420.coefficient(420) == 2
    assert pm420.evaluate_at_one() == 9


def test_oracle_q_golden_2345():
    pt = sample_params(FIX_2345.nu, 0, 0, 0)
    got = {l: oracle_q(FIX_2345, l, pt) for l in (6, 8, 10, 11, 12, 15)}
    assert got == {6: 1, 8: 1, 10: 1, 11: 1, 12: 1, 15: 2}
    assert oracle_q(FIX_2345, 2, pt) == 0


def test_oracle_q_parameter_jump():
    generic = {3: Fraction(2), 4: Fraction(3), 5: Fraction(5), 6: Fraction(7)}
    stratum = {3: Fraction(2), 4: Fraction(6), 5: Fraction(3), 6: Fraction(4)}
    assert oracle_q(FIX_223377, 42, generic) == 0
    assert oracle_q(FIX_223377, 42, stratum) == 1


def test_oracle_q_e6():
    pt = {3: Fraction(5)}
    assert [oracle_q(E6, l, pt) for l in (3, 4, 6)] == [1, 1, 1]


def test_oracle_q_validation():
    pt = sample_params(FIX_2345.nu, 0, 0, 0)
    with pytest.raises(ValidationError):
        oracle_q(FIX_2345, 0, pt)
    with pytest.raises(InadmissibleParams):
        oracle_q(FIX_2345, 6, {3: 1, 4: 1})
    with pytest.raises(InadmissibleParams):
        oracle_q(FIX_2345, 6, {3: 0, 4: 2})
    with pytest.raises(InadmissibleParams):
        oracle_q(FIX_2345, 6, {3: 1})


def test_oracle_cap():
    assert s_value(FIX_2345, 420) == 49
    with pytest.raises(OracleCapExceeded):
        enumerate_monomials(FIX_2345, 420)


def test_oracle_matches_m_poincare_on_small_pool(pool):
    for sd in pool[:8]:
        pm = m_poincare(sd)
        lmx = max(pm.degrees())
        assert oracle_m_generators(sd, lmx) == pm


def test_oracle_q_against_generic_count(pool):
    from whsing import q_at_params

    for sd in pool[:6]:
        for l in range(1, min(l_max_default(sd), 2 * sd.alpha) + 1):
            if s_value(sd, l) < 0:
                continue
            pt = sample_params(sd.nu, 7, l, 0)
            assert oracle_q(sd, l, pt) == q_at_params(sd, l, pt)
