"""Degreewise monomial combinatorics: the sets X_l and the ideal counts.

For a degree l, every split l = l1 + l2 with both section counts nonnegative
contributes the square-free monomial prod a_i^{eps_i}, where eps_i in {0,1}
records whether the fractional parts {l1*beta_i/alpha_i} + {l2*beta_i/alpha_i}
wrap past 1.  The resulting set X_l generates a square-free monomial ideal
J(l); dim(A/J(l))_{s_l} is the l-th coefficient of the generator series of
the maximal ideal.

Monomials are bit masks: bit i set means variable a_{i+1} divides the monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import TooManyLegs
from .graph import SeifertData
from .series import PoincarePolynomial, l_max_default, s_value

MAX_LEGS = 12


def _check_width(sd: SeifertData) -> None:
    if sd.nu > MAX_LEGS:
        raise TooManyLegs(f"combinatorial layer supports at most {MAX_LEGS} legs, got {sd.nu}")


@lru_cache(maxsize=None)
def _beta_residues(sd: SeifertData) -> tuple[tuple[int, ...], ...]:
    """Per leg, the table r[m] = (m * beta_i) mod alpha_i."""
    return tuple(
        tuple((m * (a - w)) % a for m in range(a)) for a, w in sd.legs
    )


def epsilon(sd: SeifertData, i: int, l1: int, l2: int) -> int:
    """The wrap indicator eps_{i,(l1,l2)} in {0,1} (leg index i is 0-based)."""
    a = sd.legs[i][0]
    r = _beta_residues(sd)[i]
    return 1 if r[l1 % a] + r[l2 % a] >= a else 0


def mask_indices(mask: int) -> list[int]:
    """1-based sorted variable indices of a square-free monomial mask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def indices_mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def minimalize(masks) -> tuple[int, ...]:
    """Minimal elements under divisibility (mask inclusion), sorted."""
    ms = sorted(set(masks), key=lambda x: (bin(x).count("1"), x))
    out = []
    for m in ms:
        if not any(g & m == g for g in out):
            out.append(m)
    return tuple(sorted(out))


@dataclass(frozen=True)
class DegreeCombinatorics:
    """Everything degree-local the classification needs."""

    l: int
    s: int
    m_exponents: tuple[int, ...]   # exponent vector of the transport monomial M_l
    lambda_nonempty: bool
    gens: tuple[int, ...]          # minimal generators of J(l), as masks
    n: int                         # variables dividing every monomial of X_l
    m: int                         # variables in no minimal generator
    contains_one: bool
    raw: tuple[int, ...] | None = None

    def gens_indices(self) -> list[list[int]]:
        return [mask_indices(g) for g in self.gens]


def _scan(sd: SeifertData, l: int, keep_raw: bool):
    res = _beta_residues(sd)
    alphas = [a for a, _ in sd.legs]
    nu = sd.nu
    seen: set[int] = set()
    nonempty = False
    for l1 in range(1, l // 2 + 1):
        l2 = l - l1
        if s_value(sd, l1) < 0 or s_value(sd, l2) < 0:
            continue
        nonempty = True
        mask = 0
        for i in range(nu):
            a = alphas[i]
            r = res[i]
            if r[l1 % a] + r[l2 % a] >= a:
                mask |= 1 << i
        seen.add(mask)
        if mask == 0 and not keep_raw:
            break
    return nonempty, seen


@lru_cache(maxsize=None)
def x_set(sd: SeifertData, l: int) -> DegreeCombinatorics:
    """The set X_l, minimalized, with its derived counts (cached)."""
    return _x_set_impl(sd, l, keep_raw=False)


def x_set_raw(sd: SeifertData, l: int) -> DegreeCombinatorics:
    """Like x_set but retaining the full pre-minimalization monomial set."""
    return _x_set_impl(sd, l, keep_raw=True)


def _x_set_impl(sd: SeifertData, l: int, keep_raw: bool) -> DegreeCombinatorics:
    _check_width(sd)
    if l < 0:
        raise ValueError("degree must be nonnegative")
    nu = sd.nu
    nonempty, seen = _scan(sd, l, keep_raw)
    gens = minimalize(seen) if seen else ()
    contains_one = 0 in seen
    if seen:
        inter = (1 << nu) - 1
        for g in gens:
            inter &= g
        n = bin(inter).count("1")
        union = 0
        for g in gens:
            union |= g
        m = nu - bin(union).count("1")
    else:
        n, m = 0, nu
    m_exp = tuple((l * (a - w)) % a for a, w in sd.legs)
    return DegreeCombinatorics(
        l=l,
        s=s_value(sd, l),
        m_exponents=m_exp,
        lambda_nonempty=nonempty,
        gens=gens,
        n=n,
        m=m,
        contains_one=contains_one,
        raw=tuple(sorted(seen)) if keep_raw else None,
    )


def stanley_reisner_count(gens, degree: int, nu: int) -> int:
    """Number of degree-`degree` monomials in nu variables outside the ideal (gens).

    Signed inclusion-exclusion over subsets of the generators, collapsed by
    union mask: states are subsets of variables, so at most 2^nu survive.
    """
    if degree < 0:
        return 0
    coef = {0: 1}
    for g in gens:
        new = dict(coef)
        for u, c in coef.items():
            v = u | g
            new[v] = new.get(v, 0) - c
        coef = {u: c for u, c in new.items() if c != 0}
    total = 0
    for u, c in coef.items():
        k = degree - bin(u).count("1")
        if k >= 0:
            total += c * comb(k + nu - 1, nu - 1)
    return total


def m_mod_m2_coefficient(sd: SeifertData, l: int) -> int:
    """Coefficient of t^l in the generator series of the maximal ideal: dim(A/J(l))_{s_l}."""
    if l < 1:
        raise ValueError("degrees start at 1")
    s = s_value(sd, l)
    if s < 0:
        return 0
    dc = x_set(sd, l)
    if dc.contains_one:
        return 0
    return stanley_reisner_count(dc.gens, s, sd.nu)


def m_poincare(sd: SeifertData, l_max: int | None = None) -> PoincarePolynomial:
    """Generator series of the maximal ideal up to l_max (default: the analysis horizon)."""
    if l_max is None:
        l_max = l_max_default(sd)
    return PoincarePolynomial(
        {l: m_mod_m2_coefficient(sd, l) for l in range(1, l_max + 1)}
    )


def transport_degree_identity(sd: SeifertData, l: int) -> bool:
    """Check sum_i {l*beta_i/alpha_i} + s_l == l*|e| (exact bookkeeping of the transport)."""
    from fractions import Fraction

    frac_sum = sum(Fraction((l * (a - w)) % a, a) for a, w in sd.legs)
    return frac_sum + s_value(sd, l) == l * sd.abs_e
