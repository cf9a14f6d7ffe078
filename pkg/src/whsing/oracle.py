"""Independent recomputation of generator counts from invariant monomials.

Everything here works directly in the cover coordinates z_1..z_nu carrying the
diagonal action of the discriminant group H: enumerate character slices of the
exponent lattice, build the degree-l parts of m^2 and of the equation ideal at
explicit parameters, and count minimal generators by exact sparse rank.  The
only code shared with the main path is SeifertData and rational arithmetic;
agreement between the two is the point of this module.

A monomial z^k lies in the weight-l invariant slice iff k_i ≡ -l*omega_i
(mod alpha_i) for every leg and sum(k_i/alpha_i) = l*|e|.  The two twisted
slices used by the equation ideal keep the same residues and shift the weight
sum by -1 (mu_inv, weight l - alpha/o) or +1 (mu, weight l + alpha/o).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import ConsistencyError, InadmissibleParams, OracleCapExceeded, ValidationError
from .graph import SeifertData, build_graph, group_data
from .series import PoincarePolynomial, s_value

BASIS_CAP = 20000

_CHI = {"trivial": 0, "mu": 1, "mu_inv": -1}


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=4096)
def _residues_mod(sd: SeifertData, lm: int) -> tuple[int, ...]:
    return tuple((lm * (a - w)) % a for a, w in sd.legs)


def _residues(sd: SeifertData, l: int) -> tuple[int, ...]:
    return _residues_mod(sd, l % sd.alpha)


@lru_cache(maxsize=None)
def _pairing(sd: SeifertData):
    return group_data(build_graph(sd)).pairing


def slice_size(sd: SeifertData, l: int, character: str = "trivial") -> int:
    """Predicted number of monomials in the slice, without enumerating."""
    total = s_value(sd, l) + _CHI[character]
    if total < 0:
        return 0
    return comb(total + sd.nu - 1, sd.nu - 1)


def monomial_weight(sd: SeifertData, k) -> Fraction:
    return sum(Fraction(ki, a) for ki, (a, _) in zip(k, sd.legs)) / sd.abs_e


def mu_is_trivial(sd: SeifertData) -> bool:
    """Whether the character carried by the equations is trivial on all of H."""
    pairing = _pairing(sd)
    return all((pairing[0][i] % 1) == 0 for i in range(1, sd.nu + 1))


def _verify_slice(sd: SeifertData, l: int, character: str, monomials) -> None:
    pairing = _pairing(sd)
    chi = _CHI[character]
    want = l + Fraction(sd.alpha, sd.o) * chi
    nu = sd.nu
    for k in monomials:
        if monomial_weight(sd, k) != want:
            raise ConsistencyError(f"slice ({l}, {character}): {k} has the wrong weight")
        for i in range(1, nu + 1):
            lhs = sum(k[j] * pairing[i][j + 1] for j in range(nu))
            if (lhs - chi * pairing[0][i]) % 1 != 0:
                raise ConsistencyError(
                    f"slice ({l}, {character}): {k} fails the character test at leg {i}"
                )


def enumerate_monomials(sd: SeifertData, l: int, character: str = "trivial",
                        verify: bool = False) -> list[tuple[int, ...]]:
    """All exponent vectors of the weight-l slice of the given character.

    verify=True re-checks every vector against the exact pairing table of H
    (mod-1 rational comparisons) instead of trusting the residue walk.
    """
    if l < 0:
        raise ValidationError("weights start at 0")
    if character not in _CHI:
        raise ValidationError(f"unknown character {character!r}")
    total = s_value(sd, l) + _CHI[character]
    if total < 0:
        return []
    size = comb(total + sd.nu - 1, sd.nu - 1)
    if size > BASIS_CAP:
        raise OracleCapExceeded(
            f"slice ({l}, {character}) holds {size} monomials, over the cap {BASIS_CAP}"
        )
    rho = _residues(sd, l)
    alphas = tuple(a for a, _ in sd.legs)
    out = [
        tuple(r + a * mi for r, a, mi in zip(rho, alphas, m))
        for m in _compositions(total, sd.nu)
    ]
    if verify:
        _verify_slice(sd, l, character, out)
    return out


def verify_psi_transport(sd: SeifertData, l: int) -> bool:
    """Bijectivity of k -> (k_i - rho_i)/alpha_i onto exponent tuples of size s_l."""
    mons = enumerate_monomials(sd, l, "trivial", verify=True)
    s = s_value(sd, l)
    if s < 0:
        return not mons
    rho = _residues(sd, l)
    alphas = tuple(a for a, _ in sd.legs)
    transported = set()
    for k in mons:
        m = []
        for ki, r, a in zip(k, rho, alphas):
            if ki < r or (ki - r) % a:
                return False
            m.append((ki - r) // a)
        transported.add(tuple(m))
    if len(transported) != len(mons) or len(mons) != comb(s + sd.nu - 1, sd.nu - 1):
        return False
    return transported == set(_compositions(s, sd.nu))


@lru_cache(maxsize=64)
def _square_set(sd: SeifertData, l: int) -> frozenset:
    """Weight-l invariant monomials divisible by a lower positive-weight invariant.

    A divisor at weight l' exists iff the residues rho(l') fit under k with
    total slack >= s_{l'}; the complementary factor is then automatic, so
    scanning l' <= l/2 is enough.
    """
    alphas = tuple(a for a, _ in sd.legs)
    levels = []
    for lp in range(1, l // 2 + 1):
        s = s_value(sd, lp)
        if s >= 0:
            levels.append((_residues(sd, lp), s))
    out = set()
    for k in enumerate_monomials(sd, l):
        for rho, s in levels:
            slack = 0
            for ki, r, a in zip(k, rho, alphas):
                if ki < r:
                    slack = -1
                    break
                slack += (ki - r) // a
            if slack >= s:
                out.add(k)
                break
    return frozenset(out)


def oracle_m_generators(sd: SeifertData, l_max: int) -> PoincarePolynomial:
    """Per-degree counts of invariant monomials that are not products of smaller ones."""
    if l_max < 0:
        raise ValidationError("l_max must be nonnegative")
    coeffs = {}
    for l in range(1, l_max + 1):
        count = slice_size(sd, l) - len(_square_set(sd, l))
        if count:
            coeffs[l] = count
    return PoincarePolynomial(coeffs)


def _admissible_point(sd: SeifertData, params) -> dict[int, Fraction]:
    try:
        point = {int(k): Fraction(v) for k, v in dict(params).items()}
    except (TypeError, ValueError) as exc:
        raise InadmissibleParams(f"unreadable parameter assignment: {exc}") from None
    if set(point) != set(range(3, sd.nu + 1)):
        raise InadmissibleParams(
            f"parameters must be keyed by legs 3..{sd.nu}, got {sorted(point)}"
        )
    vals = list(point.values())
    if any(v == 0 for v in vals) or len(set(vals)) != len(vals):
        raise InadmissibleParams(f"parameters must be nonzero and pairwise distinct: {point}")
    return point


def _sparse_rank(rows) -> int:
    """Rank of sparse rational rows given as {column: value} dicts."""
    pivots: dict = {}
    rank = 0
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            c = min(r)
            if c in pivots:
                f = r.pop(c)
                for cc, vv in pivots[c].items():
                    nv = r.get(cc, 0) - f * vv
                    if nv:
                        r[cc] = nv
                    else:
                        r.pop(cc, None)
            else:
                inv = 1 / r[c]
                pivots[c] = {cc: vv * inv for cc, vv in r.items() if cc != c}
                rank += 1
                break
    return rank


def oracle_q(sd: SeifertData, l: int, params) -> int:
    """Minimal generator count at weight l, straight from the cover presentation.

    Basis: the invariant slice.  Removed: monomials lying in m^2, then the rank
    of the equation multiples m'*f_j (m' over the mu_inv slice one equation
    weight below) projected away from the m^2 columns.
    """
    point = _admissible_point(sd, params)
    if l < 1:
        raise ValidationError("weights of maximal-ideal elements start at 1")
    if s_value(sd, l) < 0:
        return 0
    if (sd.o == 1) != mu_is_trivial(sd):
        raise ConsistencyError("o = 1 must coincide with the equations being invariant")
    alphas = tuple(a for a, _ in sd.legs)
    # every term of every equation has weight alpha_i * wt(z_i) = 1/|e| = alpha/o
    for a in alphas:
        if Fraction(a) / (sd.abs_e * a) != Fraction(sd.alpha, sd.o):
            raise ConsistencyError("equation terms must share the weight alpha/o")
    basis = enumerate_monomials(sd, l)
    index = {k: i for i, k in enumerate(basis)}
    square = _square_set(sd, l)
    n_square = len(square)
    rows = []
    for mp in enumerate_monomials(sd, l, "mu_inv"):
        for leg in range(3, sd.nu + 1):
            row: dict[int, Fraction] = {}
            for var, coeff in ((0, point[leg]), (1, Fraction(1)), (leg - 1, Fraction(1))):
                k = list(mp)
                k[var] += alphas[var]
                k = tuple(k)
                if k not in index:
                    raise ConsistencyError(
                        f"equation multiple {k} missing from the weight-{l} slice"
                    )
                if k in square:
                    continue
                ci = index[k]
                row[ci] = row.get(ci, Fraction(0)) + coeff
            if row:
                rows.append(row)
    return len(basis) - n_square - _sparse_rank(rows)
