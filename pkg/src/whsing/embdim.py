"""Minimal generators of the graded coordinate ring: counts per degree and moduli.

The degree-l count Q(l) is the dimension of a graded quotient of a polynomial
ring A = C[a_1..a_nu] by the monomial ideal J(l) from `monomials` together
with nu-2 generic linear forms.  Eliminating the linear forms reduces each
question to the rank of a matrix of binary forms whose entries are polynomial
in the moduli parameters p_3..p_nu (one per leg past the second); Q(l) is
topological exactly when that rank is constant over admissible parameters
(all p_i nonzero and pairwise distinct).

A seven-step cascade settles most degrees by combinatorics alone; the rest
fall to randomized exact rank computations, with an optional symbolic-minor
pass that either certifies parameter independence or exhibits a discriminant
hypersurface and a witness point where the count jumps.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations
from math import comb
from operator import and_

import sympy

from .arith import convergents, frac_str
from .errors import ConsistencyError, InadmissibleParams, ValidationError
from .graph import SeifertData, build_graph, canonical_cycle, fundamental_cycle, group_data
from .linalg import rank
from .monomials import m_poincare, mask_indices, x_set, x_set_raw
from .parampoly import (
    ParamPoly,
    gcd_all,
    irreducible_factors,
    nonunit_core,
    param_symbol,
    to_fraction,
    to_sympy,
)
from .series import PoincarePolynomial, gamma, l_max_default, s_value, series_bundle


class _NotApplicable:
    """Singleton returned by closed-form routines whose precondition fails."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self):
        return False

    def __repr__(self):
        return "NotApplicable"


NotApplicable = _NotApplicable()


@dataclass(frozen=True)
class AnalyzeOptions:
    """Knobs for the per-degree analysis.

    minors turns on the symbolic discriminant pass for degrees the cascade
    cannot force; max_symbolic and max_minors bound that pass (too large ->
    honest Undecided).  Randomness is derived from (seed, degree, trial) so
    results never depend on scheduling.
    """

    trials: int = 5
    seed: int = 0
    l_max: int | None = None
    minors: bool = False
    threads: int = 1
    max_symbolic: int = 12
    max_minors: int = 2000
    witness_tries: int = 60


@dataclass(frozen=True)
class DegreeReport:
    l: int
    s: int
    method: str
    q: int
    topological: str
    n: int
    m: int
    gens: tuple[int, ...]
    generic_rank: int = 0
    discriminants: tuple[str, ...] = ()
    witness: tuple[tuple[int, Fraction], ...] | None = None
    q_at_witness: int | None = None

    def witness_dict(self) -> dict[int, Fraction] | None:
        return dict(self.witness) if self.witness is not None else None

    def to_json(self) -> dict:
        out = {
            "l": self.l,
            "s": self.s,
            "method": self.method,
            "q": self.q,
            "topological": self.topological,
            "n": self.n,
            "m": self.m,
            "gens": [mask_indices(g) for g in self.gens],
        }
        if self.discriminants:
            out["discriminants"] = list(self.discriminants)
        if self.witness is not None:
            out["witness"] = _witness_json(dict(self.witness))
            out["q_at_witness"] = self.q_at_witness
        return out


def _witness_json(point: dict[int, Fraction]) -> dict[str, str]:
    # published labels: p_k multiplies the splice row of leg k+2
    return {f"p{leg - 2}": frac_str(v) for leg, v in sorted(point.items())}


# ---------------------------------------------------------------------------
# parameter points

_PARAM_POOL_SIZE = 64


@lru_cache(maxsize=1)
def _prime_pool() -> tuple[int, ...]:
    primes: list[int] = []
    n = 2
    while len(primes) < _PARAM_POOL_SIZE:
        if all(n % p for p in primes if p * p <= n):
            primes.append(n)
        n += 1
    return tuple(primes)


def sample_params(nu: int, seed, l: int, trial: int) -> dict[int, Fraction]:
    """Deterministic admissible parameter point for (seed, degree, trial).

    Values are distinct primes through a seeded shuffle, occasionally negated
    or inverted; distinctness survives because primes, their negatives, and
    their reciprocals never collide.
    """
    rng = random.Random(f"{seed}:{l}:{trial}")
    pool = list(_prime_pool())
    rng.shuffle(pool)
    point: dict[int, Fraction] = {}
    for idx, leg in enumerate(range(3, nu + 1)):
        v = Fraction(pool[idx])
        style = rng.randrange(6)
        if style == 4:
            v = -v
        elif style == 5:
            v = 1 / v
        point[leg] = v
    return point


def normalize_params(sd: SeifertData, params) -> dict[int, Fraction]:
    """Validate an explicit parameter assignment keyed by leg index (3..nu)."""
    expected = set(range(3, sd.nu + 1))
    try:
        point = {int(k): Fraction(v) for k, v in dict(params).items()}
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"unreadable parameter assignment: {exc}") from None
    if set(point) != expected:
        raise ValidationError(
            f"parameters must be keyed by legs {sorted(expected)}, got {sorted(point)}"
        )
    vals = list(point.values())
    if any(v == 0 for v in vals) or len(set(vals)) != len(vals):
        raise InadmissibleParams(f"parameters must be nonzero and pairwise distinct: {point}")
    return point


# ---------------------------------------------------------------------------
# binary reduction

def _binary_coeffs(mask: int, xy, zero, one):
    # coefficients of prod_{i in mask} (x_i*a1 + y_i*a2) by a2-degree
    coeffs = [one]
    for i in mask_indices(mask):
        x, y = xy(i)
        new = [zero] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            new[k] = new[k] + c * x
            new[k + 1] = new[k + 1] + c * y
        coeffs = new
    return coeffs


def reduce_to_binary(gen: int, params: dict[int, Fraction] | None = None) -> list[ParamPoly]:
    """Binary form of a squarefree monomial under a1 -> a1, a2 -> a2, a_i -> p_i*a1 + a2.

    With params=None the coefficients stay symbolic in the p_i; an explicit
    assignment produces constant ParamPolys.  Coefficients are listed by
    descending a1-degree, so gen={3,4} gives [p3*p4, p3+p4, 1].
    """
    if params is None:
        def xy(i):
            if i == 1:
                return (sympy.Integer(1), sympy.Integer(0))
            if i == 2:
                return (sympy.Integer(0), sympy.Integer(1))
            return (param_symbol(i), sympy.Integer(1))
        raw = _binary_coeffs(gen, xy, sympy.Integer(0), sympy.Integer(1))
        return [ParamPoly(c) for c in raw]
    pt = {int(k): Fraction(v) for k, v in params.items()}

    def xy_num(i):
        if i == 1:
            return (Fraction(1), Fraction(0))
        if i == 2:
            return (Fraction(0), Fraction(1))
        return (pt[i], Fraction(1))

    raw = _binary_coeffs(gen, xy_num, Fraction(0), Fraction(1))
    return [ParamPoly.const(c) for c in raw]


def _reduced_gens(dc) -> tuple[int, int, tuple[int, ...]]:
    """Strip the variables common to every generator (they factor out of J)."""
    common = reduce(and_, dc.gens)
    n = common.bit_count()
    stripped = tuple(g & ~common for g in dc.gens)
    return common, n, stripped


def _numeric_rows(stripped, sp: int, params: dict[int, Fraction]):
    F0, F1 = Fraction(0), Fraction(1)

    def xy(i):
        if i == 1:
            return (F1, F0)
        if i == 2:
            return (F0, F1)
        return (params[i], F1)

    rows = []
    for g in stripped:
        d = g.bit_count()
        if d > sp:
            continue
        b = _binary_coeffs(g, xy, F0, F1)
        for off in range(sp - d + 1):
            rows.append([F0] * off + b + [F0] * (sp - d - off))
    return rows


def _symbolic_rows(stripped, sp: int):
    Z, O = sympy.Integer(0), sympy.Integer(1)

    def xy(i):
        if i == 1:
            return (O, Z)
        if i == 2:
            return (Z, O)
        return (param_symbol(i), O)

    rows = []
    for g in stripped:
        d = g.bit_count()
        if d > sp:
            continue
        b = _binary_coeffs(g, xy, Z, O)
        for off in range(sp - d + 1):
            rows.append([Z] * off + b + [Z] * (sp - d - off))
    return rows


# ---------------------------------------------------------------------------
# Q at explicit and generic parameters

def q_at_params(sd: SeifertData, l: int, params) -> int:
    """dim of the degree-s_l part of A modulo J(l) and the moduli linear forms."""
    point = normalize_params(sd, params)
    s = s_value(sd, l)
    if s < 0:
        raise ValidationError(f"degree {l} has s = {s} < 0; no sections to count")
    dc = x_set(sd, l)
    if not dc.gens:
        return s + 1
    if dc.contains_one:
        return 0
    common, n, stripped = _reduced_gens(dc)
    sp = s - n
    rows = _numeric_rows(stripped, sp, point)
    rk = rank(rows) if rows else 0
    return n + (sp + 1 - rk)


def _q_generic_detail(sd: SeifertData, l: int, trials: int, seed):
    """(q, best_rank, executed trial ranks).  Generic rank is the max over trials."""
    s = s_value(sd, l)
    if s < 0:
        return 0, 0, ()
    dc = x_set(sd, l)
    if not dc.gens:
        return s + 1, 0, ()
    if dc.contains_one:
        return 0, 0, ()
    common, n, stripped = _reduced_gens(dc)
    sp = s - n
    nrows = sum(sp - g.bit_count() + 1 for g in stripped if g.bit_count() <= sp)
    if nrows == 0:
        return s + 1, 0, ()
    bound = min(nrows, sp + 1)
    ranks: list[int] = []
    hits_at_bound = 0
    for t in range(max(1, trials)):
        point = sample_params(sd.nu, seed, l, t)
        rk = rank(_numeric_rows(stripped, sp, point))
        ranks.append(rk)
        if rk == bound:
            hits_at_bound += 1
            if hits_at_bound >= 2:
                break
    best = max(ranks)
    return n + (sp + 1 - best), best, tuple(ranks)


def q_generic(sd: SeifertData, l: int, trials: int = 5, seed=0) -> tuple[int, int]:
    """Generic count and the matrix rank achieving it."""
    q, rk, _ = _q_generic_detail(sd, l, trials, seed)
    return q, rk


# ---------------------------------------------------------------------------
# per-degree classification

_YES, _NO, _UNDECIDED = "Yes", "No", "Undecided"


def classify_degree(sd: SeifertData, l: int, options: AnalyzeOptions | None = None) -> DegreeReport:
    """Decide Q(l) by the degree cascade; fall back to randomized linear algebra.

    Steps: negative section count; empty obstruction set; the unit monomial;
    a single-variable generator; the large-section bound s >= nu-m-1; forced
    parameter independence when nu-n <= 5; finally generic rank with optional
    symbolic minors.
    """
    opts = options or AnalyzeOptions()
    if l < 1:
        raise ValidationError("degrees start at 1")
    s = s_value(sd, l)
    nu = sd.nu
    if s < 0:
        return DegreeReport(l, s, "NoSection", 0, _YES, 0, nu, ())
    dc = x_set(sd, l)
    gens = dc.gens
    if not gens:
        return DegreeReport(l, s, "FreeCase", s + 1, _YES, dc.n, dc.m, ())
    if dc.contains_one:
        return DegreeReport(l, s, "EasyCase", 0, _YES, dc.n, dc.m, gens)
    if any(g.bit_count() == 1 for g in gens):
        # a lone variable generates J only when it is the whole antichain
        q = dc.n if len(gens) == 1 else 0
        return DegreeReport(l, s, "EasyCase", q, _YES, dc.n, dc.m, gens)
    if s >= nu - dc.m - 1:
        return DegreeReport(l, s, "KeyFormula", dc.n, _YES, dc.n, dc.m, gens)
    q, rk, ranks = _q_generic_detail(sd, l, opts.trials, opts.seed)
    if q < dc.n:
        raise ConsistencyError(f"degree {l}: computed q = {q} below the floor n = {dc.n}")
    if nu - dc.n <= 5:
        if len(set(ranks)) > 1:
            raise ConsistencyError(
                f"degree {l}: rank varies across trials {ranks} in a forced-topological case"
            )
        return DegreeReport(l, s, "GenericLinearAlgebra", q, _YES, dc.n, dc.m, gens, rk)
    if not opts.minors:
        return DegreeReport(l, s, "GenericLinearAlgebra", q, _UNDECIDED, dc.n, dc.m, gens, rk)
    status, cores, witness = topologicality_minors(sd, l, rk, opts)
    disc = tuple(c.canonical_str(label_offset=2) for c in cores)
    q_w = None
    wit_tuple = None
    if witness is not None:
        q_w = q_at_params(sd, l, witness)
        if q_w <= q:
            raise ConsistencyError(
                f"degree {l}: witness fails to raise the count ({q_w} <= {q})"
            )
        wit_tuple = tuple(sorted(witness.items()))
    return DegreeReport(
        l, s, "GenericLinearAlgebra", q, status, dc.n, dc.m, gens, rk, disc, wit_tuple, q_w
    )


# ---------------------------------------------------------------------------
# symbolic minors and witnesses

def topologicality_minors(
    sd: SeifertData, l: int, generic_rank: int, options: AnalyzeOptions | None = None
):
    """(status, deduplicated minor cores, witness point or None).

    All generic_rank-sized minors of the symbolic matrix are computed; a minor
    that is a product of admissible units certifies parameter independence.
    Otherwise the common factors of the minor cores drive a bounded search for
    an admissible point killing every minor.
    """
    opts = options or AnalyzeOptions()
    s = s_value(sd, l)
    dc = x_set(sd, l)
    if s < 0 or not dc.gens or dc.contains_one:
        raise ValidationError("minors pass expects a degree that reached linear algebra")
    common, n, stripped = _reduced_gens(dc)
    sp = s - n
    rows = _symbolic_rows(stripped, sp)
    nrows, ncols = len(rows), sp + 1
    if nrows > opts.max_symbolic or ncols > opts.max_symbolic:
        return _UNDECIDED, [], None
    r = generic_rank
    if r <= 0 or r > min(nrows, ncols):
        raise ConsistencyError(f"degree {l}: generic rank {r} incompatible with {nrows}x{ncols}")
    if comb(nrows, r) * comb(ncols, r) > opts.max_minors:
        return _UNDECIDED, [], None
    mat = sympy.Matrix(rows)
    minors: list[ParamPoly] = []
    for rsel in combinations(range(nrows), r):
        for csel in combinations(range(ncols), r):
            d = sympy.expand(mat[rsel, csel].det(method="berkowitz"))
            if d != 0:
                minors.append(ParamPoly(d))
    if not minors:
        raise ConsistencyError(f"degree {l}: no nonzero {r}-minor despite numeric rank {r}")
    cores = []
    seen = set()
    for p in minors:
        core = nonunit_core(p)
        key = core.canonical_str()
        if key not in seen:
            seen.add(key)
            cores.append(core)
    cores.sort(key=lambda c: c.canonical_str())
    if any(c.is_constant() for c in cores):
        # some minor is a unit times a constant: full rank at every admissible point
        return _YES, [c for c in cores if not c.is_constant()], None
    candidates = irreducible_factors(gcd_all(cores))
    if not candidates:
        # no single common factor; fall back to factors of individual cores
        pool: list[ParamPoly] = []
        pool_seen: set[str] = set()
        for c in cores:
            for f in irreducible_factors(c):
                key = f.canonical_str()
                if key not in pool_seen:
                    pool_seen.add(key)
                    pool.append(f)
        candidates = pool
    candidates.sort(key=lambda c: c.canonical_str())
    for phi in candidates:
        point = _admissible_zero(sd, l, phi, opts)
        if point is None:
            continue
        if all(m.evaluate(point) == 0 for m in minors):
            return _NO, cores, point
    return _UNDECIDED, cores, None


def _admissible_zero(sd: SeifertData, l: int, phi: ParamPoly, opts: AnalyzeOptions):
    """Bounded search for an admissible rational zero of phi."""
    legs = list(range(3, sd.nu + 1))
    phi_legs = [int(s.name[1:]) for s in phi.variables()]
    if not phi_legs:
        return None
    rng = random.Random(f"{opts.seed}:witness:{l}:{phi.canonical_str()}")
    linear = [v for v in phi_legs if phi.degree_in(v) == 1]
    for attempt in range(opts.witness_tries):
        vals = [Fraction(p) for p in rng.sample(_prime_pool(), len(legs) + 2)]
        if rng.randrange(2):
            vals = [1 / v for v in vals]
        solve_for = (linear or phi_legs)[attempt % len(linear or phi_legs)]
        assignment: dict[int, Fraction] = {}
        vi = 0
        for leg in legs:
            if leg != solve_for:
                assignment[leg] = vals[vi]
                vi += 1
        subs = {param_symbol(i): to_sympy(assignment[i]) for i in phi_legs if i != solve_for}
        expr = sympy.expand(phi.expr.subs(subs))
        sym = param_symbol(solve_for)
        poly = sympy.Poly(expr, sym)
        roots = []
        if poly.degree() == 1:
            a, b = poly.all_coeffs()
            roots = [to_fraction(sympy.Rational(-b, a))] if a != 0 else []
        elif poly.degree() > 1:
            roots = [
                to_fraction(rt)
                for rt in sympy.roots(poly, sym)
                if isinstance(rt, sympy.Rational)
            ]
        for root in roots:
            candidate = dict(assignment)
            candidate[solve_for] = root
            values = list(candidate.values())
            if all(v != 0 for v in values) and len(set(values)) == len(values):
                if phi.evaluate(candidate) == 0:
                    return candidate
    return None


# ---------------------------------------------------------------------------
# closed forms

def f_alpha_beta(alpha: int, beta: int) -> PoincarePolynomial:
    """Sum of t^r over the convergent numerators r of alpha/beta."""
    return PoincarePolynomial.from_pairs((r, 1) for r, _ in convergents(alpha, beta))


def _o1_data(sd: SeifertData):
    if sd.o != 1:
        raise ValidationError("closed form requires o = 1")
    al = sd.alpha
    pm = m_poincare(sd)
    dc = x_set_raw(sd, al)
    raw = dc.raw
    if any(g.bit_count() != 1 for g in raw):
        raise ConsistencyError(f"X_alpha must consist of single variables, got {raw}")
    expected = tuple(
        1 << i for i in range(sd.nu) if al != sd.alpha_tilde(i)
    )
    if tuple(sorted(raw)) != expected:
        raise ConsistencyError(
            f"X_alpha disagrees with the lcm test: {sorted(raw)} vs {expected}"
        )
    q_alpha = max(0, 2 - len(raw))
    i_alpha = pm.coefficient(al) - q_alpha
    if not 0 <= i_alpha <= sd.nu - 2:
        raise ConsistencyError(f"i_alpha = {i_alpha} out of range 0..{sd.nu - 2}")
    pmx = pm - PoincarePolynomial.from_pairs([(al, i_alpha)])
    return pmx, i_alpha, len(raw), pm


def closed_form_o1(sd: SeifertData) -> PoincarePolynomial:
    """P for the generator degrees of m_X when o = 1: P_m minus i_alpha*t^alpha."""
    return _o1_data(sd)[0]


def closed_form_o_small(sd: SeifertData):
    """P_mX = P_m verbatim when o > 1 but every end element has order <= alpha_i."""
    if sd.o <= 1:
        return NotApplicable
    al = sd.alpha
    cond = all(sd.o * sd.alpha_tilde(i) <= al for i in range(sd.nu))
    gd = group_data(build_graph(sd))
    cond_orders = all(
        gd.element_orders[i] <= sd.legs[i - 1][0] for i in range(1, sd.nu + 1)
    )
    if cond != cond_orders:
        raise ConsistencyError("order test and lcm test disagree on the o-small condition")
    if not cond:
        return NotApplicable
    return m_poincare(sd)


def closed_form_minimal_rational(sd: SeifertData) -> PoincarePolynomial:
    """Generator degrees for b0 >= nu: a linear part plus one convergent sum per leg."""
    if sd.b0 < sd.nu:
        raise ValidationError(f"closed form requires b0 >= nu, got b0={sd.b0}, nu={sd.nu}")
    p = PoincarePolynomial.from_pairs([(1, sd.b0 - sd.nu + 1)])
    for a, w in sd.legs:
        p = p + f_alpha_beta(a, a - w)
    return p


@lru_cache(maxsize=None)
def _leg_residues(alpha: int, beta: int) -> tuple[int, ...]:
    return tuple((j * beta) % alpha for j in range(alpha))


@lru_cache(maxsize=None)
def _convergent_numerators(alpha: int, beta: int) -> frozenset:
    return frozenset(r for r, _ in convergents(alpha, beta))


def convergent_characterization_check(alpha: int, beta: int, l: int) -> bool:
    """Whether every splitting of l carries the full carry pattern on one leg.

    Returns the brute-force answer and verifies on the fly that it coincides
    with membership of l among the convergent numerators of alpha/beta.
    """
    if l < 2:
        raise ValidationError("check defined for l >= 2")
    res = _leg_residues(alpha, beta)
    crit = True
    for j in range(1, l):
        if res[j % alpha] + res[(l - j) % alpha] < alpha:
            crit = False
            break
    member = l in _convergent_numerators(alpha, beta)
    if crit != member:
        raise ConsistencyError(
            f"carry criterion and convergent membership disagree at ({alpha},{beta}), l={l}"
        )
    return crit


_T = PoincarePolynomial.from_pairs
# exceptional low-degree data keyed by (b0, sorted alphas); all have b0 = nu-2
_EXCEPTIONAL_TABLE = {
    (1, (2, 3, 7)): _T([(6, 1), (14, 1), (21, 1)]),
    (1, (2, 3, 8)): _T([(6, 1), (8, 1), (15, 1)]),
    (1, (2, 4, 5)): _T([(4, 1), (10, 1), (15, 1)]),
    (1, (2, 4, 6)): _T([(4, 1), (6, 1), (11, 1)]),
    (1, (2, 5, 5)): _T([(4, 1), (5, 1), (10, 1)]),
    (1, (3, 3, 4)): _T([(3, 1), (8, 1), (12, 1)]),
    (1, (3, 3, 5)): _T([(3, 1), (5, 1), (9, 1)]),
    (1, (3, 4, 4)): _T([(3, 1), (4, 1), (8, 1)]),
    (2, (2, 2, 2, 3)): _T([(2, 1), (6, 1), (9, 1)]),
    (2, (2, 2, 2, 4)): _T([(2, 1), (4, 1), (7, 1)]),
    (2, (2, 2, 3, 3)): _T([(2, 1), (3, 1), (6, 1)]),
    (3, (2, 2, 2, 2, 2)): _T([(2, 2), (5, 1)]),
}


def closed_form_automorphic(sd: SeifertData):
    """Generator degrees when every omega_i = 1 and s_1 = b0 - nu + 2 >= 0.

    Twelve small data are tabulated outright; everywhere else the answer is a
    case polynomial f plus the convergent sums of the alpha_i/(alpha_i - 1).
    """
    if any(w != 1 for _, w in sd.legs):
        return NotApplicable
    s1 = sd.b0 - sd.nu + 2
    if s1 < 0:
        return NotApplicable
    alphas = tuple(sorted(a for a, _ in sd.legs))
    key = (sd.b0, alphas)
    if key in _EXCEPTIONAL_TABLE:
        return _EXCEPTIONAL_TABLE[key]
    nu = sd.nu
    if s1 >= 2:
        f = _T([(1, sd.b0 - nu + 1)])
    elif s1 == 1:
        f = _T([(2, -1), (3, nu - 2)])
    else:
        total = sum(alphas)
        if nu >= 4 and total >= 11:
            f = _T([(2, -3), (3, nu - 5)])
        elif nu == 3 and alphas[0] >= 3 and total >= 12:
            f = _T([(2, -3), (3, -2), (4, -1)])
        elif nu == 3 and alphas[0] == 2 and alphas[1] >= 4 and total >= 13:
            f = _T([(2, -3), (3, -2), (4, -1), (5, -1)])
        elif nu == 3 and alphas[0] == 2 and alphas[1] == 3 and alphas[2] >= 9:
            f = _T([(2, -3), (3, -2), (4, -1), (5, -1), (7, -1)])
        else:
            raise ConsistencyError(
                f"data {key} falls outside both the case table and the exceptional table"
            )
    p = f
    for a, _ in sd.legs:
        p = p + f_alpha_beta(a, a - 1)
    return p


# ---------------------------------------------------------------------------
# graph-level flags and the splice range

@dataclass(frozen=True)
class GraphFlags:
    rational: bool
    elliptic: bool
    numerically_gorenstein: bool
    p_a: int

    @property
    def forces_topological(self) -> bool:
        return self.rational or (self.numerically_gorenstein and self.elliptic)


def graph_class_flags(sd: SeifertData) -> GraphFlags:
    g = build_graph(sd)
    _, p_a = fundamental_cycle(g)
    zk = canonical_cycle(g)
    ng = all(c.denominator == 1 for c in zk)
    return GraphFlags(rational=(p_a == 0), elliptic=(p_a == 1), numerically_gorenstein=ng, p_a=p_a)


def splice_ed_range(sd: SeifertData):
    """Embedding-dimension interval over all one-parameter-group smoothings' quotients.

    Only defined when o = 1.  The top end is the weighted homogeneous value;
    the bottom end deducts at most the nu-2 extra equations.
    """
    if sd.o != 1:
        return NotApplicable
    pmx, i_alpha, _, pm = _o1_data(sd)
    ell = sum(c for d, c in pm.to_pairs() if d > sd.alpha)
    total = pm.evaluate_at_one()
    lo = total - min(sd.nu - 2, i_alpha + ell)
    hi = total - i_alpha
    if hi != pmx.evaluate_at_one():
        raise ConsistencyError("range top must equal the weighted homogeneous value")
    return lo, hi


# ---------------------------------------------------------------------------
# whole-input report

@dataclass(frozen=True)
class JumpStratum:
    discriminant: str
    degrees: tuple[int, ...]
    embdim: int
    witness: tuple[tuple[int, Fraction], ...]

    def to_json(self) -> dict:
        return {
            "discriminant": self.discriminant,
            "degrees": list(self.degrees),
            "embdim": self.embdim,
            "witness": _witness_json(dict(self.witness)),
        }


@dataclass(frozen=True)
class EmbdimReport:
    seifert: SeifertData
    l_max: int
    degrees: tuple[DegreeReport, ...]
    p_m: PoincarePolynomial
    p_mx_generic: PoincarePolynomial
    embdim_generic: int
    jump_strata: tuple[JumpStratum, ...]
    flags: dict
    splice_range: tuple[int, int] | None
    closed_form_checks: tuple[str, ...]

    def to_json(self) -> dict:
        sd = self.seifert
        bundle = series_bundle(sd, self.l_max)
        gd = group_data(build_graph(sd))
        return {
            "seifert": sd.to_json(),
            "e": frac_str(sd.e),
            "alpha": sd.alpha,
            "o": sd.o,
            "gamma": frac_str(gamma(sd)),
            "H_order": gd.order,
            "p_g": bundle.p_g,
            "P_GX": bundle.p_gx.to_pairs(),
            "P_H1": bundle.p_h1.to_pairs(),
            "P_m": self.p_m.to_pairs(),
            "P_mX_generic": self.p_mx_generic.to_pairs(),
            "embdim_generic": self.embdim_generic,
            "degrees": [r.to_json() for r in self.degrees],
            "jump_strata": [js.to_json() for js in self.jump_strata],
            "flags": self.flags,
            "l_max": self.l_max,
            "splice_range": list(self.splice_range) if self.splice_range else None,
            "closed_form_checks": list(self.closed_form_checks),
            "param_note": "p_k multiplies the splice row of leg k+2",
        }


def _compare_closed_form(name: str, closed: PoincarePolynomial, general: PoincarePolynomial,
                         l_max: int):
    if closed.truncate(l_max) != general.truncate(l_max):
        raise ConsistencyError(
            f"{name} closed form disagrees with the general path: "
            f"{closed.truncate(l_max).pretty()} vs {general.truncate(l_max).pretty()}"
        )


def full_report(sd: SeifertData, options: AnalyzeOptions | None = None) -> EmbdimReport:
    """Classify every degree up to l_max and assemble the global picture.

    Every applicable closed form is recomputed independently and compared
    coefficientwise against the general path; a mismatch is a hard error.
    """
    opts = options or AnalyzeOptions()
    lmx = opts.l_max if opts.l_max is not None else l_max_default(sd)
    base_opts = replace(opts, minors=False)
    degrees_range = range(1, lmx + 1)
    if opts.threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=opts.threads) as pool:
            reports = list(pool.map(lambda l: classify_degree(sd, l, base_opts), degrees_range))
    else:
        reports = [classify_degree(sd, l, base_opts) for l in degrees_range]

    if opts.minors:
        # the symbolic pass stays single-threaded and in degree order
        for idx, rep in enumerate(reports):
            if rep.method == "GenericLinearAlgebra" and rep.topological == _UNDECIDED:
                reports[idx] = classify_degree(sd, rep.l, replace(opts, minors=True))

    flags_g = graph_class_flags(sd)
    if flags_g.forces_topological:
        for rep in reports:
            if rep.topological == _NO:
                raise ConsistencyError(
                    f"degree {rep.l} reports a parameter jump on a graph class "
                    "where the count is parameter independent"
                )
        reports = [
            replace(r, topological=_YES) if r.topological == _UNDECIDED else r
            for r in reports
        ]

    p_m = m_poincare(sd, lmx)
    p_mx = PoincarePolynomial.from_pairs((r.l, r.q) for r in reports if r.q)
    for d, c in p_mx.to_pairs():
        if c > p_m.coefficient(d):
            raise ConsistencyError(
                f"generator count at degree {d} exceeds the ambient count ({c} > "
                f"{p_m.coefficient(d)})"
            )

    checks: list[str] = []
    if sd.b0 >= sd.nu:
        _compare_closed_form(
            "minimal-rational", closed_form_minimal_rational(sd), p_mx, lmx
        )
        checks.append("minimal_rational")
    if sd.o == 1:
        _compare_closed_form("o=1", closed_form_o1(sd), p_mx, lmx)
        checks.append("o1")
    o_small = closed_form_o_small(sd)
    if o_small is not NotApplicable:
        _compare_closed_form("o-small", o_small, p_mx, lmx)
        checks.append("o_small")
    automorphic = closed_form_automorphic(sd)
    s1 = sd.b0 - sd.nu + 2
    if automorphic is not NotApplicable:
        _compare_closed_form("automorphic", automorphic, p_mx, lmx)
        checks.append("automorphic")

    strata: dict[tuple[str, ...], list[DegreeReport]] = {}
    for rep in reports:
        if rep.topological == _NO and rep.witness is not None:
            strata.setdefault(rep.discriminants, []).append(rep)
    jump_list = []
    for disc_key in sorted(strata):
        members = strata[disc_key]
        witness = dict(members[0].witness)
        ed = 0
        for rep in reports:
            if rep.method == "GenericLinearAlgebra":
                ed += q_at_params(sd, rep.l, witness)
            else:
                ed += rep.q
        jump_list.append(
            JumpStratum(
                discriminant=", ".join(disc_key),
                degrees=tuple(r.l for r in members),
                embdim=ed,
                witness=tuple(sorted(witness.items())),
            )
        )

    splice = splice_ed_range(sd)
    flags = {
        "rational_graph": flags_g.rational,
        "elliptic_gorenstein_graph": flags_g.numerically_gorenstein and flags_g.elliptic,
        "minimal_rational": sd.b0 >= sd.nu,
        "o_equals_1": sd.o == 1,
        "o_small": o_small is not NotApplicable,
        "automorphic_case": s1 if automorphic is not NotApplicable else None,
        "nu_le_5": sd.nu <= 5,
    }
    return EmbdimReport(
        seifert=sd,
        l_max=lmx,
        degrees=tuple(reports),
        p_m=p_m,
        p_mx_generic=p_mx,
        embdim_generic=p_mx.evaluate_at_one(),
        jump_strata=tuple(jump_list),
        flags=flags,
        splice_range=splice if splice is not NotApplicable else None,
        closed_form_checks=tuple(checks),
    )
