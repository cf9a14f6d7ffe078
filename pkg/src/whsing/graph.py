"""Seifert invariants, star-shaped plumbing graphs, and lattice data.

A normalized Seifert invariant set Sf = (b0, (alpha_1, omega_1), ..., (alpha_nu, omega_nu))
with 0 < omega_i < alpha_i determines a star-shaped plumbing graph: a central
vertex with Euler number -b0 and, for each leg, a string of vertices carrying
the negative continued fraction of alpha_i/omega_i, the first vertex of the
string attached to the center.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .arith import neg_cf_expand
from .errors import ConsistencyError, InvalidLeg, NotNegativeDefinite, ValidationError
from .linalg import (
    det,
    inverse,
    leading_principal_minors_alternate,
    smith_normal_form,
    solve,
)


@dataclass(frozen=True)
class SeifertData:
    """Normalized Seifert invariants with a negative-definite resolution graph."""

    b0: int
    legs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        legs = tuple((int(a), int(w)) for a, w in self.legs)
        object.__setattr__(self, "legs", legs)
        object.__setattr__(self, "b0", int(self.b0))
        if len(legs) < 3:
            raise ValidationError(f"need at least 3 legs, got {len(legs)}")
        for a, w in legs:
            if not (0 < w < a):
                raise InvalidLeg(f"leg ({a},{w}) violates 0 < omega < alpha")
            if gcd(a, w) != 1:
                raise InvalidLeg(f"leg ({a},{w}) has gcd {gcd(a, w)} != 1")
        if self.e >= 0:
            raise NotNegativeDefinite(
                f"orbifold Euler number {self.e} is not negative"
            )

    @property
    def nu(self) -> int:
        return len(self.legs)

    @property
    def e(self) -> Fraction:
        """Orbifold Euler number -b0 + sum(omega_i/alpha_i); negative for us."""
        return -self.b0 + sum(Fraction(w, a) for a, w in self.legs)

    @property
    def abs_e(self) -> Fraction:
        return -self.e

    @property
    def alpha(self) -> int:
        """lcm of the alpha_i."""
        return lcm(*(a for a, _ in self.legs))

    @property
    def o(self) -> int:
        """Order of the class of the central dual cycle, o = |e| * alpha."""
        q = self.abs_e * self.alpha
        if q.denominator != 1:
            raise ConsistencyError(f"|e|*alpha = {q} is not an integer")
        return q.numerator

    @property
    def betas(self) -> tuple[int, ...]:
        """beta_i = alpha_i - omega_i (the conjugate leg parameters)."""
        return tuple(a - w for a, w in self.legs)

    def alpha_tilde(self, i: int) -> int:
        """lcm of the alpha_j over j != i (0-based leg index)."""
        return lcm(*(a for j, (a, _) in enumerate(self.legs) if j != i))

    def to_json(self) -> dict:
        return {"b0": self.b0, "legs": [list(l) for l in self.legs]}

    @classmethod
    def from_json(cls, data: dict) -> "SeifertData":
        try:
            b0 = data["b0"]
            legs = tuple((int(a), int(w)) for a, w in data["legs"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed Seifert data: {exc}") from exc
        return cls(b0, legs)


@dataclass(frozen=True)
class StarGraph:
    """Star-shaped plumbing graph with its vertex layout.

    Vertex 0 is the central vertex; each leg is a run of consecutive indices
    ordered from the vertex adjacent to the center outward.
    """

    seifert: SeifertData
    euler: tuple[int, ...]            # Euler numbers -b_v
    edges: tuple[tuple[int, int], ...]
    legs: tuple[tuple[int, ...], ...  ]  # vertex indices per leg, center-adjacent first

    @property
    def central(self) -> int:
        return 0

    @property
    def n(self) -> int:
        return len(self.euler)

    @property
    def leg_ends(self) -> tuple[int, ...]:
        """The outermost vertex of each leg (the one carrying E*_{i r_i})."""
        return tuple(leg[-1] for leg in self.legs)

    def intersection_matrix(self) -> list[list[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for v, e in enumerate(self.euler):
            m[v][v] = e
        for a, b in self.edges:
            m[a][b] = 1
            m[b][a] = 1
        return m

    def to_json(self) -> dict:
        return {
            "vertices": [{"id": v, "euler": e} for v, e in enumerate(self.euler)],
            "edges": [list(e) for e in self.edges],
            "central": self.central,
        }


def build_graph(sd: SeifertData) -> StarGraph:
    """Expand Seifert invariants into the star-shaped plumbing graph."""
    euler = [-sd.b0]
    edges = []
    legs = []
    for a, w in sd.legs:
        cf = neg_cf_expand(a, w)
        first = len(euler)
        idx = tuple(range(first, first + len(cf)))
        euler.extend(-u for u in cf)
        edges.append((0, first))
        edges.extend((v, v + 1) for v in idx[:-1])
        legs.append(idx)
    g = StarGraph(sd, tuple(euler), tuple(edges), tuple(legs))
    # e < 0 already guarantees definiteness; the minor test is a cheap cross-check
    if not leading_principal_minors_alternate(g.intersection_matrix()):
        raise ConsistencyError("e < 0 but the intersection form failed the minor test")
    return g


@lru_cache(maxsize=None)
def _inverse_intersection(g: StarGraph) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(row) for row in inverse(g.intersection_matrix()))


def dual_basis(g: StarGraph) -> list[list[Fraction]]:
    """Rows are the dual cycles E*_v in the E-basis, i.e. -I(E)^{-1}.

    The pairing satisfies E*_v . E*_w = (I^{-1})_{vw}; the closed forms for
    the central row/column and the leg ends are asserted before returning.
    """
    inv = _inverse_intersection(g)
    _check_dual_pairing(g, inv)
    return [[-x for x in row] for row in inv]


def dual_pairing(g: StarGraph) -> list[list[Fraction]]:
    """Full matrix of products E*_v . E*_w (equals I(E)^{-1})."""
    inv = _inverse_intersection(g)
    _check_dual_pairing(g, inv)
    return [list(row) for row in inv]


def _check_dual_pairing(g, inv) -> None:
    sd = g.seifert
    e = sd.e
    if inv[0][0] != 1 / e:
        raise ConsistencyError(f"E0*.E0* = {inv[0][0]} but 1/e = {1 / e}")
    ends = g.leg_ends
    for i, (a, w) in enumerate(sd.legs):
        if inv[0][ends[i]] != 1 / (e * a):
            raise ConsistencyError(f"central/end pairing off on leg {i}")
        wp = pow(w, -1, a)
        expect = 1 / (e * a * a) - Fraction(wp, a)
        if inv[ends[i]][ends[i]] != expect:
            raise ConsistencyError(f"end self-pairing off on leg {i}")
        for j in range(i + 1, len(sd.legs)):
            aj = sd.legs[j][0]
            if inv[ends[i]][ends[j]] != 1 / (e * a * aj):
                raise ConsistencyError(f"end/end pairing off on legs {i},{j}")


def canonical_cycle(g: StarGraph) -> list[Fraction]:
    """The rational cycle Z_K with Z_K . E_v = E_v^2 + 2 for every vertex."""
    i_mat = g.intersection_matrix()
    rhs = [Fraction(e + 2) for e in g.euler]
    return solve(i_mat, rhs)


def fundamental_cycle(g: StarGraph) -> tuple[list[int], int]:
    """Laufer's algorithm: the minimal cycle Z with Z . E_v <= 0 everywhere.

    Returns (coefficients, arithmetic genus p_a(Z)).  Starting from any E_v
    reaches the same cycle on a connected graph; we start at the center and
    always add the lowest-index violating vertex, so runs are reproducible.
    """
    i_mat = g.intersection_matrix()
    n = g.n
    z = [0] * n
    z[0] = 1
    prod = list(i_mat[0])  # prod[w] = Z . E_w
    while True:
        v = next((w for w in range(n) if prod[w] > 0), None)
        if v is None:
            break
        z[v] += 1
        for w in range(n):
            prod[w] += i_mat[v][w]
    z_dot_z = sum(z[v] * prod[v] for v in range(n))
    z_dot_zk = sum(Fraction(z[v]) * (g.euler[v] + 2) for v in range(n))
    pa = 1 + Fraction(z_dot_z - z_dot_zk, 2)
    if pa.denominator != 1:
        raise ConsistencyError(f"p_a(Z) = {pa} is not an integer")
    return z, pa.numerator


@dataclass(frozen=True)
class GroupData:
    """The discriminant group H = L*/L = H_1 of the link, with its linking data.

    element_orders[0] is the order of the class of the central dual cycle
    (always equal to o); element_orders[i] for i >= 1 is the order of the
    class of the i-th leg-end dual cycle.  pairing[x][y] is E*_x . E*_y mod 1
    over the same index set, exact rationals in [0, 1).
    """

    order: int
    invariant_factors: tuple[int, ...]
    o: int
    element_orders: tuple[int, ...]
    pairing: tuple[tuple[Fraction, ...], ...]

    def to_json(self) -> dict:
        from .arith import frac_str

        return {
            "order": self.order,
            "invariant_factors": list(self.invariant_factors),
            "o": self.o,
            "element_orders": list(self.element_orders),
            "pairing": [[frac_str(x) for x in row] for row in self.pairing],
        }


def _mod1(q: Fraction) -> Fraction:
    return q - (q.numerator // q.denominator)


def group_data(g: StarGraph) -> GroupData:
    """Compute H from both the presentation and the lattice, cross-checking."""
    sd = g.seifert
    nu = sd.nu
    # presentation: generators h_0..h_nu, relations
    #   b0*h_0 - sum omega_i h_i = 0   and   -h_0 + alpha_i h_i = 0
    rel = [[sd.b0] + [-w for _, w in sd.legs]]
    for i, (a, _) in enumerate(sd.legs):
        row = [0] * (nu + 1)
        row[0] = -1
        row[i + 1] = a
        rel.append(row)
    diag = smith_normal_form(rel)
    order = 1
    for d in diag:
        order *= d
    det_i = det(g.intersection_matrix())
    if order != abs(int(det_i)):
        raise ConsistencyError(
            f"presentation order {order} != |det I| = {abs(int(det_i))}"
        )
    inv = _inverse_intersection(g)
    picks = (0,) + g.leg_ends
    orders = []
    for v in picks:
        denom = 1
        for x in inv[v]:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        orders.append(denom)
    if orders[0] != sd.o:
        raise ConsistencyError(f"ord(h_0) = {orders[0]} but |e|*alpha = {sd.o}")
    for i in range(nu):
        a = sd.legs[i][0]
        closed = sd.abs_e * a * sd.alpha_tilde(i)
        if closed != orders[i + 1]:
            raise ConsistencyError(
                f"ord(h_{i+1}) = {orders[i+1]} but |e|*alpha_i*alphatilde_i = {closed}"
            )
    pairing = tuple(
        tuple(_mod1(inv[v][w]) for w in picks) for v in picks
    )
    return GroupData(
        order=order,
        invariant_factors=tuple(d for d in diag if d > 1),
        o=sd.o,
        element_orders=tuple(orders),
        pairing=pairing,
    )
