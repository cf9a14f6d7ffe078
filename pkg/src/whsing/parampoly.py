"""Exact polynomials in the moduli parameters p_3..p_nu, backed by sympy.

The parameters sit on the legs from the third onward (the first two legs are
normalized to the coordinate points).  Published output uses the shifted
labels p1..p_{nu-2}; internally everything is keyed by leg index.

Only small expressions ever reach this layer (minors of matrices a dozen wide
at most), so plain sympy expand/gcd/factor_list is entirely adequate.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import sympy


@lru_cache(maxsize=None)
def param_symbol(leg: int) -> sympy.Symbol:
    return sympy.Symbol(f"p{leg}", rational=True)


def to_sympy(q: Fraction | int) -> sympy.Rational:
    q = Fraction(q)
    return sympy.Rational(q.numerator, q.denominator)


def to_fraction(x) -> Fraction:
    x = sympy.nsimplify(x, rational=True) if not isinstance(x, sympy.Rational) else x
    if not isinstance(x, sympy.Rational):
        x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


class ParamPoly:
    """Immutable wrapper around an expanded sympy polynomial in the p-symbols."""

    __slots__ = ("expr", "_vars")

    def __init__(self, expr):
        expr = sympy.expand(sympy.sympify(expr))
        object.__setattr__(self, "expr", expr)
        object.__setattr__(
            self, "_vars", tuple(sorted(expr.free_symbols, key=lambda s: s.name))
        )

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    @classmethod
    def const(cls, q) -> "ParamPoly":
        return cls(to_sympy(q))

    @classmethod
    def var(cls, leg: int) -> "ParamPoly":
        return cls(param_symbol(leg))

    def __add__(self, other):
        return ParamPoly(self.expr + _expr(other))

    def __sub__(self, other):
        return ParamPoly(self.expr - _expr(other))

    def __mul__(self, other):
        return ParamPoly(self.expr * _expr(other))

    def __neg__(self):
        return ParamPoly(-self.expr)

    def __eq__(self, other):
        return isinstance(other, ParamPoly) and (self.expr - other.expr) == 0

    def __hash__(self):
        return hash(sympy.srepr(self.expr))

    def is_zero(self) -> bool:
        return self.expr == 0

    def is_constant(self) -> bool:
        return not self.expr.free_symbols

    def variables(self) -> tuple[sympy.Symbol, ...]:
        return self._vars

    def degree_in(self, leg: int) -> int:
        s = param_symbol(leg)
        if s not in self.expr.free_symbols:
            return 0
        return sympy.degree(self.expr, s)

    def evaluate(self, point: dict[int, Fraction]) -> Fraction:
        subs = {param_symbol(i): to_sympy(v) for i, v in point.items()}
        val = self.expr.subs(subs)
        if val.free_symbols:
            raise ValueError(f"point does not cover {val.free_symbols}")
        return to_fraction(val)

    def canonical_str(self, label_offset: int = 0) -> str:
        """Deterministic string form, e.g. "p1*p2-p3*p4".

        label_offset is subtracted from each internal leg index (use 2 for
        the published labels).  Terms are sorted by descending lexicographic
        exponent vector over the sorted symbol list.
        """
        if self.is_constant():
            return str(self.expr)
        syms = self._vars
        poly = sympy.Poly(self.expr, *syms)
        terms = sorted(poly.terms(), key=lambda t: t[0], reverse=True)
        parts = []
        for exps, coeff in terms:
            factors = []
            for s, e in zip(syms, exps):
                if e == 0:
                    continue
                idx = int(s.name[1:]) - label_offset
                factors.append(f"p{idx}" if e == 1 else f"p{idx}^{e}")
            c = sympy.Rational(coeff)
            body = "*".join(factors) if factors else None
            mag = abs(c)
            if body is None:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", text))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, text in parts[1:]:
            out += sign + text
        return out

    def __repr__(self):
        return f"ParamPoly({self.expr})"


def _expr(x):
    if isinstance(x, ParamPoly):
        return x.expr
    return to_sympy(x) if isinstance(x, (int, Fraction)) else sympy.sympify(x)


def _is_unit_factor(f: sympy.Expr) -> bool:
    """True for factors that cannot vanish at admissible points.

    Admissible points have every p_i nonzero and pairwise distinct, so
    constants, single symbols, and differences c*(p_i - p_j) are units.
    """
    syms = sorted(f.free_symbols, key=lambda s: s.name)
    if not syms:
        return f != 0
    poly = sympy.Poly(f, *syms)
    if poly.total_degree() != 1:
        return False
    coeffs = {s: poly.coeff_monomial(s) for s in syms}
    if poly.coeff_monomial(1) != 0:
        return False
    if len(syms) == 1:
        return True  # c * p_i
    if len(syms) == 2:
        a, b = (coeffs[s] for s in syms)
        return a == -b  # c * (p_i - p_j)
    return False


def nonunit_core(p: ParamPoly) -> ParamPoly:
    """Product of the non-unit irreducible factors, squarefree, sign-normalized.

    Returns the constant 1 when the polynomial cannot vanish admissibly.
    """
    if p.is_zero():
        return ParamPoly(0)
    if p.is_constant():
        return ParamPoly(1)
    _, factors = sympy.factor_list(p.expr)
    core = sympy.Integer(1)
    for f, _mult in factors:
        if not _is_unit_factor(f):
            core *= f
    core = sympy.expand(core)
    if core.free_symbols:
        syms = sorted(core.free_symbols, key=lambda s: s.name)
        poly = sympy.Poly(core, *syms)
        # clear content and normalize the leading sign
        core = sympy.expand(core / poly.content())
        poly = sympy.Poly(core, *syms)
        lead = sorted(poly.terms(), key=lambda t: t[0], reverse=True)[0][1]
        if lead < 0:
            core = sympy.expand(-core)
    else:
        core = sympy.Integer(1)
    return ParamPoly(core)


def irreducible_factors(p: ParamPoly) -> list[ParamPoly]:
    """Non-unit irreducible factors (each squarefree, content-normalized)."""
    if p.is_zero() or p.is_constant():
        return []
    _, factors = sympy.factor_list(p.expr)
    out = []
    seen = set()
    for f, _mult in factors:
        if _is_unit_factor(f):
            continue
        canon = nonunit_core(ParamPoly(f))
        key = canon.canonical_str()
        if key not in seen:
            seen.add(key)
            out.append(canon)
    return out


def gcd_all(polys: list[ParamPoly]) -> ParamPoly:
    if not polys:
        return ParamPoly(0)
    g = polys[0].expr
    for p in polys[1:]:
        g = sympy.gcd(g, p.expr)
        if g == 1:
            break
    return ParamPoly(sympy.expand(g))


def divides(f: ParamPoly, g: ParamPoly) -> bool:
    """True iff f divides g exactly (as multivariate polynomials over Q)."""
    if f.is_zero():
        return g.is_zero()
    _, rem = sympy.div(g.expr, f.expr, *sorted(
        set(g._vars) | set(f._vars), key=lambda s: s.name) or [sympy.Symbol("p3")])
    return sympy.expand(rem) == 0


def rational_roots(p: ParamPoly, leg: int) -> list[Fraction]:
    """Rational roots of p viewed as univariate in p_leg (other symbols must be absent)."""
    s = param_symbol(leg)
    extra = p.expr.free_symbols - {s}
    if extra:
        raise ValueError(f"not univariate: extra symbols {extra}")
    poly = sympy.Poly(p.expr, s)
    roots = []
    for r in sympy.roots(poly, s):
        if isinstance(r, sympy.Rational):
            roots.append(Fraction(int(r.p), int(r.q)))
    return sorted(roots)
