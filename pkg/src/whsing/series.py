"""Graded dimension series attached to Seifert data.

The section counts s_l = l*b0 - sum_i ceil(l*omega_i/alpha_i) drive everything:
the Hilbert series of the graded ring has coefficients max(0, s_l + 1), the
first-cohomology defect polynomial has coefficients max(0, -s_l - 1), and the
difference sum (s_l + 1) t^l is a rational function with denominator
(1 - t)(1 - t^alpha).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor

from .errors import ConsistencyError
from .graph import SeifertData

_TERM = re.compile(r"^([+-]?\d*)(t(?:\^(\d+))?)?$")


class PoincarePolynomial:
    """Sparse polynomial in t with integer coefficients.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        c = {}
        for d, v in (coeffs or {}).items():
            if v != 0:
                if d < 0:
                    raise ValueError("negative degree")
                c[int(d)] = int(v)
        object.__setattr__(self, "_c", c)

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    @classmethod
    def zero(cls) -> "PoincarePolynomial":
        return cls({})

    @classmethod
    def from_pairs(cls, pairs) -> "PoincarePolynomial":
        c = {}
        for d, v in pairs:
            c[int(d)] = c.get(int(d), 0) + int(v)
        return cls(c)

    @classmethod
    def parse(cls, text: str) -> "PoincarePolynomial":
        """Inverse of pretty(): accepts e.g. "t^6+2t^15", "1", "0", "-t^2+3t^3"."""
        s = text.strip().replace(" ", "")
        if s in ("", "0"):
            return cls.zero()
        s = s.replace("-", "+-")
        c: dict[int, int] = {}
        for term in s.split("+"):
            if not term:
                continue
            m = _TERM.match(term)
            if not m:
                raise ValueError(f"cannot parse term {term!r}")
            coeff_s, t_part, exp_s = m.group(1), m.group(2), m.group(3)
            if t_part is None:
                d, v = 0, int(coeff_s)
            else:
                d = int(exp_s) if exp_s else 1
                v = int(coeff_s) if coeff_s not in ("", "+", "-") else (-1 if coeff_s == "-" else 1)
            c[d] = c.get(d, 0) + v
        return cls(c)

    def coefficient(self, d: int) -> int:
        return self._c.get(d, 0)

    def degrees(self) -> list[int]:
        return sorted(self._c)

    @property
    def max_degree(self) -> int:
        return max(self._c) if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def truncate(self, l_max: int) -> "PoincarePolynomial":
        return PoincarePolynomial({d: v for d, v in self._c.items() if d <= l_max})

    def evaluate_at_one(self) -> int:
        return sum(self._c.values())

    def __add__(self, other):
        c = dict(self._c)
        for d, v in other._c.items():
            c[d] = c.get(d, 0) + v
        return PoincarePolynomial(c)

    def __sub__(self, other):
        c = dict(self._c)
        for d, v in other._c.items():
            c[d] = c.get(d, 0) - v
        return PoincarePolynomial(c)

    def __mul__(self, other):
        if isinstance(other, int):
            return PoincarePolynomial({d: v * other for d, v in self._c.items()})
        c: dict[int, int] = {}
        for d1, v1 in self._c.items():
            for d2, v2 in other._c.items():
                c[d1 + d2] = c.get(d1 + d2, 0) + v1 * v2
        return PoincarePolynomial(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, PoincarePolynomial) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def to_pairs(self) -> list[list[int]]:
        return [[d, self._c[d]] for d in sorted(self._c)]

    def pretty(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for d in sorted(self._c):
            v = self._c[d]
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            if d == 0:
                body = str(mag)
            else:
                var = "t" if d == 1 else f"t^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self):
        return f"PoincarePolynomial({self.pretty()})"


@lru_cache(maxsize=None)
def s_value(sd: SeifertData, l: int) -> int:
    """s_l = l*b0 - sum_i ceil(l*omega_i/alpha_i)."""
    return l * sd.b0 - sum(-((-l * w) // a) for a, w in sd.legs)


def gamma(sd: SeifertData) -> Fraction:
    """The exponent gamma = (nu - 2 - sum 1/alpha_i) / |e|."""
    return (sd.nu - 2 - sum(Fraction(1, a) for a, _ in sd.legs)) / sd.abs_e


def a_invariant(sd: SeifertData) -> int:
    """a = (nu - 2)*alpha - sum alpha/alpha_i; always equals o * gamma."""
    al = sd.alpha
    a = (sd.nu - 2) * al - sum(al // ai for ai, _ in sd.legs)
    if Fraction(a) != sd.o * gamma(sd):
        raise ConsistencyError(f"a-invariant {a} != o*gamma = {sd.o * gamma(sd)}")
    return a


def l_max_default(sd: SeifertData) -> int:
    """Analysis horizon floor(2*alpha + gamma) + 1; beyond it nothing new happens."""
    return floor(2 * sd.alpha + gamma(sd)) + 1


def hilbert_series(sd: SeifertData, l_max: int | None = None) -> PoincarePolynomial:
    """Hilbert series of the graded section ring, truncated at l_max."""
    if l_max is None:
        l_max = l_max_default(sd)
    return PoincarePolynomial(
        {l: max(0, s_value(sd, l) + 1) for l in range(l_max + 1)}
    )


def h1_polynomial(sd: SeifertData) -> tuple[PoincarePolynomial, int]:
    """The (finite) defect polynomial with coefficients max(0, -s_l - 1), and its value at 1.

    Coefficients vanish for l > gamma, so the scan stops at floor(max(0, gamma)).
    """
    top = floor(max(0, gamma(sd)))
    poly = PoincarePolynomial(
        {l: max(0, -s_value(sd, l) - 1) for l in range(1, top + 1)}
    )
    return poly, poly.evaluate_at_one()


def geometric_genus(sd: SeifertData) -> int:
    return h1_polynomial(sd)[1]


@dataclass(frozen=True)
class SeriesBundle:
    seifert: SeifertData
    l_max: int
    p_gx: PoincarePolynomial
    p_h1: PoincarePolynomial
    p_g: int
    gamma: Fraction
    a_invariant: int


def series_bundle(sd: SeifertData, l_max: int | None = None) -> SeriesBundle:
    if l_max is None:
        l_max = l_max_default(sd)
    p_h1, p_g = h1_polynomial(sd)
    return SeriesBundle(
        seifert=sd,
        l_max=l_max,
        p_gx=hilbert_series(sd, l_max),
        p_h1=p_h1,
        p_g=p_g,
        gamma=gamma(sd),
        a_invariant=a_invariant(sd),
    )


# --- the rational form of P(t) = sum (s_l + 1) t^l ---

def poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def rational_form(sd: SeifertData) -> tuple[list[Fraction], list[Fraction]]:
    """P(t) as N(t)/D(t) with D = (1 - t)(1 - t^alpha), exactly.

    N is obtained by convolving the coefficient stream s_l + 1 with D; the
    convolution tail vanishing (checked in dolgachev_check) certifies the form.
    deg N <= alpha < deg D = alpha + 1, so P has no polynomial part.
    """
    al = sd.alpha
    d = [Fraction(0)] * (al + 2)
    d[0], d[1], d[al], d[al + 1] = Fraction(1), Fraction(-1), Fraction(-1), Fraction(1)
    c = [Fraction(s_value(sd, l) + 1) for l in range(al + 2)]
    n = []
    for k in range(al + 2):
        acc = Fraction(0)
        for j in range(k + 1):
            if d[j]:
                acc += d[j] * c[k - j]
        n.append(acc)
    if n[al + 1] != 0:
        raise ConsistencyError("numerator degree reached deg D; s-periodicity broken")
    while len(n) > 1 and n[-1] == 0:
        n.pop()
    return n, d


def series_coefficients(num: list[Fraction], den: list[Fraction], count: int) -> list[Fraction]:
    """First `count` power-series coefficients of num/den (den[0] must be 1)."""
    if den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    out = []
    for k in range(count):
        acc = num[k] if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            if den[j]:
                acc -= den[j] * out[k - j]
        out.append(acc)
    return out


@dataclass(frozen=True)
class DolgachevReport:
    ok: bool
    c_minus2: Fraction
    c_minus1: Fraction
    expected_c_minus2: Fraction
    expected_c_minus1: Fraction
    checked_terms: int


def dolgachev_check(sd: SeifertData, depth: int = 4) -> DolgachevReport:
    """Laurent data of P(t) at t = 1: double pole |e|, residue-level term |e|(1 + gamma/2).

    Also re-expands N/D and compares depth*alpha + alpha + 2 coefficients
    against the direct s-value stream.  depth >= 2 required.
    """
    if depth < 2:
        raise ValueError("depth must be >= 2")
    al = sd.alpha
    num, den = rational_form(sd)
    count = (depth + 1) * al + 2
    expanded = series_coefficients(num, den, count)
    for l, coeff in enumerate(expanded):
        if coeff != s_value(sd, l) + 1:
            raise ConsistencyError(f"rational form disagrees with s-values at degree {l}")
    # P = N / ((t-1)^2 * A) with A = 1 + t + ... + t^(alpha-1)
    n1 = sum(num)
    n1p = sum(Fraction(k) * num[k] for k in range(len(num)))
    c2 = n1 / al
    c1 = n1p / al - n1 * Fraction(al - 1, 2 * al)
    e2 = sd.abs_e
    e1 = sd.abs_e * (1 + gamma(sd) / 2)
    ok = (c2 == e2) and (c1 == e1)
    return DolgachevReport(ok, c2, c1, e2, e1, count)
