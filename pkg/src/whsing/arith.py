"""Exact rational helpers and negative continued fractions.

Everything here is integer/Fraction arithmetic; nothing ever touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor, gcd, lcm

__all__ = [
    "Fraction",
    "gcd",
    "lcm",
    "frac_str",
    "parse_frac",
    "floor_ceil_frac",
    "neg_cf_expand",
    "cf_evaluate",
    "convergents",
]


def frac_str(q: Fraction | int) -> str:
    """Serialize a rational as "num/den", or "num" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_frac(s: str) -> Fraction:
    """Parse "num/den" or "num" back into a Fraction."""
    return Fraction(s.strip())


def floor_ceil_frac(q: Fraction | int) -> tuple[int, int, Fraction]:
    """Return (floor(q), ceil(q), fractional part {q}) with {q} = q - floor(q) in [0,1)."""
    q = Fraction(q)
    f = floor(q)
    return f, ceil(q), q - f


def neg_cf_expand(alpha: int, beta: int) -> list[int]:
    """Negative (Hirzebruch-Jung) continued fraction of alpha/beta.

    alpha/beta = u1 - 1/(u2 - 1/(... - 1/ur)) with every u_k >= 2.
    Requires 0 < beta < alpha and gcd(alpha, beta) = 1.
    """
    if not (0 < beta < alpha):
        raise ValueError(f"need 0 < beta < alpha, got ({alpha}, {beta})")
    if gcd(alpha, beta) != 1:
        raise ValueError(f"alpha and beta must be coprime, got ({alpha}, {beta})")
    entries = []
    a, b = alpha, beta
    while b > 0:
        u = -(-a // b)  # ceil(a/b)
        entries.append(u)
        a, b = b, u * b - a
    return entries


def cf_evaluate(entries: list[int]) -> Fraction:
    """Evaluate a negative continued fraction [u1,...,ur] back to a rational."""
    if not entries:
        raise ValueError("empty continued fraction")
    val = Fraction(entries[-1])
    for u in reversed(entries[:-1]):
        val = u - 1 / val
    return val


def convergents(alpha: int, beta: int) -> list[tuple[int, int]]:
    """Convergents (r_k, t_k) of the negative continued fraction of alpha/beta.

    r_k/t_k is the value of the truncated fraction [u1..uk] in lowest terms;
    the last pair is (alpha, beta) itself.  Consecutive pairs satisfy
    r_k*t_{k+1} - r_{k+1}*t_k = 1, which certifies both reducedness and the
    strict increase of the numerators.
    """
    entries = neg_cf_expand(alpha, beta)
    out = []
    r_prev, t_prev = 1, 0  # virtual (r_0, t_0)
    r, t = entries[0], 1
    out.append((r, t))
    for u in entries[1:]:
        r, r_prev = u * r - r_prev, r
        t, t_prev = u * t - t_prev, t
        out.append((r, t))
    return out
