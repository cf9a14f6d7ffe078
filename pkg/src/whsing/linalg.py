"""Small exact linear algebra over Fraction, plus integer Smith normal form.

Matrices are lists of lists.  Sizes here are tiny (a star-shaped graph has
nu + sum(leg lengths) vertices), so plain Gaussian elimination with exact
rationals is both simplest and fast enough.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def _to_frac_rows(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rank(rows) -> int:
    """Rank of a matrix over Q."""
    m = _to_frac_rows(rows)
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def solve(a, b) -> list[Fraction]:
    """Solve the square system a x = b exactly; raises if a is singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(bv)] for row, bv in zip(a, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]


def inverse(a) -> Matrix:
    """Exact inverse of a square matrix over Q."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


def det(a) -> Fraction:
    """Exact determinant over Q."""
    n = len(a)
    m = _to_frac_rows(a)
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def leading_principal_minors_alternate(a) -> bool:
    """True iff (-1)^k det(a_k) > 0 for every leading principal submatrix.

    This is the negative-definiteness test for a symmetric integer matrix.
    """
    n = len(a)
    for k in range(1, n + 1):
        dk = det([row[:k] for row in a[:k]])
        if dk == 0 or (dk > 0) != (k % 2 == 0):
            return False
    return True


def smith_normal_form(a) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Returns the full list of nonnegative diagonal entries d_1 | d_2 | ...,
    including any 1s and trailing 0s.  Row/column operations are over Z.
    """
    m = [[int(x) for x in row] for row in a]
    if not m or not m[0]:
        return []
    nrows, ncols = len(m), len(m[0])
    diag = []
    t = 0
    while t < min(nrows, ncols):
        # locate a nonzero pivot in the remaining block
        pos = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < best):
                    best = abs(m[i][j])
                    pos = (i, j)
        if pos is None:
            break
        while True:
            i0, j0 = pos
            m[t], m[i0] = m[i0], m[t]
            for row in m:
                row[t], row[j0] = row[j0], row[t]
            # clear the pivot row and column by division with remainder
            dirty = False
            for i in range(t + 1, nrows):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    m[i] = [x - q * y for x, y in zip(m[i], m[t])]
                    if m[i][t] != 0:
                        dirty = True
            for j in range(t + 1, ncols):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    for row in m:
                        row[j] -= q * row[t]
                    if m[t][j] != 0:
                        dirty = True
            if not dirty:
                # pivot must divide every remaining entry; if not, fold the
                # offending column in and restart the reduction at t
                offender = None
                for i in range(t + 1, nrows):
                    for j in range(t + 1, ncols):
                        if m[i][j] % m[t][t] != 0:
                            offender = j
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                for row in m:
                    row[t] += row[offender]
            pos = min(
                ((i, j) for i in range(t, nrows) for j in range(t, ncols) if m[i][j] != 0),
                key=lambda ij: abs(m[ij[0]][ij[1]]),
            )
        diag.append(abs(m[t][t]))
        t += 1
    diag += [0] * (min(nrows, ncols) - len(diag))
    return diag


def invariant_factors(a) -> list[int]:
    """Nontrivial invariant factors (Smith diagonal entries > 1)."""
    return [d for d in smith_normal_form(a) if d > 1]
