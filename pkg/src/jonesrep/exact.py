"""Dense matrices over exact commutative rings, as lists of lists.

Works for ``int``, ``Fraction``, ``GaussianRational`` and (where no division
is needed) ``LaurentPoly`` entries.
"""
from __future__ import annotations

from fractions import Fraction


def identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(r) for r in zip(*m)] if m else []


def matmul(a, b, zero=0):
    """Product of two dense matrices, skipping zero entries of ``a``."""
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [zero] * cols
        for k in range(inner):
            x = row[k]
            if not x:
                continue
            bk = b[k]
            for j in range(cols):
                y = bk[j]
                if y:
                    acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def matvec(a, v, zero=0):
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def det(m):
    """Determinant by fraction-free (Bareiss) elimination.

    Intermediate divisions are exact in any integral domain whose elements
    support ``/`` (``int`` entries use floor division, which is exact here).
    """
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    int_mode = all(isinstance(x, int) for r in a for x in r)
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0 * a[0][0]
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                num = row_i[j] * akk - aik * row_k[j]
                row_i[j] = num // prev if int_mode else num / prev
            row_i[k] = 0
        prev = akk
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def rref(m):
    """Reduced row echelon form over a field; returns (rows, pivot_columns)."""
    a = [list(r) for r in m]
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        p = None
        for i in range(r, nrows):
            if a[i][c]:
                p = i
                break
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        if isinstance(piv, int):
            inv = Fraction(1, piv)
        elif hasattr(piv, "inverse"):
            inv = piv.inverse()
        else:
            inv = 1 / piv
        a[r] = [x * inv if x else x for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                ri, rr = a[i], a[r]
                a[i] = [x - f * y if y else x for x, y in zip(ri, rr)]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m):
    if not m or not m[0]:
        return 0
    # eliminate along the shorter side
    if len(m) > len(m[0]):
        m = transpose(m)
    return len(rref(m)[1])


def charpoly(m, one=1, zero=0):
    """Characteristic polynomial det(x*I - m) by the division-free Berkowitz algorithm.

    Returns coefficients ``[c_n, ..., c_0]`` with ``c_n = one``.
    """
    n = len(m)
    if n == 0:
        return [one]
    # vector of the charpoly of the leading 1x1 block
    poly = [one, -m[0][0]]
    for r in range(1, n):
        # partition leading (r+1)x(r+1) block as [[A, S], [R, a]]
        a_rr = m[r][r]
        row = m[r][:r]
        col = [m[i][r] for i in range(r)]
        block = [m[i][:r] for i in range(r)]
        # Toeplitz column: 1, -a, -R S, -R A S, ...
        tcol = [one, -a_rr]
        vec = col
        for _ in range(r):
            s = zero
            for x, y in zip(row, vec):
                if x and y:
                    s = s + x * y
            tcol.append(-s)
            vec = matvec(block, vec, zero)
        # multiply lower-triangular Toeplitz (r+2 x r+1) by poly
        new = []
        for i in range(r + 2):
            s = zero
            for j in range(min(i, r) + 1):
                if i - j < len(tcol) and tcol[i - j] and poly[j]:
                    s = s + tcol[i - j] * poly[j]
            new.append(s)
        poly = new
    return poly
