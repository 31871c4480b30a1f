"""Pure-Python complex eigenvalue solver (reference kernel).

balance -> Householder Hessenberg -> single-shift complex QR with Givens
rotations, Wilkinson shifts, deflation and exceptional shifts.  Mirrors the
compiled kernel in ``_eig_cy.pyx`` line for line.
"""
from __future__ import annotations

import math

EPS = 2.220446049250313e-16
SAFE_MIN = 2.2250738585072014e-308
RADIX = 2.0
MAX_ITER_PER_EIGENVALUE = 30


class EigenvalueError(ArithmeticError):
    """QR iteration failed to converge; ``partial`` holds eigenvalues found so far."""

    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


def balance(h, n):
    """Parlett-Reinsch balancing by powers of two (in place)."""
    converged = False
    while not converged:
        converged = True
        for i in range(n):
            c = 0.0
            r = 0.0
            for j in range(n):
                if j != i:
                    c += abs(h[j][i])
                    r += abs(h[i][j])
            if c == 0.0 or r == 0.0:
                continue
            g = r / RADIX
            f = 1.0
            s = c + r
            while c < g:
                f *= RADIX
                c *= RADIX * RADIX
            g = r * RADIX
            while c > g:
                f /= RADIX
                c /= RADIX * RADIX
            if (c + r) / f < 0.95 * s:
                converged = False
                g = 1.0 / f
                row = h[i]
                for j in range(n):
                    row[j] *= g
                for j in range(n):
                    h[j][i] *= f


def hessenberg(h, n):
    """Householder reduction to upper Hessenberg form (in place)."""
    for k in range(n - 2):
        alpha2 = 0.0
        for i in range(k + 1, n):
            x = h[i][k]
            alpha2 += x.real * x.real + x.imag * x.imag
        if alpha2 == 0.0:
            continue
        alpha = math.sqrt(alpha2)
        x0 = h[k + 1][k]
        ax0 = abs(x0)
        phase = x0 / ax0 if ax0 != 0.0 else 1.0 + 0j
        # v = x + phase*alpha*e1, H = I - 2 v v^H / (v^H v)
        v = [h[i][k] for i in range(k + 1, n)]
        v[0] = x0 + phase * alpha
        vnorm2 = 0.0
        for z in v:
            vnorm2 += z.real * z.real + z.imag * z.imag
        if vnorm2 == 0.0:
            continue
        beta = 2.0 / vnorm2
        m = len(v)
        # left: rows k+1..n-1, columns k..n-1
        for j in range(k, n):
            s = 0j
            for t in range(m):
                s += v[t].conjugate() * h[k + 1 + t][j]
            s *= beta
            if s != 0:
                for t in range(m):
                    h[k + 1 + t][j] -= v[t] * s
        # right: all rows, columns k+1..n-1
        for i in range(n):
            row = h[i]
            s = 0j
            for t in range(m):
                s += row[k + 1 + t] * v[t]
            s *= beta
            if s != 0:
                for t in range(m):
                    row[k + 1 + t] -= s * v[t].conjugate()
        for i in range(k + 2, n):
            h[i][k] = 0j


def _wilkinson(a, b, c, d):
    half = 0.5 * (a - d)
    disc = (half * half + b * c) ** 0.5
    m1 = 0.5 * (a + d) + disc
    m2 = 0.5 * (a + d) - disc
    return m1 if abs(m1 - d) <= abs(m2 - d) else m2


def _givens(x, y):
    ax = abs(x)
    ay = abs(y)
    if ay == 0.0:
        return 1.0, 0j
    if ax == 0.0:
        return 0.0, y.conjugate() / ay
    r = math.hypot(ax, ay)
    return ax / r, (x / ax) * y.conjugate() / r


def hqr(h, n):
    """Eigenvalues of an upper Hessenberg matrix (destroys ``h``)."""
    eig = [0j] * n
    found = [False] * n
    hi = n - 1
    its = 0
    total = 0
    cs = [0.0] * n
    ss = [0j] * n
    while hi >= 0:
        # look for a negligible subdiagonal entry
        l = hi
        while l > 0:
            sub = abs(h[l][l - 1])
            tst = abs(h[l - 1][l - 1]) + abs(h[l][l])
            if sub <= EPS * tst or sub < SAFE_MIN:
                h[l][l - 1] = 0j
                break
            l -= 1
        if l == hi:
            eig[hi] = h[hi][hi]
            found[hi] = True
            hi -= 1
            its = 0
            continue
        if its >= MAX_ITER_PER_EIGENVALUE * max(n, 1):
            partial = [eig[k] for k in range(n) if found[k]]
            raise EigenvalueError(f"QR iteration did not converge after {total} steps", partial)
        its += 1
        total += 1
        if its % 10 == 0:
            # exceptional shift
            mu = h[hi][hi] + 0.75 * abs(h[hi][hi - 1].real) + 0.75j * abs(h[hi][hi - 1].imag)
        else:
            mu = _wilkinson(h[hi - 1][hi - 1], h[hi - 1][hi], h[hi][hi - 1], h[hi][hi])
        for k in range(l, hi + 1):
            h[k][k] -= mu
        # H - mu I = Q R
        for k in range(l, hi):
            c, s = _givens(h[k][k], h[k + 1][k])
            cs[k] = c
            ss[k] = s
            rk = h[k]
            rk1 = h[k + 1]
            sc = s.conjugate()
            for j in range(k, hi + 1):
                a = rk[j]
                b = rk1[j]
                rk[j] = c * a + s * b
                rk1[j] = -sc * a + c * b
            rk1[k] = 0j
        # R Q + mu I
        for k in range(l, hi):
            c = cs[k]
            s = ss[k]
            sc = s.conjugate()
            top = min(k + 2, hi)
            for i in range(l, top + 1):
                row = h[i]
                a = row[k]
                b = row[k + 1]
                row[k] = c * a + sc * b
                row[k + 1] = -s * a + c * b
        for k in range(l, hi + 1):
            h[k][k] += mu
    return eig


def eigvals(matrix):
    """All eigenvalues of a square complex matrix given as nested sequences."""
    h = [[complex(x) for x in row] for row in matrix]
    n = len(h)
    if any(len(row) != n for row in h):
        raise ValueError("matrix must be square")
    if n == 0:
        return []
    for row in h:
        for x in row:
            if not (math.isfinite(x.real) and math.isfinite(x.imag)):
                raise ValueError("matrix has non-finite entries")
    balance(h, n)
    hessenberg(h, n)
    return hqr(h, n)
