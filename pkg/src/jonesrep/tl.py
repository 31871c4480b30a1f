"""Diagram basis of V^{n,d} and the Temperley-Lieb / braid actions on it.

A basis diagram has ``n`` top points; each is either joined to another top
point by a non-crossing arc or runs down to one of the ``d`` bottom points
(written ``inf``).  No arc may pass over a point that runs to the bottom.

Generator convention: sigma_i acts as ``A*id + A^-1*e_i`` and its inverse as
``A^-1*id + A*e_i``.  The matrix of a word is the product of the letter
matrices in word order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Tuple

import numpy as np

from . import exact
from .braids import BraidError
from .scalars import (
    A,
    A_INV,
    LOOP,
    ONE,
    ZERO,
    G_ONE,
    G_ZERO,
    eval_laurent,
    eval_laurent_gaussian,
)

INF = -1


class DiagramError(ValueError):
    pass


@dataclass(frozen=True, order=False)
class Diagram:
    """Involution on top points 0..n-1; ``INF`` marks points joined to the bottom."""

    partner: Tuple[int, ...]

    @property
    def n(self):
        return len(self.partner)

    @property
    def d(self):
        return sum(1 for p in self.partner if p == INF)

    def arcs(self):
        """Top-top arcs as 1-based (left, right) pairs ordered by left end."""
        return [(i + 1, p + 1) for i, p in enumerate(self.partner) if p > i]

    def inf_points(self):
        return [i + 1 for i, p in enumerate(self.partner) if p == INF]

    def key(self):
        n = self.n
        return tuple(p + 1 if p != INF else n + 1 for p in self.partner)

    def is_valid(self):
        n = self.n
        open_arcs = []
        for i, p in enumerate(self.partner):
            if p == INF:
                if open_arcs:
                    return False
            elif not 0 <= p < n or p == i or self.partner[p] != i:
                return False
            elif p > i:
                open_arcs.append(p)
            else:
                if not open_arcs or open_arcs[-1] != i:
                    return False
                open_arcs.pop()
        return not open_arcs

    def __str__(self):
        pieces = []
        for i, p in enumerate(self.partner):
            if p == INF:
                pieces.append(f"({i + 1} ∞)")
            elif p > i:
                pieces.append(f"({i + 1} {p + 1})")
        return "".join(pieces)

    @classmethod
    def from_arcs(cls, n, arcs):
        partner = [INF] * n
        for a, b in arcs:
            partner[a - 1] = b - 1
            partner[b - 1] = a - 1
        d = cls(tuple(partner))
        if not d.is_valid():
            raise DiagramError(f"not a planar diagram: {arcs!r} on {n} points")
        return d

    @classmethod
    def from_string(cls, text):
        """Inverse of ``str``: ``"(1 4)(2 3)(5 ∞)"``; ``inf`` also accepted for ∞."""
        arcs = []
        n = 0
        for chunk in text.replace(")", " ").split("("):
            parts = chunk.split()
            if not parts:
                continue
            a = int(parts[0])
            n = max(n, a)
            if parts[1] in ("∞", "inf"):
                continue
            b = int(parts[1])
            n = max(n, b)
            arcs.append((min(a, b), max(a, b)))
        return cls.from_arcs(n, arcs)


class _ZeroDiagram:
    """Result of stacking that joins two bottom points."""

    def __repr__(self):
        return "ZERO"

    def __bool__(self):
        return False


ZERO_DIAGRAM = _ZeroDiagram()


def check_nd(n, d):
    if n < 0 or not 0 <= d <= n:
        raise DiagramError(f"need 0 <= d <= n, got n={n}, d={d}")
    if (n - d) % 2:
        raise DiagramError(f"d must have the parity of n (n={n}, d={d})")


def dimension(n, d):
    """Closed form for dim V^{n,d}."""
    check_nd(n, d)
    l = (n - d) // 2
    return comb(n, l) - (comb(n, l - 1) if l >= 1 else 0)


@lru_cache(maxsize=None)
def enumerate_basis(n, d):
    """All basis diagrams of V^{n,d}, in canonical order."""
    check_nd(n, d)
    out = []
    partner = [INF] * n

    def rec(i, stack, infs):
        if i == n:
            if not stack and infs == d:
                out.append(Diagram(tuple(partner)))
            return
        remaining = n - i
        # open an arc
        if len(stack) + 1 <= remaining - 1:
            stack.append(i)
            rec(i + 1, stack, infs)
            stack.pop()
        # close the innermost open arc
        if stack:
            j = stack.pop()
            partner[i], partner[j] = j, i
            rec(i + 1, stack, infs)
            partner[i] = partner[j] = INF
            stack.append(j)
        # run to the bottom
        if not stack and infs < d:
            rec(i + 1, stack, infs + 1)

    rec(0, [], 0)
    out.sort(key=Diagram.key)
    return tuple(out)


@lru_cache(maxsize=None)
def basis_index(n, d):
    return {D: k for k, D in enumerate(enumerate_basis(n, d))}


def apply_e(i, D):
    """Stack e_i on top of ``D``.

    Returns ``(diagram, coefficient)``: the loop value when ``i`` and ``i+1``
    are joined, ``ZERO_DIAGRAM`` when two bottom points would be joined, and
    coefficient 1 otherwise.
    """
    n = D.n
    if not 1 <= i < n:
        raise DiagramError(f"e_{i} does not act on {n} points")
    a, b = i - 1, i
    pa, pb = D.partner[a], D.partner[b]
    if pa == b:
        return D, LOOP
    if pa == INF and pb == INF:
        return ZERO_DIAGRAM, ZERO
    new = list(D.partner)
    new[a], new[b] = b, a
    if pa == INF:
        new[pb] = INF
    elif pb == INF:
        new[pa] = INF
    else:
        new[pa], new[pb] = pb, pa
    return Diagram(tuple(new)), ONE


@dataclass
class RepMatrix:
    """Square matrix acting on V^{n,d}; column k is the image of basis diagram k.

    ``entries`` is a list of rows for the exact domains ("laurent",
    "gaussian") and a complex numpy array for "complex".
    """

    n: int
    d: int
    entries: object
    domain: str

    @property
    def basis(self):
        return enumerate_basis(self.n, self.d)

    @property
    def size(self):
        return len(self.basis)

    def __matmul__(self, other):
        if (self.n, self.d, self.domain) != (other.n, other.d, other.domain):
            raise ValueError("incompatible representation matrices")
        if self.domain == "complex":
            return RepMatrix(self.n, self.d, self.entries @ other.entries, "complex")
        return RepMatrix(self.n, self.d, exact.matmul(self.entries, other.entries, _zero(self.domain)), self.domain)

    def __eq__(self, other):
        if not isinstance(other, RepMatrix):
            return NotImplemented
        if (self.n, self.d, self.domain) != (other.n, other.d, other.domain):
            return False
        if self.domain == "complex":
            return bool(np.array_equal(self.entries, other.entries))
        return self.entries == other.entries

    def is_identity(self):
        if self.domain == "complex":
            return bool(np.array_equal(self.entries, np.eye(self.size)))
        one = _one(self.domain)
        zero = _zero(self.domain)
        return all(
            x == (one if r == c else zero) for r, row in enumerate(self.entries) for c, x in enumerate(row)
        )

    def to_complex(self, a):
        if self.domain == "complex":
            return self.entries
        if self.domain == "laurent":
            return np.array([[eval_laurent(x, a) for x in row] for row in self.entries], dtype=complex).reshape(
                self.size, self.size
            )
        return np.array([[complex(x) for x in row] for row in self.entries], dtype=complex).reshape(
            self.size, self.size
        )


def _zero(domain):
    return {"laurent": ZERO, "gaussian": G_ZERO, "complex": 0j}[domain]


def _one(domain):
    return {"laurent": ONE, "gaussian": G_ONE, "complex": 1 + 0j}[domain]


@lru_cache(maxsize=None)
def _e_columns(i, n, d):
    """For each basis column: (row of e_i image or None, coefficient)."""
    index = basis_index(n, d)
    cols = []
    for D in enumerate_basis(n, d):
        img, coeff = apply_e(i, D)
        cols.append((None, ZERO) if img is ZERO_DIAGRAM else (index[img], coeff))
    return tuple(cols)


@lru_cache(maxsize=None)
def _sigma_laurent(i, n, d, sign):
    dim = len(enumerate_basis(n, d))
    if not 1 <= i < n:
        raise DiagramError(f"sigma_{i} does not act on {n} strands")
    # sigma = A id + A^-1 e ; sigma^-1 = A^-1 id + A e
    c_id, c_e = (A, A_INV) if sign > 0 else (A_INV, A)
    m = [[ZERO] * dim for _ in range(dim)]
    for col, (row, coeff) in enumerate(_e_columns(i, n, d)):
        m[col][col] = m[col][col] + c_id
        if row is not None:
            m[row][col] = m[row][col] + c_e * coeff
    return tuple(tuple(r) for r in m)


def rep_sigma(i, n, d, inverse=False):
    """Matrix of sigma_i (or its inverse) on V^{n,d} over Z[A, A^-1]."""
    check_nd(n, d)
    m = _sigma_laurent(i, n, d, -1 if inverse else 1)
    return RepMatrix(n, d, [list(r) for r in m], "laurent")


def rep_e(i, n, d):
    """Matrix of e_i on V^{n,d} over Z[A, A^-1]."""
    check_nd(n, d)
    if not 1 <= i < n:
        raise DiagramError(f"e_{i} does not act on {n} points")
    dim = len(enumerate_basis(n, d))
    m = [[ZERO] * dim for _ in range(dim)]
    for col, (row, coeff) in enumerate(_e_columns(i, n, d)):
        if row is not None:
            m[row][col] = coeff
    return RepMatrix(n, d, m, "laurent")


@lru_cache(maxsize=None)
def _rescaled_gaussian(i, n, d, sign, k):
    # A^-+1 * sigma^+-1 = id + A^-+2 e ; evaluated where A^2 = i^k
    dim = len(enumerate_basis(n, d))
    c_e = eval_laurent_gaussian(A_INV * A_INV if sign > 0 else A * A, k)
    m = [[G_ONE if r == c else G_ZERO for c in range(dim)] for r in range(dim)]
    for col, (row, coeff) in enumerate(_e_columns(i, n, d)):
        if row is not None:
            m[row][col] = m[row][col] + c_e * eval_laurent_gaussian(coeff, k)
    return tuple(tuple(r) for r in m)


def _sigma_complex(i, n, d, sign, a, rescale):
    dim = len(enumerate_basis(n, d))
    loop = eval_laurent(LOOP, a)
    if sign > 0:
        c_id, c_e = a, 1 / a
    else:
        c_id, c_e = 1 / a, a
    if rescale:
        c_id, c_e = c_id / (a ** sign), c_e / (a ** sign)
    m = np.zeros((dim, dim), dtype=complex)
    for col, (row, coeff) in enumerate(_e_columns(i, n, d)):
        m[col, col] += c_id
        if row is not None:
            m[row, col] += c_e * (loop if coeff == LOOP else 1)
    return m


def rep_word(w, n, d, domain="laurent", a=None, rescale=False, k=3):
    """Matrix of the braid word ``w`` on V^{n,d}.

    ``domain``: "laurent" (symbolic), "gaussian" (exact, at A^2 = i^k, the
    default being A^2 = -i, q = -1) or "complex" (at the point ``a``).
    ``rescale`` multiplies each letter sigma^{+-1} by A^{-+1}, which turns
    sigma_i into id + A^-2 e_i.  The Gaussian domain needs even powers of A
    and is only available with ``rescale=True`` unless the word has even
    length.
    """
    check_nd(n, d)
    if w.strands != n:
        raise BraidError(f"word is on {w.strands} strands, representation on {n}")
    dim = len(enumerate_basis(n, d))
    if domain == "laurent":
        m = exact.identity(dim, ONE, ZERO)
        for i, s in w.unit_letters():
            g = _sigma_laurent(i, n, d, s)
            m = exact.matmul(m, g, ZERO)
        if rescale:
            shift = -w.exponent_sum()
            m = [[x.shift(shift) for x in row] for row in m]
        return RepMatrix(n, d, m, "laurent")
    if domain == "gaussian":
        if not rescale:
            sym = rep_word(w, n, d, "laurent")
            return RepMatrix(n, d, [[eval_laurent_gaussian(x, k) for x in row] for row in sym.entries], "gaussian")
        m = exact.identity(dim, G_ONE, G_ZERO)
        for i, s in w.unit_letters():
            m = exact.matmul(m, _rescaled_gaussian(i, n, d, s, k), G_ZERO)
        return RepMatrix(n, d, m, "gaussian")
    if domain == "complex":
        if a is None:
            raise ValueError("complex domain needs an evaluation point a")
        a = complex(a)
        if a == 0:
            raise ValueError("A must be nonzero")
        m = np.eye(dim, dtype=complex)
        cache = {}
        for i, s in w.unit_letters():
            g = cache.get((i, s))
            if g is None:
                g = cache[(i, s)] = _sigma_complex(i, n, d, s, a, rescale)
            m = m @ g
        return RepMatrix(n, d, m, "complex")
    raise ValueError(f"unknown domain {domain!r}")
