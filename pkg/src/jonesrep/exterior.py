"""Exterior powers of a coordinate space, compound matrices, and quotients
by the image of wedging with a fixed bivector.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Tuple

from . import exact


class ContractViolation(ValueError):
    pass


@lru_cache(maxsize=None)
def _subsets(dim, degree):
    if degree < 0 or degree > dim:
        return ()
    subs = list(combinations(range(dim), degree))
    subs.sort(key=lambda s: tuple(reversed(s)))
    return tuple(subs)


@lru_cache(maxsize=None)
def _index(dim, degree):
    return {s: k for k, s in enumerate(_subsets(dim, degree))}


@dataclass(frozen=True)
class WedgeSpace:
    """Lambda^degree of a ``base_dim``-dimensional space.

    Basis: increasing index tuples (0-based) in colexicographic order.
    Negative degree gives the zero space, degree 0 the scalar line.
    """

    base_dim: int
    degree: int

    @property
    def basis(self):
        return _subsets(self.base_dim, self.degree)

    @property
    def size(self):
        if self.degree < 0:
            return 0
        return comb(self.base_dim, self.degree)

    def index(self, subset):
        return _index(self.base_dim, self.degree)[tuple(subset)]

    def vector(self, coeffs):
        return WedgeVector(self, tuple(coeffs))

    def zero(self):
        return WedgeVector(self, (0,) * self.size)


@dataclass(frozen=True)
class WedgeVector:
    space: WedgeSpace
    coeffs: Tuple

    def __add__(self, other):
        return WedgeVector(self.space, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return WedgeVector(self.space, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def scale(self, s):
        return WedgeVector(self.space, tuple(s * x for x in self.coeffs))

    def __neg__(self):
        return self.scale(-1)

    def is_zero(self):
        return not any(self.coeffs)

    def terms(self):
        return {s: c for s, c in zip(self.space.basis, self.coeffs) if c}


def wedge(vectors, dim=None):
    """v_1 ^ ... ^ v_l; the coefficient at S is the minor on rows S."""
    vectors = [list(v) for v in vectors]
    if dim is None:
        if not vectors:
            raise ValueError("need the base dimension for an empty wedge")
        dim = len(vectors[0])
    for v in vectors:
        if len(v) != dim:
            raise ValueError(f"vector of length {len(v)} in a {dim}-dimensional space")
    l = len(vectors)
    space = WedgeSpace(dim, l)
    if l == 0:
        return space.vector((1,))
    # skip rows where every vector vanishes
    support = [r for r in range(dim) if any(v[r] for v in vectors)]
    sup = set(support)
    coeffs = []
    for s in space.basis:
        if not sup.issuperset(s):
            coeffs.append(0)
            continue
        coeffs.append(exact.det([[v[r] for v in vectors] for r in s]))
    return space.vector(coeffs)


def _merge_sign(s, t):
    if set(s) & set(t):
        return 0
    inversions = sum(1 for x in s for y in t if x > y)
    return -1 if inversions % 2 else 1


def wedge_product(u, v):
    """Product of two wedge vectors over the same base space."""
    dim = u.space.base_dim
    out_space = WedgeSpace(dim, u.space.degree + v.space.degree)
    coeffs = [0] * out_space.size
    for s, a in u.terms().items():
        for t, b in v.terms().items():
            sign = _merge_sign(s, t)
            if sign:
                k = out_space.index(tuple(sorted(s + t)))
                coeffs[k] = coeffs[k] + sign * a * b
    return out_space.vector(coeffs)


def induced_map(m, degree):
    """Compound matrix of ``m`` on Lambda^degree: entry (S, T) = det m[S, T]."""
    dim = len(m)
    if any(len(r) != dim for r in m):
        raise ValueError("induced_map needs a square matrix")
    basis = _subsets(dim, degree)
    if degree == 0:
        return [[1]]
    if degree == 1:
        return [list(r) for r in m]
    out = []
    for s in basis:
        rows = [m[r] for r in s]
        out.append([exact.det([[row[c] for c in t] for row in rows]) for t in basis])
    return out


def induced_map_float(m, degree):
    """Compound matrix of a numpy matrix (floating point)."""
    import numpy as np

    m = np.asarray(m)
    basis = _subsets(m.shape[0], degree)
    if degree == 0:
        return np.ones((1, 1), dtype=m.dtype)
    out = np.empty((len(basis), len(basis)), dtype=m.dtype)
    for a, s in enumerate(basis):
        for b, t in enumerate(basis):
            out[a, b] = np.linalg.det(m[np.ix_(s, t)])
    return out


@dataclass
class Quotient:
    """Lambda^l / W with W = omega_hat ^ Lambda^{l-2}.

    ``complement`` lists the coordinates of Lambda^l whose basis vectors
    represent the quotient basis; ``reduced`` holds the RREF of W's spanning
    set, used to project.
    """

    space: WedgeSpace
    w_vectors: list
    reduced: list
    pivots: list
    complement: list

    @property
    def dim(self):
        return len(self.complement)

    def project(self, y):
        y = list(y.coeffs if isinstance(y, WedgeVector) else y)
        for row, p in zip(self.reduced, self.pivots):
            f = y[p]
            if f:
                y = [a - f * b if b else a for a, b in zip(y, row)]
        return [y[c] for c in self.complement]

    def projection_matrix(self):
        size = self.space.size
        cols = [self.project([int(i == j) for i in range(size)]) for j in range(size)]
        return exact.transpose(cols) if cols else []

    def induced(self, m_wedge):
        """Action on the quotient of a map on Lambda^l that preserves W."""
        for w in self.w_vectors:
            image = exact.matvec(m_wedge, list(w))
            if any(self.project(image)):
                raise ContractViolation("map does not preserve omega_hat ^ Lambda^(l-2)")
        cols = []
        for c in self.complement:
            col = [row[c] for row in m_wedge]
            cols.append(self.project(col))
        return exact.transpose(cols) if cols else []


def omega_subspace(dim, degree, omega_hat):
    """Spanning vectors of omega_hat ^ Lambda^{degree-2}."""
    lower = WedgeSpace(dim, degree - 2)
    out = []
    for t in lower.basis:
        e = lower.vector([int(s == t) for s in lower.basis])
        out.append(wedge_product(omega_hat, e).coeffs)
    return out


def make_quotient(dim, degree, omega_hat):
    space = WedgeSpace(dim, degree)
    w = omega_subspace(dim, degree, omega_hat)
    if w:
        reduced, pivots = exact.rref([[Fraction(x) if isinstance(x, int) else x for x in v] for v in w])
    else:
        reduced, pivots = [], []
    piv = set(pivots)
    complement = [c for c in range(space.size) if c not in piv]
    return Quotient(space, w, reduced, pivots, complement)


def quotient_by_omega(space, omega_hat, m):
    """Induced action of ``m`` (a map on ``space``) on space / omega_hat ^ Lambda^{l-2}.

    Returns ``(matrix, quotient)``; the quotient object carries the projection.
    """
    q = make_quotient(space.base_dim, space.degree, omega_hat)
    return q.induced(m), q
