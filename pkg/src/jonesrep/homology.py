"""First homology of the branched double covers and the braid action on it.

Braid generator sigma_i acts by the Dehn twist along the i-th curve c_i of a
chain.  Homology is written in the coordinates of the chain classes:

* ``one_boundary`` (n odd, surface of genus (n-1)/2 with one boundary
  component) and ``two_boundary`` (n even): c_1..c_{n-1} is a basis.
* ``closed`` (n even): basis c_1..c_{n-2}; the last class is
  c_{n-1} = -(c_1 + c_3 + ... + c_{n-3}).

The intersection pairing satisfies omega(c_{i+1}, c_i) = +1, so the twist
along c_i sends c_{i+1} to c_{i+1} + c_i.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from . import exact
from .braids import BraidError

KINDS = ("closed", "one_boundary", "two_boundary")


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceKind:
    tag: str
    strands: int

    def __post_init__(self):
        if self.tag not in KINDS:
            raise SurfaceError(f"unknown surface kind {self.tag!r}")
        n = self.strands
        if n < 2:
            raise SurfaceError("need at least two strands")
        if self.tag in ("closed", "two_boundary") and n % 2:
            raise SurfaceError(f"{self.tag} surfaces need an even number of strands, got {n}")
        if self.tag == "one_boundary" and n % 2 == 0:
            raise SurfaceError(f"one_boundary surfaces need an odd number of strands, got {n}")
        if self.tag == "closed" and n < 4:
            raise SurfaceError("closed surfaces need at least four strands")

    @property
    def genus(self):
        n = self.strands
        return (n - 1) // 2 if self.tag == "one_boundary" else n // 2 - 1


@dataclass(frozen=True)
class HomologySetup:
    kind: SurfaceKind
    dim: int
    chain_classes: Tuple[Tuple[int, ...], ...]
    pairing: Tuple[Tuple[int, ...], ...]
    relation: Optional[Tuple[int, ...]] = None

    @property
    def strands(self):
        return self.kind.strands

    def omega(self, x, y):
        p = self.pairing
        total = 0
        for i, xi in enumerate(x):
            if xi:
                row = p[i]
                for j, yj in enumerate(y):
                    if yj and row[j]:
                        total += xi * row[j] * yj
        return total


def _as_kind(kind, strands=None):
    if isinstance(kind, SurfaceKind):
        return kind
    tag = kind.replace("-", "_")
    return SurfaceKind(tag, strands)


def build_setup(kind, strands=None):
    kind = _as_kind(kind, strands)
    n = kind.strands
    dim = n - 2 if kind.tag == "closed" else n - 1
    basis = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    pairing = [[0] * dim for _ in range(dim)]
    for i in range(dim - 1):
        pairing[i + 1][i] = 1
        pairing[i][i + 1] = -1
    relation = None
    chain = list(basis)
    if kind.tag == "closed":
        relation = tuple(-1 if k % 2 == 0 and k <= n - 4 else 0 for k in range(dim))
        chain.append(relation)
    return HomologySetup(kind, dim, tuple(chain), tuple(tuple(r) for r in pairing), relation)


def transvect(c, x, setup):
    """Image of ``x`` under the twist along ``c``: x + omega(x, c) c."""
    w = setup.omega(x, c)
    return tuple(xi + w * ci for xi, ci in zip(x, c))


def transvection_matrix(c, setup, power=1):
    """Matrix of the k-th power of the twist along ``c``: x -> x + k*omega(x, c) c."""
    dim = setup.dim
    cols = []
    for j in range(dim):
        e = tuple(1 if k == j else 0 for k in range(dim))
        w = setup.omega(e, c) * power
        cols.append([ek + w * ck for ek, ck in zip(e, c)])
    return exact.transpose(cols)


def generator_matrix(i, setup, power=1):
    return transvection_matrix(setup.chain_classes[i - 1], setup, power)


def psi_matrix(w, kind):
    """Integer matrix of the homology action of the braid word ``w``."""
    setup = kind if isinstance(kind, HomologySetup) else build_setup(kind, w.strands)
    if w.strands != setup.strands:
        raise BraidError(f"word is on {w.strands} strands, surface is built for {setup.strands}")
    m = exact.identity(setup.dim)
    for i, e in w.letters:
        m = exact.matmul(m, generator_matrix(i, setup, e))
    return m


def is_symplectic(m, setup):
    om = [list(r) for r in setup.pairing]
    return exact.matmul(exact.matmul(exact.transpose(m), om), m) == om


def symplectic_basis(setup):
    """Symplectic Gram-Schmidt over Q, lowest-index pivot first.

    Returns pairs (a_k, b_k) with omega(a_k, b_k) = 1 and all other pairings
    zero.
    """
    dim = setup.dim
    vecs = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    pairs = []
    while vecs:
        found = None
        for p, u in enumerate(vecs):
            for q in range(p + 1, len(vecs)):
                w = setup.omega(u, vecs[q])
                if w:
                    found = (p, q, w)
                    break
            if found:
                break
        if found is None:
            if any(any(x for x in v) for v in vecs):
                raise SurfaceError("pairing is degenerate; no symplectic bivector")
            break
        p, q, w = found
        a = vecs[p]
        b = [x / w for x in vecs[q]]
        rest = [v for k, v in enumerate(vecs) if k not in (p, q)]
        projected = []
        for x in rest:
            xb = setup.omega(x, b)
            xa = setup.omega(x, a)
            projected.append([xi - xb * ai + xa * bi for xi, ai, bi in zip(x, a, b)])
        pairs.append((a, b))
        vecs = projected
    return pairs


def symplectic_bivector(setup):
    """The bivector sum a_k ^ b_k dual to omega, in chain coordinates."""
    from .exterior import WedgeSpace, wedge

    if setup.kind.tag == "two_boundary":
        raise SurfaceError("the pairing on a two-boundary surface is degenerate")
    space = WedgeSpace(setup.dim, 2)
    total = [Fraction(0)] * space.size
    for a, b in symplectic_basis(setup):
        v = wedge([a, b])
        total = [x + y for x, y in zip(total, v.coeffs)]
    return space.vector(total)


def closed_quotient_map(n):
    """Map from two_boundary coordinates (n-1) to closed coordinates (n-2)
    killing the boundary class c_1 + c_3 + ... + c_{n-1}."""
    closed = build_setup("closed", n)
    dim = n - 2
    cols = [[int(i == j) for i in range(dim)] for j in range(dim)]
    cols.append(list(closed.relation))
    return exact.transpose(cols)
