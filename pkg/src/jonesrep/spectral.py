"""Numeric specializations: spectral radii of eta_A^{n,d}(w) along
A = exp(-pi*i*x/4), primitive roots of unity, infinite-order certificates and
homological stretch factors.
"""
from __future__ import annotations

import cmath
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ._kernels import EigenvalueError, eigvals
from .homology import psi_matrix
from .tl import check_nd, rep_word

DEFAULT_GRID = 512
ORDER_THRESHOLD = 1e-6
# beyond this size float coefficients lose exactness; fall back to numeric products
_MAX_EXACT_FLOAT_COEFF = 2**50
# roots of unity up to this order are reduced exactly before evaluation
MAX_EXACT_ROOT_ORDER = 512


def eigenvalues(m):
    """Eigenvalues (with multiplicity) of a square complex matrix."""
    return eigvals(np.asarray(m, dtype=complex))


def spectral_radius(m):
    ev = eigenvalues(m)
    return max((abs(z) for z in ev), default=0.0)


def x_to_A(x):
    return cmath.exp(-1j * math.pi * x / 4)


def x_to_root(x, max_order=MAX_EXACT_ROOT_ORDER):
    """(l, m) with exp(-pi*i*x/4) = exp(2*pi*i*l/m), gcd(l, m) = 1, when x is a
    rational with small denominator; None otherwise."""
    f = Fraction(x).limit_denominator(max_order)
    if abs(float(f) - x) > 1e-15:
        return None
    l, m = -f.numerator, 8 * f.denominator
    g = math.gcd(l, m)
    l, m = l // g, m // g
    if m > max_order:
        return None
    return l % m, m


@lru_cache(maxsize=None)
def cyclotomic(m):
    """Integer coefficients of the m-th cyclotomic polynomial, constant term first."""
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_div_exact(num, cyclotomic(d))
    return tuple(num)


def _poly_div_exact(num, den):
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k] // den[-1]
        q[k - dd] = c
        if c:
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return q


class _Specializer:
    """The symbolic matrix of a word, expanded once, evaluated at many points.

    Letters are rescaled by A^-+1 (sigma -> A^-1 sigma), as in every spectral
    computation here.
    """

    def __init__(self, w, n, d):
        check_nd(n, d)
        self.w, self.n, self.d = w, n, d
        sym = rep_word(w, n, d, "laurent", rescale=True).entries
        self.sym = sym
        exps = [e for row in sym for p in row for e, _ in p.items()]
        size = len(sym)
        self.size = size
        self.numeric = False
        if not exps:
            self.lo, self.coeffs = 0, np.zeros((1, size, size))
            return
        biggest = max(abs(c) for row in sym for p in row for _, c in p.items())
        if biggest > _MAX_EXACT_FLOAT_COEFF:
            self.numeric = True
            return
        lo, hi = min(exps), max(exps)
        coeffs = np.zeros((hi - lo + 1, size, size))
        for r, row in enumerate(sym):
            for c, p in enumerate(row):
                for e, k in p.items():
                    coeffs[e - lo, r, c] = k
        self.lo, self.coeffs = lo, coeffs

    def reduced(self, m):
        """Coefficients folded modulo A^m = 1 and reduced modulo the m-th
        cyclotomic polynomial, in exact integers."""
        cache = self.__dict__.setdefault("_reduced", {})
        if m in cache:
            return cache[m]
        phi = cyclotomic(m)
        deg = len(phi) - 1
        size = self.size
        folded = [[[0] * m for _ in range(size)] for _ in range(size)]
        for r, row in enumerate(self.sym):
            for c, p in enumerate(row):
                acc = folded[r][c]
                for e, k in p.items():
                    acc[e % m] += k
                for top in range(m - 1, deg - 1, -1):
                    t = acc[top]
                    if t:
                        for j in range(deg):
                            acc[top - deg + j] -= t * phi[j]
                        acc[top] = 0
        out = np.zeros((deg, size, size))
        for r in range(size):
            for c in range(size):
                out[:, r, c] = folded[r][c][:deg]
        cache[m] = out
        return out

    def at_root(self, l, m):
        """Matrix at A = exp(2*pi*i*l/m), gcd(l, m) = 1."""
        red = self.reduced(m)
        powers = np.array([cmath.exp(2j * math.pi * ((l * r) % m) / m) for r in range(len(red))])
        return np.tensordot(powers, red, axes=1)

    def at(self, a):
        a = complex(a)
        if self.numeric:
            return rep_word(self.w, self.n, self.d, "complex", a=a, rescale=True).entries
        powers = a ** np.arange(self.lo, self.lo + len(self.coeffs))
        # exact unit-modulus powers for points on the circle
        if abs(abs(a) - 1.0) < 1e-15:
            theta = cmath.phase(a)
            powers = np.exp(1j * theta * np.arange(self.lo, self.lo + len(self.coeffs)))
        return np.tensordot(powers, self.coeffs, axes=1)


@lru_cache(maxsize=64)
def _specializer(w, n, d):
    return _Specializer(w, n, d)


def matrix_at(w, n, d, a):
    """Rescaled eta_A^{n,d}(w) at the complex point A = a."""
    return _specializer(w, n, d).at(a)


def sr_at(w, n, d, a):
    return spectral_radius(matrix_at(w, n, d, a))


def matrix_at_root(w, n, d, l, m):
    """Rescaled eta at A = exp(2*pi*i*l/m), reduced exactly before rounding."""
    return _specializer(w, n, d).at_root(l, m)


def matrix_at_x(w, n, d, x):
    root = x_to_root(x)
    if root is not None:
        return matrix_at_root(w, n, d, *root)
    return matrix_at(w, n, d, x_to_A(x))


def sr_at_x(w, n, d, x):
    return spectral_radius(matrix_at_x(w, n, d, x))


@dataclass
class ScanResult:
    grid: list
    values: list
    n: int
    d: int
    word: str
    grid_size: int
    errors: dict = field(default_factory=dict)

    def to_csv(self):
        lines = ["x,sr"]
        for x, v in zip(self.grid, self.values):
            lines.append(f"{fmt(x)},{fmt(v)}")
        return "\n".join(lines) + "\n"


def fmt(v):
    """12 significant digits, fixed across runs."""
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return "nan"
    return f"{v:.12g}"


def _safe_sr(args):
    w, n, d, x = args
    try:
        return sr_at_x(w, n, d, x), None
    except EigenvalueError as exc:
        return float("nan"), str(exc)


def sr_scan(w, n, d, grid_size=DEFAULT_GRID, workers=1):
    """sr of the rescaled eta at A = exp(-pi*i*x/4) on a uniform grid of [0, 1]."""
    check_nd(n, d)
    if w.strands != n:
        raise ValueError(f"word is on {w.strands} strands, representation on {n}")
    if grid_size < 2:
        raise ValueError("grid needs at least two points")
    grid = [k / (grid_size - 1) for k in range(grid_size)]
    _specializer(w, n, d)
    jobs = [(w, n, d, x) for x in grid]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(_safe_sr, jobs))
    else:
        results = [_safe_sr(j) for j in jobs]
    values = [r[0] for r in results]
    errors = {grid[k]: r[1] for k, r in enumerate(results) if r[1]}
    return ScanResult(grid, values, n, d, str(w), grid_size, errors)


def primitive_residues(m):
    if m < 1:
        raise ValueError("m must be a positive integer")
    return [a for a in range(m) if math.gcd(a, m) == 1]


def nearest_primitive_index(z, m):
    """a with gcd(a, m) = 1 minimizing |exp(2*pi*i*a/m) - z|; ties go to the smaller a."""
    if m == 0:
        raise ValueError("m must be nonzero")
    z = complex(z)
    if abs(abs(z) - 1.0) > 1e-9:
        raise ValueError("z must lie on the unit circle")
    best = None
    for a in primitive_residues(m):
        dist = abs(cmath.exp(2j * math.pi * a / m) - z)
        if best is None or dist < best[1] - 1e-12:
            best = (a, dist)
    return best[0]


def nearest_primitive_root(z, m):
    a = nearest_primitive_index(z, m)
    return cmath.exp(2j * math.pi * a / m)


def jacobsthal(m):
    """Largest gap between consecutive integers coprime to m."""
    res = primitive_residues(m)
    if m == 1:
        return 1
    gaps = [b - a for a, b in zip(res, res[1:])]
    gaps.append(res[0] + m - res[-1])
    return max(gaps)


@dataclass
class OrderCertificate:
    k: int
    N: int
    d: int
    l: int
    A: str
    sr: float
    verdict: str

    def to_json(self):
        return {"k": self.k, "N": self.N, "d": self.d, "A": self.A, "sr": float(fmt(self.sr)),
                "verdict": self.verdict}


def order_certificates(w, n, d, N=2, k_range=range(1, 13), threshold=ORDER_THRESHOLD):
    """Infinite-order certificates for the level-k images of ``w``.

    At level k the representation is eta at a primitive 4(k+N)-th root of
    unity A.  Having finite order is invariant under Galois conjugation, so
    sr > 1 at any primitive root certifies infinite order; every primitive
    exponent l <= m/2 is tried (complex conjugates give the same radius) and
    the largest radius is reported.
    """
    out = []
    for k in k_range:
        m = 4 * (k + N)
        best = None
        for l in primitive_residues(m):
            if 2 * l > m:
                break
            sr = spectral_radius(matrix_at_root(w, n, d, l, m))
            if best is None or sr > best[1] + 1e-12:
                best = (l, sr)
        l, sr = best
        verdict = "infinite_order" if sr > 1 + threshold else "inconclusive"
        out.append(OrderCertificate(k, N, d, l, f"2*pi*{l}/(4*({k}+{N}))", sr, verdict))
    return out


def stretch_estimate(w, kind):
    """Spectral radius of the homology action of ``w`` (the stretch factor when
    the braid is a homological pseudo-Anosov; not certified here)."""
    m = np.array(psi_matrix(w, kind), dtype=float)
    return spectral_radius(m)


def eigen_pair_products(w, n, d, x):
    """sqrt(|lambda_i * lambda_j|) over pairs i <= j of eigenvalues at A(x), sorted."""
    ev = eigenvalues(matrix_at_x(w, n, d, x))
    mods = [abs(z) for z in ev]
    out = [math.sqrt(mods[i] * mods[j]) for i in range(len(mods)) for j in range(i, len(mods))]
    return sorted(out)
