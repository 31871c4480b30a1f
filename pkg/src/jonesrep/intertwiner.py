"""The map phi from V^{n,d} at q = -1 into Lambda^l of surface homology.

phi(D) = f(D) * X_{e_1} ^ ... ^ X_{e_l}, arcs ordered by left end point,
X_e = c_{e0} + ... + c_{e1 - 1} and f(D) = (-i)^(sum of w(e) + v(e)),
where w(e) counts arcs nested inside e and v(e) counts bottom-connected
points to the right of e.

Everything here is exact (Gaussian rationals).  The braid side uses the
rescaled generators sigma_i -> id + i*T_i, T_i being e_i at loop value 0.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import exact
from .braids import BraidWord
from .exterior import WedgeSpace, induced_map, make_quotient, wedge
from .homology import HomologySetup, SurfaceError, build_setup, generator_matrix, psi_matrix, symplectic_bivector
from .scalars import G_ONE, G_ZERO, I_UNIT, eval_laurent_gaussian, i_power
from .tl import INF, ZERO_DIAGRAM, Diagram, DiagramError, apply_e, enumerate_basis, rep_word

MINUS_I_POWERS = tuple(i_power(-k) for k in range(4))


@dataclass(frozen=True)
class ArcData:
    left: int
    right: int
    w: int
    v: int
    x: tuple


def arc_data(D, dim=None):
    """Per-arc data (1-based end points) in order of left end point."""
    n = D.n
    dim = n - 1 if dim is None else dim
    arcs = D.arcs()
    infs = D.inf_points()
    out = []
    for e0, e1 in arcs:
        w = sum(1 for a0, _ in arcs if e0 < a0 < e1)
        v = sum(1 for p in infs if p > e1)
        x = tuple(1 if e0 <= k + 1 <= e1 - 1 else 0 for k in range(dim))
        out.append(ArcData(e0, e1, w, v, x))
    return out


def f_exponent(D):
    return sum(a.w + a.v for a in arc_data(D))


def f_value(D):
    return MINUS_I_POWERS[f_exponent(D) % 4]


def _setup(setup, n):
    if isinstance(setup, HomologySetup):
        return setup
    return build_setup(setup, n)


def phi(D, setup):
    """phi(D) as a WedgeVector with Gaussian-rational coefficients."""
    setup = _setup(setup, D.n)
    if setup.kind.tag == "closed":
        raise SurfaceError("closed surfaces use phi_tilde")
    if setup.strands != D.n:
        raise SurfaceError(f"diagram on {D.n} points, surface built for {setup.strands} strands")
    return _phi_cached(D, setup)


@lru_cache(maxsize=None)
def _phi_cached(D, setup):
    data = arc_data(D, setup.dim)
    f = MINUS_I_POWERS[sum(a.w + a.v for a in data) % 4]
    if not data:
        return WedgeSpace(setup.dim, 0).vector((f,))
    v = wedge([a.x for a in data], setup.dim)
    return v.space.vector(tuple(f * c if c else G_ZERO for c in v.coeffs))


def tilde_diagram(D):
    """Remove the arc through the last point and send its other end to the bottom."""
    if D.d != 0:
        raise DiagramError("the tilde map is defined on V^{n,0}")
    n = D.n
    i = D.partner[n - 1]
    partner = list(D.partner[: n - 1])
    partner[i] = INF
    return Diagram(tuple(partner))


def phi_tilde(D, setup=None):
    """Closed-surface variant: phi of the tilde diagram on the one-boundary surface
    with n-1 strands, whose chain basis c_1..c_{n-2} is the closed-surface basis."""
    if D.d != 0:
        raise DiagramError("phi_tilde needs d = 0")
    if setup is not None:
        setup = _setup(setup, D.n)
        if setup.kind.tag != "closed":
            raise SurfaceError("phi_tilde is the closed-surface map")
    return phi(tilde_diagram(D), build_setup("one_boundary", D.n - 1))


def _phi_for(kind, D):
    if kind == "closed":
        return phi_tilde(D)
    return phi(D, build_setup(kind, D.n))


def kind_for(n, d, closed=False):
    """Surface kind matching (n, d): odd n -> one_boundary; even n -> two_boundary,
    or closed when requested (d = 0 only)."""
    if n % 2:
        return "one_boundary"
    if closed:
        if d != 0:
            raise SurfaceError("the closed-surface map needs d = 0")
        return "closed"
    return "two_boundary"


def _check_pair(n, d, kind):
    kind = kind.replace("-", "_")
    if kind == "one_boundary" and n % 2 == 0:
        raise SurfaceError("one_boundary needs an odd number of strands")
    if kind == "two_boundary" and n % 2:
        raise SurfaceError("two_boundary needs an even number of strands")
    if kind == "closed" and (n % 2 or d):
        raise SurfaceError("closed needs an even number of strands and d = 0")
    return kind


def phi_matrix(n, d, kind):
    """Matrix with columns phi(D) (phi_tilde for closed) over the basis of V^{n,d}."""
    kind = _check_pair(n, d, kind)
    cols = [list(_phi_for(kind, D).coeffs) for D in enumerate_basis(n, d)]
    return exact.transpose(cols)


def wedge_degree(n, d, kind):
    """l = number of arcs; the closed map goes through V^{n-1,1}, one arc fewer."""
    return (n - d) // 2 - (1 if kind == "closed" else 0)


def _homology_setup(n, kind):
    return build_setup(kind, n)


@lru_cache(maxsize=None)
def _compound_generator(i, n, kind, degree):
    setup = _homology_setup(n, kind)
    return tuple(tuple(r) for r in induced_map(generator_matrix(i, setup), degree))


def verify_equivariance(n, d, kind):
    """Check phi(D + i*T_i D) = t_{c_i} phi(D) for all basis D and all i.

    Returns a report dict; failures list the full operands.
    """
    kind = _check_pair(n, d, kind)
    basis = enumerate_basis(n, d)
    degree = wedge_degree(n, d, kind)
    failures = []
    checks = 0
    for i in range(1, n):
        comp = _compound_generator(i, n, kind, degree)
        for D in basis:
            v = list(_phi_for(kind, D).coeffs)
            img, coeff = apply_e(i, D)
            lhs = list(v)
            if img is not ZERO_DIAGRAM:
                c = I_UNIT * eval_laurent_gaussian(coeff)
                if c:
                    w = _phi_for(kind, img).coeffs
                    lhs = [x + c * y for x, y in zip(lhs, w)]
            rhs = exact.matvec(comp, v, G_ZERO)
            checks += 1
            if any(x != y for x, y in zip(lhs, rhs)):
                failures.append(
                    {
                        "i": i,
                        "diagram": str(D),
                        "T_i D": None if img is ZERO_DIAGRAM else str(img),
                        "lhs": [str(x) for x in lhs],
                        "rhs": [str(x) for x in rhs],
                    }
                )
    return {"check": "equivariance", "n": n, "d": d, "kind": kind, "checks": checks,
            "failures": failures, "ok": not failures}


def _quotient_for(n, d, kind):
    """Quotient of Lambda^l by omega_hat ^ Lambda^{l-2} for the matching surface."""
    setup = build_setup(kind, n)
    degree = wedge_degree(n, d, kind)
    return make_quotient(setup.dim, degree, symplectic_bivector(setup))


def verify_rank(n, d, kind):
    """Rank of phi into the omega-quotient (one_boundary, closed) or into Lambda^l
    (two_boundary), compared with dim V^{n,d} and the target dimension."""
    kind = _check_pair(n, d, kind)
    phi_m = phi_matrix(n, d, kind)
    dim_v = len(enumerate_basis(n, d))
    if kind == "two_boundary":
        target = len(phi_m)
        r = exact.rank(phi_m)
        ok = r == dim_v
        mode = "injective"
    else:
        q = _quotient_for(n, d, kind)
        cols = [q.project(c) for c in exact.transpose(phi_m)]
        target = q.dim
        r = exact.rank(exact.transpose(cols)) if target else 0
        ok = r == dim_v == target
        mode = "isomorphism"
    return {"check": "rank", "n": n, "d": d, "kind": kind, "mode": mode, "dim_V": dim_v,
            "target_dim": target, "rank": r, "ok": ok}


def nested_arc_reduction(D, a, dim=None):
    """Check X_a ^ (wedge of X_e, e nested in a) equals the same wedge with X_a
    replaced by c_{a0} + c_{a0+2} + ... (same parity as a0, up to a1).

    ``a`` is a 1-based arc (a0, a1) of ``D``.  Returns (ok, lhs, rhs).
    """
    dim = D.n - 1 if dim is None else dim
    a0, a1 = a
    if (a0, a1) not in D.arcs():
        raise DiagramError(f"{a} is not an arc of {D}")
    data = arc_data(D, dim)
    inner = [e.x for e in data if a0 < e.left and e.right < a1]
    xa = next(e.x for e in data if e.left == a0)
    alt = tuple(1 if a0 <= k + 1 <= a1 and (k + 1 - a0) % 2 == 0 else 0 for k in range(dim))
    lhs = wedge([xa] + inner, dim)
    rhs = wedge([alt] + inner, dim)
    return lhs == rhs, lhs, rhs


def _homology_action(w, kind, degree):
    return induced_map(psi_matrix(w, kind), degree)


def random_word(n, length, rng):
    letters = [(rng.randrange(1, n), rng.choice((1, -1))) for _ in range(length)]
    return BraidWord(n, tuple(letters))


def representation_equivalence(n, d, kind, words=50, max_length=12, seed=0):
    """Check Phi * M_V(w) = M_H(w) * Phi on random words.

    M_V is the rescaled representation at q = -1; M_H is the induced action on
    Lambda^l (and on the omega-quotient for one_boundary and closed).  For
    two_boundary the identity is allowed to hold up to a global power of -i;
    the powers found are reported.
    """
    kind = _check_pair(n, d, kind)
    rng = random.Random(seed)
    degree = wedge_degree(n, d, kind)
    phi_m = phi_matrix(n, d, kind)
    q = _quotient_for(n, d, kind) if kind != "two_boundary" else None
    powers = set()
    failures = []
    for _ in range(words):
        w = random_word(n, rng.randint(0, max_length), rng)
        mv = rep_word(w, n, d, "gaussian", rescale=True).entries
        mh = _homology_action(w, kind, degree)
        left = exact.matmul(phi_m, mv, G_ZERO)
        right = exact.matmul(mh, phi_m, G_ZERO)
        found = None
        for k in range(4):
            s = MINUS_I_POWERS[k]
            if all(x == s * y for rl, rr in zip(left, right) for x, y in zip(rl, rr)):
                found = k
                break
        if kind != "two_boundary" and found not in (0,):
            failures.append(str(w))
            continue
        if found is None:
            failures.append(str(w))
            continue
        powers.add(found)
        if q is not None:
            qh = q.induced(mh)
            pl = exact.transpose([q.project(c) for c in exact.transpose(left)])
            pphi = exact.transpose([q.project(c) for c in exact.transpose(phi_m)])
            pr = exact.matmul(qh, pphi, G_ZERO)
            if any(x != y for rl, rr in zip(pl, pr) for x, y in zip(rl, rr)):
                failures.append(str(w))
    return {"check": "equivalence", "n": n, "d": d, "kind": kind, "words": words,
            "powers_of_minus_i": sorted(powers), "failures": failures, "ok": not failures}


def theorem_cases(max_n):
    """All (n, d, kind) triples covered by the equivalence theorems for n <= max_n."""
    out = []
    for n in range(2, max_n + 1):
        for d in range(n % 2, n + 1, 2):
            if n % 2:
                out.append((n, d, "one_boundary"))
            else:
                out.append((n, d, "two_boundary"))
                if d == 0 and n >= 4:
                    out.append((n, d, "closed"))
    return out
