import random
from fractions import Fraction
from itertools import combinations
from math import comb, prod

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linear_sum_assignment

from jonesrep import exact
from jonesrep.exterior import (
    ContractViolation,
    WedgeSpace,
    induced_map,
    induced_map_float,
    make_quotient,
    omega_subspace,
    quotient_by_omega,
    wedge,
    wedge_product,
)


def e(k, dim):
    return [int(i == k) for i in range(dim)]


def test_wedge_examples():
    v = wedge([e(0, 4), e(1, 4)])
    assert v.terms() == {(0, 1): 1}
    assert wedge([[1, 2, 3], [1, 2, 3]]).is_zero()
    assert wedge([[1, 1, 0], [0, 1, 0]]).terms() == {(0, 1): 1}
    with pytest.raises(ValueError):
        wedge([[1, 0], [1, 0, 0]])


def test_space_conventions():
    assert WedgeSpace(4, 2).basis == ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3))
    assert WedgeSpace(5, 0).size == 1
    assert WedgeSpace(5, -1).size == 0
    assert wedge([], 3).coeffs == (1,)


vectors = st.lists(st.integers(-4, 4), min_size=5, max_size=5)


@settings(max_examples=100, deadline=None)
@given(st.lists(vectors, min_size=2, max_size=4), st.data())
def test_transposing_factors_negates(vs, data):
    i, j = data.draw(st.sampled_from(list(combinations(range(len(vs)), 2))))
    ws = list(vs)
    ws[i], ws[j] = ws[j], ws[i]
    assert wedge(ws) == -wedge(vs)


@settings(max_examples=60, deadline=None)
@given(st.lists(vectors, min_size=1, max_size=2), st.lists(vectors, min_size=1, max_size=2))
def test_wedge_product_is_concatenation(us, vs):
    assert wedge_product(wedge(us), wedge(vs)) == wedge(us + vs)


def _rand_int_matrix(rng, n):
    return [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]


def test_functoriality():
    rng = random.Random(11)
    for dim in range(1, 9):
        for l in range(0, min(dim, 4) + 1):
            a, b = _rand_int_matrix(rng, dim), _rand_int_matrix(rng, dim)
            lhs = induced_map(exact.matmul(a, b), l)
            rhs = exact.matmul(induced_map(a, l), induced_map(b, l))
            assert lhs == rhs


def test_top_degree_is_determinant():
    rng = random.Random(3)
    for dim in range(1, 6):
        m = _rand_int_matrix(rng, dim)
        assert induced_map(m, dim) == [[exact.det(m)]]


def test_induced_map_sends_wedges_to_wedges():
    rng = random.Random(8)
    m = _rand_int_matrix(rng, 5)
    vs = [[rng.randint(-2, 2) for _ in range(5)] for _ in range(3)]
    img = wedge([exact.matvec(m, v) for v in vs])
    assert exact.matvec(induced_map(m, 3), list(wedge(vs).coeffs)) == list(img.coeffs)


def _match(a, b):
    a, b = np.asarray(a), np.asarray(b)
    cost = np.abs(a[:, None] - b[None, :])
    r, c = linear_sum_assignment(cost)
    return cost[r, c].max(initial=0)


def test_wedge_eigenvalues_are_products():
    rng = np.random.default_rng(1)
    for dim in range(2, 7):
        for l in range(1, dim + 1):
            mods = np.sort(rng.uniform(0.5, 2.0, dim))
            lam = mods * np.exp(2j * np.pi * rng.random(dim))
            p = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
            m = p @ np.diag(lam) @ np.linalg.inv(p)
            got = np.linalg.eigvals(induced_map_float(m, l))
            want = [prod(lam[list(s)]) for s in combinations(range(dim), l)]
            assert _match(got, want) < 1e-8 * max(1, max(abs(w) for w in want))


def _standard_form(g):
    om = [[0] * (2 * g) for _ in range(2 * g)]
    for k in range(g):
        om[2 * k][2 * k + 1], om[2 * k + 1][2 * k] = 1, -1
    return om


def _bivector(om):
    """omega_hat = -Omega^{-1} as a degree-2 wedge vector (standard form: Omega^{-1} = -Omega)."""
    dim = len(om)
    space = WedgeSpace(dim, 2)
    return space.vector([om[i][j] for i, j in space.basis])


def _transvection(v, c, om):
    # x -> x + c * omega(x, v) v
    dim = len(v)
    ov = exact.matvec(om, v)
    return [[int(i == j) + c * v[i] * ov[j] for j in range(dim)] for i in range(dim)]


def _random_symplectic_conjugator(g, rng, om):
    s = exact.identity(2 * g)
    for _ in range(g):
        v = [rng.randint(-1, 1) for _ in range(2 * g)]
        s = exact.matmul(s, _transvection(v, rng.choice((1, -1)), om))
    return s


def _inverse_symplectic(s, om):
    # S^{-1} = -Omega S^T Omega for symplectic S
    return [[-x for x in r] for r in exact.matmul(exact.matmul(om, exact.transpose(s)), om)]


HYPERBOLIC = [Fraction(2), Fraction(3), Fraction(5)]
ROTATIONS = [(Fraction(3, 5), Fraction(4, 5)), (Fraction(5, 13), Fraction(12, 13)), (Fraction(8, 17), Fraction(15, 17))]


@pytest.mark.parametrize("g", [1, 2, 3])
def test_dominant_multiplicity_count(g):
    rng = random.Random(g)
    om = _standard_form(g)
    for m in range(0, g + 1):
        block = [[Fraction(0)] * (2 * g) for _ in range(2 * g)]
        for k in range(g):
            if k < m:
                lam = HYPERBOLIC[k]
                blk = [[lam, 0], [0, 1 / lam]]
            else:
                c, s = ROTATIONS[k]
                blk = [[c, -s], [s, c]]
            for a in range(2):
                for b in range(2):
                    block[2 * k + a][2 * k + b] = Fraction(blk[a][b])
        s = _random_symplectic_conjugator(g, rng, om)
        mat = exact.matmul(exact.matmul(s, block), _inverse_symplectic(s, om))
        assert exact.matmul(exact.matmul(exact.transpose(mat), om), mat) == om
        omega_hat = _bivector(om)
        for l in range(m, g + 1):
            q_m, q = quotient_by_omega(WedgeSpace(2 * g, l), omega_hat, induced_map(mat, l))
            assert q.dim == comb(2 * g, l) - (comb(2 * g, l - 2) if l >= 2 else 0)
            if not q.dim:
                continue
            ev = np.linalg.eigvals(np.array(q_m, dtype=float))
            top = max(abs(ev))
            # conjugation costs some accuracy on repeated eigenvalues; distinct
            # moduli differ by a factor >= 2, so the window still counts exactly
            count = int(np.sum(np.abs(np.abs(ev) - top) < 1e-6 * top))
            free = 2 * g - 2 * m
            expected = comb(free, l - m) - (comb(free, l - m - 2) if l - m >= 2 else 0)
            assert count == expected, (g, m, l)
            assert top == pytest.approx(float(prod(HYPERBOLIC[:m])), rel=1e-6)


def test_quotient_dimensions_and_projection():
    om = _standard_form(2)
    omega_hat = _bivector(om)
    q = make_quotient(4, 2, omega_hat)
    assert q.dim == 5
    assert make_quotient(4, 1, omega_hat).dim == 4
    for g in (2, 3):
        oh = _bivector(_standard_form(g))
        for l in range(0, g + 1):
            q = make_quotient(2 * g, l, oh)
            for w in omega_subspace(2 * g, l, oh):
                assert not any(q.project(list(w)))


def test_quotient_of_identity():
    oh = _bivector(_standard_form(3))
    ident = induced_map(exact.identity(6), 3)
    qm, q = quotient_by_omega(WedgeSpace(6, 3), oh, ident)
    assert qm == exact.identity(q.dim)


def test_non_invariant_map_is_rejected():
    oh = _bivector(_standard_form(2))
    m = exact.identity(4)
    m[0][0] = 2  # not symplectic
    with pytest.raises(ContractViolation):
        quotient_by_omega(WedgeSpace(4, 2), oh, induced_map(m, 2))
