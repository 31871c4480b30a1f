import random

import pytest

from jonesrep.homology import SurfaceError, build_setup
from jonesrep.intertwiner import (
    MINUS_I_POWERS,
    arc_data,
    f_value,
    nested_arc_reduction,
    phi,
    phi_matrix,
    phi_tilde,
    representation_equivalence,
    theorem_cases,
    tilde_diagram,
    verify_equivariance,
    verify_rank,
)
from jonesrep.scalars import G_ONE, GaussianRational
from jonesrep.tl import Diagram, DiagramError, enumerate_basis

CASES = theorem_cases(9)


def _id(case):
    return "%d-%d-%s" % case


def test_case_list_covers_every_pair():
    assert (6, 0, "closed") in CASES and (5, 3, "one_boundary") in CASES
    assert all(n <= 9 for n, _, _ in CASES)
    assert sum(1 for c in CASES if c[2] == "closed") == 3


@pytest.mark.parametrize("n, d, kind", CASES, ids=[_id(c) for c in CASES])
def test_exact_equivariance(n, d, kind):
    rep = verify_equivariance(n, d, kind)
    assert rep["ok"], rep["failures"][:2]
    assert rep["checks"] == (n - 1) * len(enumerate_basis(n, d))


@pytest.mark.parametrize("n, d, kind", CASES, ids=[_id(c) for c in CASES])
def test_rank(n, d, kind):
    rep = verify_rank(n, d, kind)
    assert rep["ok"], rep


def test_rank_examples():
    r = verify_rank(7, 1, "one_boundary")
    assert r["rank"] == r["dim_V"] == r["target_dim"] == 14
    r = verify_rank(5, 3, "one_boundary")
    assert (r["rank"], r["target_dim"]) == (4, 4)
    r = verify_rank(4, 2, "two_boundary")
    assert (r["rank"], r["target_dim"]) == (3, 3)
    r = verify_rank(6, 0, "closed")
    assert r["rank"] == 5 and r["target_dim"] == 5


def test_arc_data_nested_example():
    D = Diagram.from_arcs(10, [(1, 8), (2, 3), (4, 5), (6, 7)])
    outer = arc_data(D)[0]
    assert (outer.left, outer.right, outer.w, outer.v) == (1, 8, 3, 2)
    assert outer.x == (1,) * 7 + (0, 0)


def test_phi_without_arcs_is_one():
    for n in (3, 4, 5):
        D = enumerate_basis(n, n)[0]
        v = phi(D, build_setup("one_boundary" if n % 2 else "two_boundary", n))
        assert v.coeffs == (G_ONE,)


def test_phi_single_arc():
    s = build_setup("one_boundary", 7)
    for i in range(1, 7):
        D = Diagram.from_arcs(7, [(i, i + 1)])
        v = 7 - (i + 1)
        expected = [MINUS_I_POWERS[v % 4] if k == i - 1 else 0 for k in range(6)]
        assert list(phi(D, s).coeffs) == expected


def test_phi_rejects_closed_and_mismatch():
    D = enumerate_basis(6, 0)[0]
    with pytest.raises(SurfaceError):
        phi(D, build_setup("closed", 6))
    with pytest.raises(SurfaceError):
        phi(D, build_setup("two_boundary", 8))
    with pytest.raises(DiagramError):
        phi_tilde(enumerate_basis(6, 2)[0])


def test_tilde_is_a_bijection():
    for n in (4, 6, 8):
        imgs = [tilde_diagram(D) for D in enumerate_basis(n, 0)]
        assert len(set(imgs)) == len(imgs)
        assert set(imgs) == set(enumerate_basis(n - 1, 1))


def test_tilde_example():
    D = Diagram.from_arcs(6, [(1, 6), (2, 5), (3, 4)])
    assert tilde_diagram(D) == Diagram.from_arcs(5, [(2, 5), (3, 4)])


def test_equivariance_example_reports():
    assert verify_equivariance(5, 1, "one_boundary")["ok"]
    assert verify_equivariance(6, 0, "closed")["ok"]


def test_nested_arc_examples():
    D = Diagram.from_arcs(8, [(1, 8), (2, 7), (3, 6), (4, 5)])
    assert nested_arc_reduction(D, (1, 8))[0]
    D = Diagram.from_arcs(8, [(1, 8), (2, 3), (4, 5), (6, 7)])
    assert nested_arc_reduction(D, (1, 8))[0]
    with pytest.raises(DiagramError):
        nested_arc_reduction(D, (1, 2))


def test_nested_arc_reduction_everywhere():
    for D in enumerate_basis(9, 1):
        for a in D.arcs():
            assert nested_arc_reduction(D, a)[0]


def test_f_is_a_fourth_root_of_unity():
    for n in range(2, 10):
        for d in range(n % 2, n + 1, 2):
            for D in enumerate_basis(n, d):
                f = f_value(D)
                assert f * f * f * f == G_ONE


@pytest.mark.parametrize(
    "n, d, kind",
    [(5, 1, "one_boundary"), (5, 3, "one_boundary"), (7, 3, "one_boundary"), (6, 0, "closed"),
     (6, 2, "two_boundary"), (4, 0, "two_boundary"), (8, 0, "closed")],
)
def test_representation_equivalence(n, d, kind):
    rep = representation_equivalence(n, d, kind, words=50, max_length=12, seed=n + d)
    assert rep["ok"], rep["failures"]
    assert len(rep["powers_of_minus_i"]) <= 1


def test_phi_matrix_shape():
    m = phi_matrix(6, 0, "closed")
    assert len(m) == 6 and len(m[0]) == 5
    assert all(isinstance(x, (GaussianRational, int)) for r in m for x in r)
