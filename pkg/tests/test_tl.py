import cmath
import itertools
import random
from math import comb

import numpy as np
import pytest

from jonesrep import exact
from jonesrep.braids import BraidWord, BraidError, catalog_word, word
from jonesrep.scalars import A, A_INV, LOOP, ONE, ZERO, LaurentPoly, eval_laurent
from jonesrep.tl import (
    INF,
    ZERO_DIAGRAM,
    Diagram,
    DiagramError,
    apply_e,
    dimension,
    enumerate_basis,
    rep_e,
    rep_sigma,
    rep_word,
)


def brute_force_basis(n, d):
    """Every involution of n points with d fixed points, filtered for planarity."""
    out = set()
    for partner in itertools.product(range(-1, n), repeat=n):
        D = Diagram(tuple(INF if p == -1 else p for p in partner))
        if D.d == d and D.is_valid():
            out.add(D)
    return out


def test_small_bases_against_brute_force():
    for n in range(1, 7):
        for d in range(n % 2, n + 1, 2):
            assert set(enumerate_basis(n, d)) == brute_force_basis(n, d)


def test_basis_examples():
    assert len(enumerate_basis(6, 0)) == 5
    assert len(enumerate_basis(8, 0)) == 14
    for n in range(7):
        assert len(enumerate_basis(n, n)) == 1
    with pytest.raises(DiagramError):
        enumerate_basis(5, 0)


def test_dimension_identity():
    for n in range(13):
        for d in range(n % 2, n + 1, 2):
            l = (n - d) // 2
            expected = comb(n, l) - (comb(n, l - 1) if l else 0)
            assert len(enumerate_basis(n, d)) == expected == dimension(n, d)


def test_canonical_order_and_strings():
    basis = enumerate_basis(6, 0)
    assert [str(D) for D in basis] == [
        "(1 2)(3 4)(5 6)",
        "(1 2)(3 6)(4 5)",
        "(1 4)(2 3)(5 6)",
        "(1 6)(2 3)(4 5)",
        "(1 6)(2 5)(3 4)",
    ]
    for D in enumerate_basis(7, 3):
        assert Diagram.from_string(str(D)) == D


def test_invalid_diagrams():
    with pytest.raises(DiagramError):
        Diagram.from_arcs(4, [(1, 3), (2, 4)])
    with pytest.raises(DiagramError):
        Diagram.from_arcs(3, [(1, 3)])  # arc over a bottom-connected point


def test_apply_e_rules():
    D = Diagram.from_arcs(6, [(4, 5)])
    assert apply_e(4, D) == (D, LOOP)
    D = Diagram.from_arcs(6, [(4, 5)])
    img, c = apply_e(2, D)
    assert img is ZERO_DIAGRAM and c == ZERO
    img, c = apply_e(3, D)
    assert img == Diagram.from_arcs(6, [(3, 4)]) and c == ONE
    with pytest.raises(DiagramError):
        apply_e(6, D)


def test_sigma_on_diagram_with_two_bottom_points():
    basis = enumerate_basis(6, 4)
    D = Diagram.from_arcs(6, [(4, 5)])
    k = basis.index(D)
    m = rep_sigma(2, 6, 4).entries
    assert [row[k] for row in m] == [A if r == k else ZERO for r in range(len(basis))]


def test_single_strand_pair():
    assert rep_word(word("s1", 2), 2, 0).entries == [[LaurentPoly({-3: -1})]]


def _mat(m):
    return m.entries if hasattr(m, "entries") else m


def _mul(*ms):
    out = _mat(ms[0])
    for m in ms[1:]:
        out = exact.matmul(out, _mat(m), ZERO)
    return out


def _cases(max_n):
    for n in range(2, max_n + 1):
        for d in range(n % 2, n + 1, 2):
            yield n, d


@pytest.mark.parametrize("n, d", list(_cases(8)))
def test_temperley_lieb_relations(n, d):
    es = {i: rep_e(i, n, d).entries for i in range(1, n)}
    for i in range(1, n):
        assert _mul(es[i], es[i]) == [[LOOP * x for x in row] for row in es[i]]
        if i + 1 < n:
            assert _mul(es[i], es[i + 1], es[i]) == es[i]
            assert _mul(es[i + 1], es[i], es[i + 1]) == es[i + 1]
        for j in range(i + 2, n):
            assert _mul(es[i], es[j]) == _mul(es[j], es[i])


@pytest.mark.parametrize("n, d", list(_cases(8)))
def test_braid_relations(n, d):
    s = {i: rep_sigma(i, n, d).entries for i in range(1, n)}
    dim = len(enumerate_basis(n, d))
    ident = exact.identity(dim, ONE, ZERO)
    for i in range(1, n):
        assert _mul(s[i], rep_sigma(i, n, d, inverse=True)) == ident
        if i + 1 < n:
            assert _mul(s[i], s[i + 1], s[i]) == _mul(s[i + 1], s[i], s[i + 1])
        for j in range(i + 2, n):
            assert _mul(s[i], s[j]) == _mul(s[j], s[i])


def test_identity_word():
    for n, d in [(4, 0), (5, 3), (6, 2)]:
        assert rep_word(BraidWord(n), n, d).is_identity()


def test_bigelow_is_in_the_kernel():
    assert rep_word(catalog_word("bigelow"), 5, 3).is_identity()


def test_evaluation_commutes_with_products():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(2, 6)
        d = rng.choice(range(n % 2, n + 1, 2))
        length = rng.randint(0, 20)
        w = BraidWord(n, tuple((rng.randrange(1, n), rng.choice((1, -1))) for _ in range(length)))
        a = cmath.exp(2j * cmath.pi * rng.random())
        sym = rep_word(w, n, d).to_complex(a)
        num = rep_word(w, n, d, "complex", a=a).entries
        assert np.max(np.abs(sym - num), initial=0) < 1e-9


def test_gaussian_domain_is_rescaled_q_minus_one():
    w = word("s1 s2^-1 s3", 4)
    g = rep_word(w, 4, 2, "gaussian", rescale=True)
    a = cmath.exp(-1j * cmath.pi / 4)
    num = rep_word(w, 4, 2, "complex", a=a, rescale=True).entries
    assert np.max(np.abs(g.to_complex(a) - num)) < 1e-12


def test_strand_mismatch():
    with pytest.raises(BraidError):
        rep_word(word("s1", 3), 4, 0)
