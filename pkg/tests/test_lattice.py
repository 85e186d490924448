import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from oracles import det, determinantal_invariants
from schubclass.cartan import build_root_system
from schubclass.errors import NotReduced, ParseError
from schubclass.lattice import (IsogenyType, beta_sequence, character_lattice, hermite_normal_form,
                                kernel_report, smith_normal_form, sublattice_equal,
                                verify_beta_kernel_equality, word_kernel_equality)
from schubclass.weyl import apply, from_word, group_elements, identity

matrices = st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-12, 12), min_size=n, max_size=n), min_size=m, max_size=m)))


def test_snf_examples():
    assert smith_normal_form([[0, 0], [0, 0]]).invariant_factors == ()
    assert smith_normal_form([[0, 0], [0, 0]]).rank_of_image == 0
    assert smith_normal_form([[1, 0], [0, 1]]).invariant_factors == (1, 1)
    assert smith_normal_form([[2]]).invariant_factors == (2,)
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).invariant_factors == (2, 6, 12)


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_snf_matches_determinantal_divisors(M):
    snf = smith_normal_form(M)
    assert list(snf.invariant_factors) == determinantal_invariants(M)
    factors = snf.invariant_factors
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_snf_invariant_under_transpose(M):
    T = [list(col) for col in zip(*M)]
    assert smith_normal_form(M) == smith_normal_form(T)


@settings(max_examples=200, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_hnf_is_canonical(M, rnd):
    n = len(M[0])
    H = hermite_normal_form(M, n)
    # a unimodular recombination of the rows spans the same lattice
    rows = [list(r) for r in M]
    for _ in range(6):
        i, j = rnd.randrange(len(rows)), rnd.randrange(len(rows))
        if i != j:
            k = rnd.randint(-3, 3)
            rows[i] = [a + k * b for a, b in zip(rows[i], rows[j])]
    rnd.shuffle(rows)
    assert hermite_normal_form(rows, n) == H
    # shape: positive pivots, increasing pivot columns, reduced entries
    pivots = []
    for r in H:
        p = max(c for c in range(n) if r[c])
        assert r[p] > 0
        pivots.append(p)
    assert pivots == sorted(set(pivots))
    for a, pa in enumerate(pivots):
        for b in range(a + 1, len(H)):
            assert 0 <= H[b][pa] < H[a][pa]
    assert len(H) == smith_normal_form(M).rank_of_image


def test_sublattice_equal_examples():
    rs = build_root_system("A2")
    assert sublattice_equal(rs, [(1, 0), (1, 1)], [(1, 0), (0, 1)])
    assert not sublattice_equal(rs, [(1, 0)], [(0, 1)])
    assert not sublattice_equal(None, [(2, 0)], [(1, 0)])


def test_beta_sequences():
    rs = build_root_system("A2")
    assert beta_sequence(rs, (1,)) == [(1, 0)]
    assert beta_sequence(rs, (1, 2)) == [(1, 0), (1, 1)]
    assert beta_sequence(rs, (1, 2, 1)) == [(1, 0), (1, 1), (0, 1)]
    with pytest.raises(NotReduced):
        beta_sequence(rs, (1, 1))


def test_beta_sequence_is_inversion_set():
    for name in ["A3", "B3", "G2"]:
        rs = build_root_system(name)
        for w in group_elements(rs):
            betas = beta_sequence(rs, w.word)
            assert len(set(betas)) == len(betas)
            assert all(b in rs.positive_roots for b in betas)
            # the betas are exactly the positive roots sent negative by w^{-1}
            negatives = {b for b in rs.positive_roots if min(apply(w.inverse, b)) < 0}
            assert set(betas) == negatives


@pytest.mark.parametrize("name, word, torus, components", [
    ("A1", (1,), 0, (2,)),
    ("A2", (1, 2), 0, (3,)),
    ("A2", (1,), 1, ()),
])
def test_kernel_examples_simply_connected(name, word, torus, components):
    rs = build_root_system(name)
    report = kernel_report(character_lattice(rs, "sc"), beta_sequence(rs, word))
    assert (report.torus_dimension, report.component_group) == (torus, components)
    assert report.connected == (not components)


def test_kernel_examples_adjoint():
    rs = build_root_system("A2")
    lat = character_lattice(rs, IsogenyType.ADJOINT)
    assert kernel_report(lat, [(1, 0)]).to_json() == {"torus_dim": 1, "components": [], "connected": True}
    assert kernel_report(lat, beta_sequence(rs, (1, 2))).to_json() == \
        {"torus_dim": 0, "components": [], "connected": True}
    assert kernel_report(lat, []).to_json() == {"torus_dim": 2, "components": [], "connected": True}


@pytest.mark.parametrize("name, factors", [
    ("A1", (2,)), ("A2", (3,)), ("A3", (4,)), ("A4", (5,)),
    ("B2", (2,)), ("B3", (2,)), ("B4", (2,)), ("C2", (2,)), ("C3", (2,)), ("C4", (2,)),
    ("D4", (2, 2)), ("D5", (4,)), ("E6", (3,)), ("E7", (2,)), ("E8", ()), ("F4", ()), ("G2", ()),
])
def test_fundamental_groups(name, factors):
    rs = build_root_system(name)
    report = kernel_report(character_lattice(rs, "sc"), rs.simple_roots)
    assert report.component_group == factors
    assert report.torus_dimension == 0
    # the order of the centre is |det C|
    order = 1
    for d in factors:
        order *= d
    assert order == abs(det(rs.cartan))


@pytest.mark.parametrize("name", ["A2", "B2", "A3", "B3", "G2", "C3", "D4", "F4"])
def test_adjoint_subsets_give_tori(name):
    rs = build_root_system(name)
    lat = character_lattice(rs, "adjoint")
    for r in range(rs.rank + 1):
        for S in combinations(rs.simple_roots, r):
            report = kernel_report(lat, S)
            assert report.connected and report.torus_dimension == rs.rank - r


def test_isogeny_parse():
    assert IsogenyType.parse("SC") is IsogenyType.SIMPLY_CONNECTED
    assert IsogenyType.parse("simply-connected") is IsogenyType.SIMPLY_CONNECTED
    assert IsogenyType.parse("ad") is IsogenyType.ADJOINT
    with pytest.raises(ParseError):
        IsogenyType.parse("spin")


def test_beta_kernel_equality_examples():
    assert verify_beta_kernel_equality(build_root_system("A2"), from_word(build_root_system("A2"), (1, 2)))
    assert verify_beta_kernel_equality(build_root_system("A2"), identity(build_root_system("A2")))
    b2 = build_root_system("B2")
    assert verify_beta_kernel_equality(b2, from_word(b2, (1, 2, 1)), all_words=True)


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "C3"])
def test_beta_kernel_equality_all_words(name):
    rs = build_root_system(name)
    for w in group_elements(rs):
        if w.length <= 6:
            assert verify_beta_kernel_equality(rs, w, all_words=True)


def test_beta_kernel_equality_random_words():
    rng = random.Random(20261016)
    rs = build_root_system("D4")
    group = group_elements(rs)
    for _ in range(200):
        w = rng.choice(group)
        word = []
        x = w
        while x.length:
            i = rng.choice([i for i in range(1, rs.rank + 1) if x.has_left_descent(i)])
            word.append(i)
            x = x.left_mul(i)
        assert from_word(rs, word) == w
        assert word_kernel_equality(rs, word)
