import itertools
import random
from fractions import Fraction
from math import comb, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from surgery_sieve.errors import DomainError
from surgery_sieve.polyalg import (
    IntPolynomial,
    alexander_from_seifert,
    bareiss_det,
    conway_determinant,
    conway_double_twist,
    conway_from_alexander,
    conway_from_seifert,
    conway_torus_link,
    conway_torus_link_skein,
    det_claim_Q,
    det_oracle,
    det_pretzel,
    elem_sym,
    elem_sym_all,
    pretzel_genus,
    pretzel_template,
    seifert_pretzel,
    tridiagonal_det,
)

pretzel_ks = st.integers(1, 3).flatmap(lambda g: st.lists(st.integers(0, 4), min_size=2 * g + 1, max_size=2 * g + 1))


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        total += (-1) ** inv * prod(m[i][perm[i]] for i in range(n))
    return total


def test_elem_sym_examples():
    assert elem_sym(2, [1, 2, 3]) == 11
    assert elem_sym(0, []) == 1
    assert elem_sym(2, [1, 2, 3, 4]) == 35
    assert elem_sym(5, [1, 2]) == 0
    with pytest.raises(DomainError):
        elem_sym(-1, [1])


@given(st.lists(st.integers(-5, 5), max_size=7))
def test_elem_sym_matches_combinations(ks):
    s = elem_sym_all(ks)
    for n in range(len(ks) + 1):
        assert s[n] == sum(prod(c) for c in itertools.combinations(ks, n))


def test_polynomial_arithmetic():
    z = IntPolynomial([0, 1])
    p = (IntPolynomial([1]) + z) * (IntPolynomial([1]) - z)
    assert p == IntPolynomial([1, 0, -1])
    assert p(3) == -8 and p.degree == 2
    assert str(IntPolynomial([1, 0, 2])) == "1 + 2z^2"
    assert IntPolynomial([0, 0]).degree == -1 or IntPolynomial([0, 0]) == IntPolynomial()


def test_torus_link_examples():
    assert conway_torus_link(3) == IntPolynomial([1, 0, 1])
    assert conway_torus_link(4) == IntPolynomial([0, 2, 0, 1])
    assert conway_torus_link(2) == IntPolynomial([0, 1])
    with pytest.raises(DomainError):
        conway_torus_link(0)


@pytest.mark.parametrize("n", range(1, 30))
def test_torus_link_closed_form_matches_skein(n):
    assert conway_torus_link(n) == conway_torus_link_skein(n)


def test_double_twist_examples():
    assert conway_double_twist(1, 1) == IntPolynomial([1, 0, 2])
    assert conway_double_twist(0, 2) == IntPolynomial([1, 0, 3, 0, 1])
    assert conway_double_twist(1, 4)[4] == 25


@pytest.mark.parametrize("g", range(1, 6))
@pytest.mark.parametrize("k", range(0, 5))
def test_double_twist_matches_seifert(k, g):
    ks = [k] + [0] * (2 * g)
    assert conway_double_twist(k, g) == conway_from_seifert(seifert_pretzel(ks))
    c = conway_double_twist(k, g)
    assert c[2] == comb(g + 1, 2) + k * g
    assert c[4] == comb(g + 2, 4) + k * comb(g + 1, 3)


def test_seifert_examples():
    assert seifert_pretzel([0, 0, 0]) == [[-1, 0], [-1, -1]]
    assert seifert_pretzel([1, 0, 0]) == [[-2, 0], [-1, -1]]
    assert seifert_pretzel([1, 1, 1]) == [[-3, -1], [-2, -3]]


def test_seifert_form_gives_knot():
    # det(A - A^T) = 1 for a knot Seifert matrix
    for ks in ([0, 0, 0], [1, 2, 0], [3, 0, 1, 2, 0]):
        a = seifert_pretzel(ks)
        at = [list(c) for c in zip(*a)]
        assert bareiss_det([[x - y for x, y in zip(r, s)] for r, s in zip(a, at)]) == 1


def test_det_examples():
    assert det_pretzel([0, 0, 0]) == 3
    assert det_pretzel([1, 0, 0]) == 7
    assert det_pretzel([1, 1, 1]) == 27
    assert det_oracle(seifert_pretzel([0, 0, 0])) == 3
    assert det_oracle(seifert_pretzel([1, 0, 0, 0, 0])) == det_pretzel([1, 0, 0, 0, 0])
    assert det_oracle([[0, 0], [0, 0]]) == 0


@given(pretzel_ks)
def test_det_pretzel_three_ways(ks):
    ps = [2 * k + 1 for k in ks]
    # P(-p_1, ..., -p_m) has determinant sum over i of prod_{j != i} p_j
    direct = sum(prod(ps[:i] + ps[i + 1:]) for i in range(len(ps)))
    assert det_pretzel(ks) == direct == det_oracle(seifert_pretzel(ks))


@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_matches_leibniz(m):
    assert bareiss_det(m) == leibniz_det(m)


def test_bareiss_edge_cases():
    assert bareiss_det([]) == 1
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    with pytest.raises(DomainError):
        bareiss_det([[1, 2]])


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6), st.data())
def test_tridiagonal_matches_bareiss(diag, data):
    off = data.draw(st.lists(st.integers(-5, 5), min_size=len(diag) - 1, max_size=len(diag) - 1))
    n = len(diag)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = diag[i]
        if i + 1 < n:
            m[i][i + 1] = m[i + 1][i] = off[i]
    assert tridiagonal_det(diag, off) == bareiss_det(m)


def test_det_q_examples():
    assert det_claim_Q([1, 1]) == 2
    assert det_claim_Q([3, 1, 1]) == 7
    assert det_claim_Q([3, 3, 3]) == 27


@given(st.lists(st.integers(0, 6).map(lambda k: 2 * k + 1), min_size=2, max_size=8))
def test_det_q_against_elem_sym(ps):
    assert det_claim_Q(ps) == elem_sym(len(ps) - 1, ps)


def test_conway_from_seifert_examples():
    assert conway_from_seifert(seifert_pretzel([0, 0, 0])) == IntPolynomial([1, 0, 1])
    assert conway_from_seifert(seifert_pretzel([1, 0, 0])) == IntPolynomial([1, 0, 2])
    c = conway_from_seifert(seifert_pretzel([1] + [0] * 8))
    assert (c[2], c[4]) == (14, 25)


def test_conway_from_seifert_rejects_non_knots():
    with pytest.raises(DomainError):
        conway_from_seifert([[1]])
    with pytest.raises(DomainError):
        conway_from_seifert([[0, 0], [0, 0]])


def test_figure_eight():
    # V = [[1, 1], [0, -1]] is a Seifert matrix for 4_1
    c = conway_from_seifert([[1, 1], [0, -1]])
    assert c == IntPolynomial([1, 0, -1]) and conway_determinant(c) == 5


@given(pretzel_ks)
def test_alexander_palindromic_and_determinant(ks):
    a = seifert_pretzel(ks)
    alex = alexander_from_seifert(a)
    g = pretzel_genus(ks)
    alex += [0] * (2 * g + 1 - len(alex))
    assert alex == alex[::-1]
    c = conway_from_seifert(a)
    assert conway_determinant(c) == det_pretzel(ks)
    # Delta(1) = 1: Conway constant term
    assert c[0] == 1


def test_conway_from_alexander_trefoil():
    # t - 1 + t^-1
    assert conway_from_alexander([-1, 1]) == IntPolynomial([1, 0, 1])


def test_conway_determinant_rejects_links():
    with pytest.raises(DomainError):
        conway_determinant(IntPolynomial([0, 1]))


def test_template_shape():
    a = pretzel_template([2, 1, 3])
    assert a == [[4, 1], [2, 5]]
    with pytest.raises(DomainError):
        pretzel_template([1, 2])
    with pytest.raises(DomainError):
        pretzel_genus([1, -1, 0])


def test_random_large_pretzel_consistency():
    rng = random.Random(7)
    for _ in range(20):
        g = rng.randint(4, 6)
        ks = [rng.randint(0, 5) for _ in range(2 * g + 1)]
        c = conway_from_seifert(seifert_pretzel(ks))
        s = elem_sym_all(ks)
        assert c[2] == Fraction(g * (g + 1), 2) + g * s[1] + s[2]
        assert conway_determinant(c) == det_pretzel(ks)
