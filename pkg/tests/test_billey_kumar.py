from collections import Counter
from itertools import combinations

from hypothesis import given
from hypothesis import strategies as st
import pytest

from conftest import weyl_elements
from peterson_paving.billey_kumar import (DynkinBlock, NotBelow, RootPolynomial, WordTooLong,
                                          billey, billey_naive, blocks, classically_embeddable,
                                          coefficient, kumar_rhs, kumar_roots, kumar_smooth,
                                          parabolic_kumar_smooth, parabolic_pair,
                                          peterson_smooth, word_roots)
from peterson_paving.rootsys import root_system
from peterson_paving.weyl import (all_reduced_words, bruhat_leq, coxeter_decreasing,
                                  coxeter_increasing, enumerate_weyl, from_word, identity,
                                  longest_element, reflection, subsets)


def lin(*root):
    return RootPolynomial.linear(root)


def product(rs, roots):
    p = RootPolynomial.one(rs.rank)
    for r in roots:
        p = p.times_root(r)
    return p


# -- Billey's formula ---------------------------------------------------------


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_dp_matches_naive_everywhere(name):
    rs = root_system(name)
    W = enumerate_weyl(rs)
    for w in W:
        word = w.normal_word()
        for v in W:
            assert billey(rs, v, w) == billey_naive(rs, v, word)


@pytest.mark.parametrize("name", ["A3", "B2", "G2"])
def test_word_independence(name):
    rs = root_system(name)
    W = enumerate_weyl(rs)
    for w in W:
        values = {v: billey(rs, v, w) for v in W}
        for word in all_reduced_words(w):
            for v in W:
                assert billey(rs, v, w, word) == values[v]


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "C3"])
def test_support_positivity_degree(name):
    rs = root_system(name)
    W = enumerate_weyl(rs)
    for w in W:
        for v in W:
            p = billey(rs, v, w)
            assert bool(p) == bruhat_leq(v, w)
            assert all(c > 0 for c in p.terms.values())
            if p:
                assert p.is_homogeneous() and p.degree() == v.length()


def test_single_letter():
    for name in ["A3", "B3", "G2", "F4"]:
        rs = root_system(name)
        for i in range(1, rs.rank + 1):
            s = from_word(rs, (i,))
            assert billey(rs, s, s) == lin(*rs.roots[rs.simple[i - 1]])


def test_identity_gives_one():
    rs = root_system("B3")
    w = longest_element(rs)
    assert billey(rs, identity(rs), w) == RootPolynomial.one(3)
    assert billey_naive(rs, identity(rs), (1, 2)) == RootPolynomial.one(3)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_type_a_coxeter_at_itself(n):
    rs = root_system(f"A{n}")
    v = coxeter_decreasing(rs, range(1, n + 1))
    above_last = [r for r in rs.positive if r[-1] > 0]
    assert billey(rs, v, v) == product(rs, above_last)


def test_g2_subword_terms():
    # our alpha_1 is short, so the printed labels swap: printed s_1 s_2 is our s_2 s_1
    rs = root_system("G2")
    word = (2, 1, 2, 1, 2, 1)
    betas = word_roots(rs, word)
    v = from_word(rs, (2, 1))
    chosen = {pos for pos in combinations(range(6), 2)
              if from_word(rs, [word[p] for p in pos]) == v}
    assert (2, 3) in chosen and (0, 1) in chosen
    assert {betas[2], betas[3]} == {(3, 2), (2, 1)}
    assert {betas[0], betas[1]} == {(0, 1), (1, 1)}
    total = billey(rs, v, longest_element(rs))
    assert total == billey_naive(rs, v, word)
    assert total.terms == {(2, 0): 12, (1, 1): 14, (0, 2): 4}


def test_naive_cap():
    rs = root_system("F4")
    with pytest.raises(WordTooLong):
        billey_naive(rs, identity(rs), longest_element(rs).normal_word())


def test_serialization():
    p = RootPolynomial(2, {(2, 0): 12, (1, 1): 14, (0, 2): 4})
    assert p.serialize() == ["12:2,0", "14:1,1", "4:0,2"]
    assert RootPolynomial.deserialize(2, p.serialize()) == p
    assert p.pretty() == "12*a1^2 + 14*a1*a2 + 4*a2^2"
    assert coefficient(RootPolynomial.zero(3), (1, 1, 1)) == 0


@given(st.sampled_from(["A3", "B3", "C3", "G2"]).flatmap(lambda n: st.tuples(weyl_elements(n), weyl_elements(n))))
def test_random_pairs(pair):
    (rs, v), (_, w) = pair
    p = billey(rs, v, w)
    assert bool(p) == bruhat_leq(v, w)
    assert all(c > 0 for c in p.terms.values())
    if w.length() <= 9:
        assert p == billey_naive(rs, v, w.normal_word())


@given(weyl_elements("B3"))
def test_top_localization_is_inversion_product(rw):
    # p_w(w) is the single full subword: the product of the roots of w^{-1}'s inversions
    rs, w = rw
    roots = word_roots(rs, w.normal_word())
    assert billey(rs, w, w) == product(rs, roots)
    assert Counter(roots) == Counter(rs.roots[k] for k in w.inversion_set())


# -- Kumar's criterion --------------------------------------------------------


def test_kumar_a1():
    rs = root_system("A1")
    s = from_word(rs, (1,))
    assert kumar_rhs(rs, s, s) == lin(1)
    assert kumar_smooth(rs, s, s)


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_v_equals_w_is_smooth(name):
    rs = root_system(name)
    for w in enumerate_weyl(rs):
        assert kumar_smooth(rs, w, w)


def test_kumar_needs_bruhat():
    rs = root_system("A2")
    with pytest.raises(NotBelow):
        kumar_rhs(rs, from_word(rs, (1, 2)), from_word(rs, (1,)))


def test_kumar_examples():
    g2 = root_system("G2")
    assert not kumar_smooth(g2, from_word(g2, (2, 1)), longest_element(g2))
    a2 = root_system("A2")
    assert kumar_smooth(a2, from_word(a2, (2, 1)), longest_element(a2))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_type_a_kumar_factors(n):
    rs = root_system(f"A{n}")
    v = coxeter_decreasing(rs, range(1, n + 1))
    w0 = longest_element(rs)
    factors = {rs.roots[k] for k in kumar_roots(rs, v, w0)}
    assert factors == {r for r in rs.positive if r[-1] > 0}
    # the complement is the A_{n-1} system on the first n - 1 nodes
    assert rs.n_positive - len(factors) == n * (n - 1) // 2
    assert kumar_rhs(rs, v, w0) == billey(rs, v, w0)


@pytest.mark.parametrize("name", ["A3", "A4", "B3", "B4", "C3", "C4", "D4", "D5"])
def test_reformulated_criterion_full_diagram(name):
    rs = root_system(name)
    v = coxeter_decreasing(rs, range(1, rs.rank + 1))
    w0 = longest_element(rs)
    direct = set(kumar_roots(rs, v, w0))
    other = {k for k in range(rs.n_positive) if not bruhat_leq(reflection(rs, rs.roots[k]), v * w0)}
    assert direct == other


@given(st.sampled_from(["A3", "B3", "G2"]).flatmap(lambda n: st.tuples(weyl_elements(n), weyl_elements(n))))
def test_kumar_degree_match(pair):
    (rs, v), (_, w) = pair
    if not bruhat_leq(v, w):
        return
    if kumar_smooth(rs, v, w):
        assert len(kumar_roots(rs, v, w)) == v.length()


# -- blocks -------------------------------------------------------------------


def test_blocks_examples():
    e8 = root_system("E8")
    assert [sorted(b.vertices) for b in blocks(e8, {1, 3, 4, 6, 7, 8})] == [[1, 3, 4], [6, 7, 8]]
    assert len(blocks(e8, {5})) == 1
    assert blocks(e8, set()) == []


def _block(rs, J):
    (b,) = blocks(rs, J)
    return b


def test_classically_embeddable_shapes():
    f4, e6, e8, g2 = (root_system(n) for n in ("F4", "E6", "E8", "G2"))
    assert not classically_embeddable(_block(f4, {1, 2, 3, 4}))
    for J in ({1, 2, 3}, {2, 3, 4}, {2, 3}, {1, 2}, {3, 4}):
        assert classically_embeddable(_block(f4, J))
    assert not classically_embeddable(_block(e6, {1, 2, 3, 4, 5, 6}))
    assert classically_embeddable(_block(e6, {1, 3, 4, 5, 6}))
    assert not classically_embeddable(_block(e8, {1, 2, 3, 4, 5, 6}))
    assert classically_embeddable(_block(e8, {2, 3, 4, 5}))
    assert not classically_embeddable(_block(g2, {1, 2}))
    for name in ("A5", "B5", "C5", "D5", "D4"):
        rs = root_system(name)
        assert classically_embeddable(_block(rs, set(range(1, rs.rank + 1))))


def test_disconnected_block_rejected():
    with pytest.raises(ValueError):
        DynkinBlock(frozenset({1, 3}), frozenset())


def test_peterson_smooth_examples():
    for name in ("A4", "B4", "C4", "D4"):
        rs = root_system(name)
        assert all(peterson_smooth(rs, J) for J in subsets(range(1, rs.rank + 1)))
    assert not peterson_smooth(root_system("G2"), {1, 2})
    assert not peterson_smooth(root_system("E8"), {1, 2, 3, 4, 5, 6, 8})


@pytest.mark.parametrize("name", ["A4", "B4", "C4", "D4", "G2", "F4", "B5", "D5"])
def test_classification_matches_kumar(name):
    rs = root_system(name)
    for J in subsets(range(1, rs.rank + 1)):
        for increasing in (False, True):
            assert parabolic_kumar_smooth(rs, J, increasing) == peterson_smooth(rs, J), sorted(J)


def _palindromic(rs, v):
    y = longest_element(rs) * v
    counts = Counter(u.length() for u in enumerate_weyl(rs) if bruhat_leq(u, y))
    seq = [counts[i] for i in range(y.length() + 1)]
    return seq == seq[::-1]


@pytest.mark.parametrize("name", ["A3", "A4", "D4"])
def test_coxeter_orientation_against_rank_symmetry(name):
    # simply laced: X^v smooth at w0 iff the interval [e, w0 v] is rank-symmetric
    from itertools import permutations
    rs = root_system(name)
    w0 = longest_element(rs)
    seen = set()
    for word in permutations(range(1, rs.rank + 1)):
        v = from_word(rs, word)
        if v in seen:
            continue
        seen.add(v)
        assert kumar_smooth(rs, v, w0) == _palindromic(rs, v)


def test_d5_block_inside_e6_is_singular():
    # the shape is classical but the inherited Coxeter word is a singular orientation
    e6 = root_system("E6")
    J = {1, 2, 3, 4, 5}
    assert peterson_smooth(e6, J)
    sub, v, w = parabolic_pair(e6, J)
    assert not kumar_smooth(sub, v, w)
    assert not _palindromic(sub, v)
    d5 = root_system("D5")
    assert not kumar_smooth(d5, from_word(d5, (4, 3, 2, 5, 1)), longest_element(d5))
    assert kumar_smooth(d5, coxeter_decreasing(d5, range(1, 6)), longest_element(d5))


def test_g2_coefficient():
    rs = root_system("G2")
    p = billey(rs, from_word(rs, (2, 1)), longest_element(rs))
    assert coefficient(p, (0, 2)) == 4
    # no product of two distinct G2 roots reaches 3 on the long simple root squared
    best = max(a[1] * b[1] for a, b in combinations(rs.positive, 2))
    assert best == 2


@pytest.mark.parametrize("name,var,value", [("F4", 0, 10), ("E6", 0, 12), ("E7", 6, 24), ("E8", 7, 1188)])
def test_exceptional_coefficients(name, var, value):
    rs = root_system(name)
    n = rs.rank
    exps = [0] * n
    exps[var] = n
    p = billey(rs, coxeter_increasing(rs, range(1, n + 1)), longest_element(rs))
    assert coefficient(p, exps) == value
