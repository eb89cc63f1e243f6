from hypothesis import given
from hypothesis import strategies as st
import pytest

from conftest import weyl_elements
from peterson_paving.rootsys import root_system
from peterson_paving.schubert_intersect import (FixedPointSet, b5_example,
                                                diagonal_matrix_structure, format_subset,
                                                interval_fixed_points, parse_subset,
                                                peterson_intersection_fixed_points,
                                                proper_intersection_check)
from peterson_paving.weyl import (bruhat_leq, enumerate_weyl, from_word, identity,
                                  longest_element, subsets)

RANK_LE_4 = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "G2", "F4"]


def test_interval_examples():
    rs = root_system("A2")
    assert len(interval_fixed_points(rs, identity(rs), longest_element(rs))) == 6
    pts = interval_fixed_points(rs, from_word(rs, (1,)), from_word(rs, (1, 2)))
    assert pts.words() == [[1], [1, 2]]
    assert len(interval_fixed_points(rs, from_word(rs, (1, 2)), from_word(rs, (2, 1)))) == 0


@given(st.sampled_from(["A3", "B3", "G2"]).flatmap(lambda n: st.tuples(weyl_elements(n), weyl_elements(n))))
def test_interval_nonempty_iff_below(pair):
    (rs, v), (_, w) = pair
    pts = interval_fixed_points(rs, v, w)
    assert bool(len(pts)) == bruhat_leq(v, w)
    assert all(bruhat_leq(v, u) and bruhat_leq(u, w) for u in pts)


@pytest.mark.parametrize("name", RANK_LE_4)
def test_peterson_intersections(name):
    rs = root_system(name)
    labels = range(1, rs.rank + 1)
    for J in subsets(labels):
        assert peterson_intersection_fixed_points(rs, J, J).elements == (longest_element(rs, J),)
        assert proper_intersection_check(rs, J)
        for K in subsets(labels):
            if len(K) == len(J) and K != J:
                assert len(peterson_intersection_fixed_points(rs, J, K)) == 0


@pytest.mark.parametrize("name", RANK_LE_4)
def test_diagonal_structure(name):
    rs = root_system(name)
    for k in range(rs.rank + 1):
        rep = diagonal_matrix_structure(rs, k)
        assert rep.is_identity
    assert len(diagonal_matrix_structure(rs, 0).matrix) == 1


def test_empty_k_includes_everything_below():
    rs = root_system("A3")
    pts = peterson_intersection_fixed_points(rs, {1, 2, 3}, set())
    assert len(pts) == 8  # every w_L


def test_b5_pair():
    assert b5_example() == {"v_K <= w_J": False, "v_J <= w_K": False}


def test_subset_format():
    assert format_subset({3, 1}) == "1,3"
    assert parse_subset("1,3") == {1, 3}
    assert parse_subset("") == frozenset()


def test_fixed_point_set_rejects_duplicates():
    rs = root_system("A2")
    with pytest.raises(ValueError):
        FixedPointSet((identity(rs), identity(rs)))
