from hypothesis import given
from hypothesis import strategies as st
import pytest

from conftest import all_types
from peterson_paving.rootsys import (InvalidLieType, InvalidRoot, LieType, cartan_matrix,
                                     expected_positive_count, format_root, parse_root,
                                     root_system)

COUNTS = {"A4": (10, 4), "B3": (9, 5), "C3": (9, 5), "D4": (12, 5), "G2": (6, 5),
          "F4": (24, 11), "E6": (36, 11), "E7": (63, 17), "E8": (120, 29)}


@pytest.mark.parametrize("name,expected", COUNTS.items())
def test_counts_and_heights(name, expected):
    rs = root_system(name)
    assert (rs.n_positive, rs.max_height) == expected
    assert rs.n_positive == expected_positive_count(rs.lie_type)


def test_g2_table():
    rs = root_system("G2")
    assert [format_root(r) for r in rs.positive] == ["10", "01", "11", "21", "31", "32"]
    assert rs.highest_root == (3, 2)
    # alpha_1 short
    assert rs.norm2((1, 0)) < rs.norm2((0, 1))


def test_cartan_convention():
    # a_ij = <alpha_i^vee, alpha_j>; B2 with alpha_2 short
    assert cartan_matrix(LieType("B", 2)) == ((2, -1), (-2, 2))
    assert cartan_matrix(LieType("C", 2)) == ((2, -2), (-1, 2))


def test_reflection_g2():
    rs = root_system("G2")
    assert rs.simple_reflection(0, (0, 1)) == (3, 1)
    assert rs.simple_reflection(1, (1, 0)) == (1, 1)


def test_parse_errors():
    with pytest.raises(InvalidLieType):
        LieType.parse("E9")
    with pytest.raises(InvalidLieType):
        LieType.parse("B", 1)
    with pytest.raises(InvalidRoot):
        parse_root("12", 3)
    with pytest.raises(InvalidRoot):
        root_system("A2").index((1, -1))


def test_signed_strings_roundtrip():
    assert parse_root("-011", 3) == (0, -1, -1)
    assert format_root((0, -1, -1)) == "-011"


@given(all_types, st.data())
def test_roots_closed_under_simple_reflections(name, data):
    rs = root_system(name)
    k = data.draw(st.integers(0, len(rs.roots) - 1))
    i = data.draw(st.integers(0, rs.rank - 1))
    assert rs.is_root(rs.simple_reflection(i, rs.roots[k]))
    assert rs.simple_reflection(i, rs.simple_reflection(i, rs.roots[k])) == rs.roots[k]


@given(all_types, st.data())
def test_storage_order_and_negation(name, data):
    rs = root_system(name)
    k = data.draw(st.integers(0, rs.n_positive - 1))
    assert rs.negate(rs.negate(k)) == k
    assert rs.roots[rs.negate(k)] == tuple(-c for c in rs.roots[k])
    if k:
        assert rs.height(rs.roots[k - 1]) <= rs.height(rs.roots[k])


@given(all_types, st.data())
def test_norms_are_reflection_invariant(name, data):
    rs = root_system(name)
    k = data.draw(st.integers(0, len(rs.roots) - 1))
    i = data.draw(st.integers(0, rs.rank - 1))
    assert rs.norm2(rs.roots[k]) == rs.norm2(rs.simple_reflection(i, rs.roots[k]))
