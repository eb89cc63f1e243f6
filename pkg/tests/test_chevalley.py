from hypothesis import given
from hypothesis import strategies as st
import pytest

from conftest import all_types
from peterson_paving.chevalley import (ChevalleyTable, antisymmetry_violations, expected_magnitude,
                                       jacobi_violations, load_table, save_table,
                                       simply_laced_first_rule_holds,
                                       simply_laced_second_rule_violations, structure_constants,
                                       verify_matrix_oracle)
from peterson_paving.rootsys import root_system


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "A4", "B4", "C4", "B2"])
def test_matrix_oracle(name):
    rep = verify_matrix_oracle(root_system(name))
    assert rep.pairs_checked > 0
    assert rep.ok, rep


def test_matrix_oracle_rejects_exceptional():
    with pytest.raises(ValueError):
        verify_matrix_oracle(root_system("G2"))


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "B3", "C3", "D4", "F4"])
def test_jacobi(name):
    t = structure_constants(root_system(name))
    assert jacobi_violations(t) == []
    assert antisymmetry_violations(t) == []


def test_jacobi_catches_a_flipped_sign():
    t = structure_constants(root_system("B3"))
    (a, b), v = next(iter(sorted(t.table.items())))
    broken = dict(t.table)
    broken[(a, b)] = -v
    broken[(b, a)] = v
    assert jacobi_violations(ChevalleyTable(t.rs, broken), limit=1)


@given(all_types, st.data())
def test_pairs(name, data):
    rs = root_system(name)
    t = structure_constants(rs)
    n = len(rs.roots)
    a = data.draw(st.integers(0, n - 1))
    b = data.draw(st.integers(0, n - 1))
    s = rs.add(a, b)
    if s is None:
        assert t.m(a, b) == 0
        return
    assert t.m(a, b) != 0
    assert t.m(a, b) == -t.m(b, a)
    assert abs(t.m(a, b)) == expected_magnitude(rs, a, b)
    # sign flips under negating both roots
    assert t.m(rs.negate(a), rs.negate(b)) == -t.m(a, b)


def test_extraspecial_positive():
    rs = root_system("E7")
    t = structure_constants(rs)
    for g in range(rs.n_positive):
        if rs.simple_index(g) is not None:
            continue
        i = min(j for j, s in enumerate(rs.simple) if (d := rs.sub(g, s)) is not None and d < rs.n_positive)
        assert t.m(rs.simple[i], rs.sub(g, rs.simple[i])) > 0


@pytest.mark.parametrize("name", ["A5", "D5", "E6", "E7", "E8"])
def test_simply_laced_rules(name):
    t = structure_constants(root_system(name))
    assert simply_laced_first_rule_holds(t)
    assert simply_laced_second_rule_violations(t) == []


def test_roundtrip(tmp_path):
    rs = root_system("F4")
    t = structure_constants(rs)
    path = tmp_path / "f4.txt"
    save_table(t, path)
    assert load_table(rs, path).table == t.table
    text = path.read_text().splitlines()
    text[-1] = text[-1].rsplit(" ", 1)[0] + " 7"
    path.write_text("\n".join(text) + "\n")
    with pytest.raises(Exception):
        load_table(rs, path)
