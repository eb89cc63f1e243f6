import json

import pytest

from peterson_paving import billey_kumar as bk
from peterson_paving.cli import run
from peterson_paving.rootsys import root_system
from peterson_paving.weyl import from_word, longest_element


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_roots_by_height(capsys):
    code, out, _ = call(capsys, "roots", "--type", "G2", "--by-height")
    assert code == 0
    assert "6 positive roots in 5 height groups" in out


def test_type_and_rank(capsys):
    code, out, _ = call(capsys, "roots", "--type", "A", "--rank", "5", "--json")
    data = json.loads(out)
    assert code == 0 and data["payload"]["n_positive"] == 15
    assert data["schema_version"] == 1 and data["status"] == "ok"


def test_kumar_f4(capsys):
    code, out, _ = call(capsys, "kumar", "--type", "F4", "--J", "1,2,3,4")
    assert code == 0
    assert out.startswith("singular")
    assert "billey" in out and "kumar" in out


def test_appendix_e6(capsys):
    code, out, _ = call(capsys, "appendix", "--type", "E6", "--verify")
    assert code == 0
    assert "FAIL" not in out and "7/7 pass" in out


def test_billey_is_thin_adapter(capsys):
    code, out, _ = call(capsys, "billey", "--type", "G2", "--v", "2,1", "--json")
    rs = root_system("G2")
    direct = bk.billey(rs, from_word(rs, (2, 1)), longest_element(rs))
    assert json.loads(out)["payload"]["polynomial"] == direct.serialize()


def test_deterministic_json(capsys):
    argv = ("peterson", "--type", "B3", "--smooth", "--kumar", "--json")
    a = call(capsys, *argv)[1]
    b = call(capsys, *argv)[1]
    assert a == b


@pytest.mark.parametrize("argv", [
    ("blocks", "--type", "E8", "--J", "1,3,4,6,7,8"),
    ("cells", "--type", "A3", "--w", "1,2"),
    ("cells", "--type", "B3", "--full-flag"),
    ("oracle", "--type", "G2", "--peterson"),
    ("intersect", "--type", "A3", "--diagonal", "2"),
    ("intersect", "--type", "B3", "--J", "1,2", "--K", "1,2"),
    ("weyl", "--type", "A3", "--word", "1,2,1", "--compare", "2", "--all-words"),
])
def test_subcommands_succeed(capsys, argv):
    assert call(capsys, *argv)[0] == 0
    assert call(capsys, *argv, "--json")[0] == 0


def test_hessenberg_file(capsys, tmp_path):
    path = tmp_path / "h.txt"
    path.write_text("-100\n-010\n-001\n-110\n")
    code, out, _ = call(capsys, "cells", "--type", "A3", "--hessenberg-file", str(path), "--json")
    assert code == 0
    assert sum(json.loads(out)["payload"]["betti"]) > 8


def test_exit_codes(capsys, tmp_path):
    assert call(capsys, "nope")[0] == 2
    assert call(capsys, "roots")[0] == 2
    assert call(capsys, "roots", "--type", "Q7")[0] == 1
    assert call(capsys, "kumar", "--type", "A2", "--v", "1,2", "--w", "1")[0] == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("-110\n")
    code, out, err = call(capsys, "cells", "--type", "A3", "--hessenberg-file", str(bad), "--json")
    assert code == 1
    assert json.loads(out)["status"] == "error" and err


def test_progress_goes_to_stderr(capsys):
    code, out, err = call(capsys, "oracle", "--type", "B3", "--full-flag", "--json")
    assert code == 0
    json.loads(out)  # stdout stays machine-readable
