import json
import subprocess
import sys

import pytest

from glindex.cli import run
from glindex.clutter import catalog


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def write(tmp_path, name, payload):
    p = tmp_path / name
    p.write_text(payload if isinstance(payload, str) else json.dumps(payload))
    return str(p)


def test_catalog(capsys):
    code, out, _ = call(capsys, "catalog")
    assert code == 0 and "D1_6" in out["names"]
    code, out, _ = call(capsys, "catalog", "--name", "D1_6")
    assert out["value"] == catalog()["D1_6"].to_json()


def test_betti_on_complement_of_bipyramid(capsys, tmp_path):
    path = write(tmp_path, "c.json", catalog()["B"].complement().to_json())
    code, out, _ = call(capsys, "betti", path)
    assert code == 0
    assert [1, 5, 1] in out["graded"]


def test_betti_accepts_ideal_json(capsys, tmp_path):
    path = write(tmp_path, "i.json", {"vars": 2, "generators": [[1, 0], [0, 1]]})
    code, out, _ = call(capsys, "betti", path, "--field", "2")
    assert code == 0 and out["graded"] == [[0, 1, 2], [1, 2, 1]]


def test_non_minimal_ideal_warns_on_stderr(capsys, tmp_path):
    path = write(tmp_path, "i.json", {"vars": 2, "generators": [[1, 0], [2, 0]]})
    code, out, err = call(capsys, "index", path)
    assert code == 0 and "minimalized" in err


def test_classify_sturmfels_clutter(capsys):
    code, out, _ = call(capsys, "classify", "D1_6")
    assert out == {"complement_C_free": True, "D_free": False, "index_gt1": True, "index_sq_gt1": False}


def test_index_and_linpres(capsys):
    assert call(capsys, "index", "D1_6")[1]["index"] == "infinity"
    assert call(capsys, "index", "D1_6", "--power", "2")[1]["index"] == 1
    code, out, _ = call(capsys, "linpres", "D1_6", "--power", "2")
    assert out["linearly_presented"] is False and out["witness"]["path"] is None


def test_check_free(capsys):
    code, out, _ = call(capsys, "check-free", "B")
    assert out["free"] is False and out["pattern"] == "B"
    code, out, _ = call(capsys, "check-free", "D1_8", "--family", "D")
    assert out["free"] is False
    code, out, _ = call(capsys, "check-free", "B", "--complement")
    assert out["free"] is True


@pytest.mark.parametrize("payload", [
    "{not json", "[1, 2]", {"n": 3}, {"vars": 2, "generators": [[1]]},
    {"n": 3, "d": 3, "circuits": [[1, 2, 9]]},
    {"n": 3, "d": 3, "circuits": [], "vars": 3, "generators": []},
])
def test_malformed_inputs_exit_2(capsys, tmp_path, payload):
    code, out, err = call(capsys, "betti", write(tmp_path, "bad.json", payload))
    assert code == 2 and out is None and err.startswith("error:")


def test_missing_file_exit_2(capsys):
    assert call(capsys, "betti", "/nonexistent/file.json")[0] == 2


def test_ideal_where_clutter_needed_exit_2(capsys):
    assert call(capsys, "classify", "conca")[0] == 2


@pytest.mark.parametrize("argv", [
    ["enumerate", "--d", "4", "--k", "1", "--n", "3"],
    ["kappa", "--d", "7"],
    ["betti", "B", "--field", "4"],
    ["index", "conca", "--power", "0"],
    ["check-free", "D1_6", "--family", "C", "--jobs", "0"],
])
def test_unsupported_exit_3(capsys, argv):
    assert call(capsys, *argv)[0] == 3


def test_non_equigenerated_index_exit_3(capsys, tmp_path):
    path = write(tmp_path, "i.json", {"vars": 3, "generators": [[1, 0, 0], [0, 1, 1]]})
    assert call(capsys, "index", path)[0] == 3


def test_enumerate_small(capsys):
    code, out, _ = call(capsys, "enumerate", "--d", "2", "--k", "1", "--n", "4", "--reps")
    assert code == 0 and out["count"] == 1 and len(out["reps"]) == 1


def test_census(capsys):
    code, out, _ = call(capsys, "census-105")
    assert out["cases"] == 105


def test_console_script_is_byte_stable():
    cmd = [sys.executable, "-m", "glindex.cli", "betti", "D1_6"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.endswith(b"\n")
    assert json.dumps(json.loads(a), sort_keys=True).encode() + b"\n" == a
