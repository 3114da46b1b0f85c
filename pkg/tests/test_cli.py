import json

import pytest

from opencat import jsonio
from opencat.cli import main

EDGE = {"footL": 1, "footR": 1, "graph": {"v": 2, "e": 1, "src": [0], "tgt": [1]},
        "legL": [0], "legR": [1]}
ID1 = {"footL": 1, "footR": 1, "graph": {"v": 1, "e": 0, "src": [], "tgt": []},
       "legL": [0], "legR": [0]}
ID2 = {"footL": 2, "footR": 2, "graph": {"v": 2, "e": 0, "src": [], "tgt": []},
       "legL": [0, 1], "legR": [0, 1]}
EMPTY = {"footL": 0, "footR": 0, "graph": {"v": 0, "e": 0, "src": [], "tgt": []},
         "legL": [], "legR": []}


@pytest.fixture
def files(tmp_path):
    def write(name, data):
        p = tmp_path / name
        p.write_text(jsonio.dumps(data))
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compose_two_edges_is_a_path(capsys, files):
    e = files("e.json", EDGE)
    code, out, _ = run(capsys, "compose", e, e)
    assert code == 0
    data = json.loads(out)
    assert data["graph"] == {"v": 3, "e": 2, "src": [0, 1], "tgt": [1, 2]}
    assert data["legL"] == [0] and data["legR"] == [2]
    assert out == jsonio.dumps(data)


def test_foot_mismatch_is_a_boundary_error(capsys, files):
    code, out, err = run(capsys, "compose", files("e.json", EDGE), files("i.json", ID2))
    assert code == 2 and out == ""
    diag = json.loads(err)
    assert diag["error"] == "boundary"
    assert (diag["position"], diag["footR"], diag["footL"]) == (1, 1, 2)


def test_compose_with_identity_reports_unitor(capsys, files):
    e = files("e.json", EDGE)
    code, out, err = run(capsys, "compose", e, files("i.json", ID1))
    assert code == 0
    assert out == jsonio.dumps(EDGE)
    assert json.loads(err) == {"command": "compose", "up_to_unitor": True}


def test_compose_writes_dot(capsys, files, tmp_path):
    e = files("e.json", EDGE)
    dot = tmp_path / "out.dot"
    out_json = tmp_path / "out.json"
    code, out, _ = run(capsys, "compose", e, e, "--dot", str(dot), "--out", str(out_json))
    assert code == 0 and out == ""
    assert "cluster_apex" in dot.read_text()
    assert json.loads(out_json.read_text())["graph"]["e"] == 2


def test_inline_json_and_workspace(capsys, files):
    ws = files("ws.json", {"edge": EDGE, "id": ID1})
    code, out, _ = run(capsys, "compose", "edge", json.dumps(EDGE), "--workspace", ws)
    assert code == 0 and json.loads(out)["graph"]["v"] == 3


def test_workspace_duplicate_names_are_usage_errors(capsys, tmp_path):
    p = tmp_path / "ws.json"
    p.write_text('{"a": 1, "a": 2}')
    code, _, err = run(capsys, "compose", "a", "--workspace", str(p))
    assert code == 64 and json.loads(err)["error"] == "usage"


def test_restrict(capsys, files):
    e = files("e.json", EDGE)
    ident = json.dumps({"dom": 1, "cod": 1, "map": [0]})
    code, out, _ = run(capsys, "restrict", e, "--left", ident, "--right", ident)
    assert code == 0 and json.loads(out) == EDGE
    empty = json.dumps({"dom": 0, "cod": 1, "map": []})
    code, out, _ = run(capsys, "restrict", e, "--left", empty, "--right", ident)
    assert code == 0 and json.loads(out)["footL"] == 0
    wrong = json.dumps({"dom": 1, "cod": 2, "map": [0]})
    code, _, err = run(capsys, "restrict", e, "--left", wrong, "--right", ident)
    assert code == 2 and json.loads(err)["error"] == "boundary"


def test_coproduct(capsys, files):
    e = files("e.json", EDGE)
    code, out, _ = run(capsys, "coproduct", e, e)
    data = json.loads(out)
    assert code == 0 and data["graph"]["v"] == 4 and data["legL"] == [0, 2]
    code, out, err = run(capsys, "coproduct", e, files("z.json", EMPTY))
    assert code == 0 and json.loads(out) == EDGE
    assert json.loads(err)["up_to_unitor"] is True


def test_coproduct_failures(capsys, files):
    e = files("e.json", EDGE)
    code, _, err = run(capsys, "coproduct", e, e, "--structure", "pointed")
    assert code == 3 and json.loads(err)["type"] == "NotInvertibleError"
    code, _, err = run(capsys, "coproduct", e, e, "--mode", "decorated")
    assert code == 4 and json.loads(err)["error"] == "unsupported"


def test_decorated_mode(capsys, files):
    dec = jsonio.dumps({"footL": {"n": 1}, "apex": {"n": 2}, "footR": {"n": 1},
                        "legL": {"dom": 1, "cod": 2, "map": [0]},
                        "legR": {"dom": 1, "cod": 2, "map": [1]},
                        "decoration": {"edges": [[0, 1]]}})
    p = files("d.json", json.loads(dec))
    code, out, _ = run(capsys, "compose", p, p, "--mode", "decorated")
    data = json.loads(out)
    assert code == 0 and data["apex"] == {"n": 3}
    assert data["decoration"]["edges"] == [[0, 1], [1, 2]]
    code, out, _ = run(capsys, "dot", p, "--mode", "decorated")
    assert code == 0 and "v0 -> v1" in out


def test_bad_input_file(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{oops")
    code, _, err = run(capsys, "dot", str(p))
    assert code == 2
    code, _, err = run(capsys, "dot", str(tmp_path / "missing.json"))
    assert code == 64


@pytest.mark.parametrize("argv", [[], ["check"], ["check", "bogus"], ["frobnicate"],
                                  ["check", "--mutant", "nope"], ["compose"]])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 64


def test_check_mutant_exits_with_structure_failure(capsys):
    code, out, _ = run(capsys, "check", "--mutant", "non-natural-alpha")
    report = json.loads(out)
    assert code == 3 and report["ok"] is False
    assert report["laws"][0]["witness"]


def test_check_small_suite(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, _, err = run(capsys, "check", "cocartesian", "--max-foot", "1", "--max-vertices", "1",
                       "--out", str(out_file))
    report = json.loads(out_file.read_text())
    assert code == 0 and report["ok"] is True
    assert all(law["status"] == "pass" for law in report["laws"])
    assert "PASS" in err
