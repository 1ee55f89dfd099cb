import json
import subprocess
import sys

import numpy as np
import pytest

from lubargmann.cli import main
from lubargmann.stateio import DocumentError, StateDocument, load_documents, parse_document
from lubargmann.states import random_density, werner


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def gen(capsys, tmp_path, name, *argv):
    code, out, _ = run(capsys, "gen", *argv)
    assert code == 0
    path = tmp_path / name
    path.write_text(out)
    return str(path)


def test_gen_werner_zero(capsys, tmp_path):
    path = gen(capsys, tmp_path, "w0.json", "werner", "--w", "0")
    (doc,) = load_documents(open(path).read())
    assert np.allclose(doc.rho, np.eye(4) / 4)


def test_gen_random_is_deterministic(capsys):
    _, a, _ = run(capsys, "gen", "random", "--seed", "7")
    _, b, _ = run(capsys, "gen", "random", "--seed", "7")
    _, c, _ = run(capsys, "gen", "random", "--seed", "8")
    assert a == b != c


def test_round_trip_full_precision():
    rho = random_density(11)
    doc = StateDocument(rho, "x")
    (back,) = load_documents(doc.dumps())
    assert np.array_equal(back.rho, rho)
    (back,) = load_documents(doc.dumps(bloch=True))
    assert np.allclose(back.rho, rho, atol=1e-15)


def test_invariants_report(capsys, tmp_path):
    path = gen(capsys, tmp_path, "w.json", "werner", "--w", "0.5")
    code, out, _ = run(capsys, "invariants", path, "--family", "B")
    rep = json.loads(out)
    assert code == 0 and set(rep) == {"label", "B"}
    assert abs(rep["B"][3]["re"] - 0.4375) < 1e-14
    assert set(rep["B"][12]) == {"re", "im"}

    path = gen(capsys, tmp_path, "m.json", "werner", "--w", "0")
    code, out, _ = run(capsys, "invariants", path)
    rep = json.loads(out)
    assert set(rep) == {"label", "B", "L", "I"}
    assert np.allclose(rep["L"], 0)


def test_malformed_input(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "invariants", str(bad))
    assert code == 2 and "malformed JSON" in err
    code, _, err = run(capsys, "invariants", str(tmp_path / "missing.json"))
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "obj",
    [
        [],
        {"label": "x"},
        {"matrix": [[1]]},
        {"matrix": [[{"re": 1}] * 4] * 4},
        {"bloch": {"a": [0, 0], "b": [0, 0, 0], "C": np.zeros((3, 3)).tolist()}},
        {"bloch": {"a": [0, 0, 0], "b": [0, 0, 0]}},
        {"matrix": [[{"re": 1, "im": 0}] * 4] * 4},
    ],
)
def test_document_errors(obj):
    with pytest.raises(DocumentError):
        if isinstance(obj, list):
            load_documents(json.dumps(obj))
        else:
            parse_document(obj)


def test_both_representations_rejected():
    doc = StateDocument(werner(0.2)).to_json()
    doc["bloch"] = {"a": [0, 0, 0], "b": [0, 0, 0], "C": np.zeros((3, 3)).tolist()}
    with pytest.raises(DocumentError):
        parse_document(doc)


def test_bloch_document(capsys, tmp_path):
    path = tmp_path / "b.json"
    path.write_text(json.dumps({"label": "w", "bloch": {"a": [0, 0, 0], "b": [0, 0, 0], "C": (-0.5 * np.eye(3)).tolist()}}))
    code, out, _ = run(capsys, "check-ent", str(path))
    assert code == 1 and json.loads(out)["verdict"] == "entangled"


def test_non_psd_warns(capsys, tmp_path):
    path = tmp_path / "np.json"
    path.write_text(json.dumps({"bloch": {"a": [0, 0, 0], "b": [0, 0, 0], "C": (-1.5 * np.eye(3)).tolist()}}))
    code, out, err = run(capsys, "invariants", str(path), "--family", "L")
    assert code == 0 and "warning" in err and "warning" not in out
    json.loads(out)


def test_check_lu(capsys, tmp_path):
    r = gen(capsys, tmp_path, "r.json", "random", "--seed", "7")
    code, _, _ = run(capsys, "check-lu", r, r)
    assert code == 0
    pair = gen(capsys, tmp_path, "pair.json", "lu-orbit", "--input", r, "--seed", "3")
    code, out, _ = run(capsys, "check-lu", pair)
    assert code == 0 and json.loads(out)["verdict"] == "equivalent"
    a = gen(capsys, tmp_path, "a.json", "werner", "--w", "0.3")
    b = gen(capsys, tmp_path, "b.json", "werner", "--w", "0.6")
    assert run(capsys, "check-lu", a, b)[0] == 1
    c = gen(capsys, tmp_path, "c.json", "werner", "--w", "0.30000004")
    assert run(capsys, "check-lu", a, c)[0] == 3
    assert run(capsys, "check-lu", a)[0] == 2


def test_check_ent(capsys, tmp_path):
    bell = gen(capsys, tmp_path, "bell.json", "bell-diagonal", "--t=-1,-1,-1")
    mixed = gen(capsys, tmp_path, "m.json", "werner", "--w", "0")
    third = gen(capsys, tmp_path, "t.json", "werner", "--w", repr(1 / 3))
    assert run(capsys, "check-ent", bell)[0] == 1
    assert run(capsys, "check-ent", mixed)[0] == 0
    code, out, _ = run(capsys, "check-ent", third)
    assert code == 3 and json.loads(out)["verdict"] == "boundary"
    for m in ("ppt", "makhlin", "bargmann"):
        code, out, _ = run(capsys, "check-ent", bell, "--method", m)
        rep = json.loads(out)
        assert code == 1 and [d["method"] for d in rep["detectors"]] == [m]


def test_perm_trace(capsys, tmp_path):
    bell = gen(capsys, tmp_path, "bell.json", "bell-diagonal", "--t=-1,-1,-1")
    _, out, _ = run(capsys, "perm-trace", bell, "--pi-a", "2,1", "--pi-b", "2,1")
    assert abs(json.loads(out)["value"]["re"] - 1) < 1e-14
    _, out, _ = run(capsys, "perm-trace", bell, "--pi-a", "2,1", "--pi-b", "1,2")
    assert abs(json.loads(out)["value"]["re"] - 0.5) < 1e-14
    _, out, _ = run(capsys, "perm-trace", bell, "--n", "1")
    assert abs(json.loads(out)["value"]["re"] - 1) < 1e-14
    assert run(capsys, "perm-trace", bell, "--pi-a", "2,2")[0] == 2
    assert run(capsys, "perm-trace", bell, "--n", "3", "--pi-a", "2,1")[0] == 2
    assert run(capsys, "perm-trace", bell, "--n", "7")[0] == 2


def test_gen_errors(capsys):
    assert run(capsys, "gen", "werner", "--w", "2")[0] == 2
    assert run(capsys, "gen", "bell-diagonal", "--t", "1,1,1")[0] == 2
    assert run(capsys, "gen", "bell-diagonal", "--t", "1,1")[0] == 2
    assert run(capsys, "gen", "lu-orbit")[0] == 2
    with pytest.raises(SystemExit):
        main(["gen", "random", "--seed", "-1"])


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--profile", "quick", "--seed", "5")
    rep = json.loads(out)
    assert code == 0 and rep["passed"]
    code, out, err = run(capsys, "selftest", "--tol", "0")
    assert code == 4 and not json.loads(out)["passed"] and "failed" in err


def test_console_entry_point(tmp_path):
    out = subprocess.run(
        [sys.executable, "-m", "lubargmann", "gen", "werner", "--w", "0.25"],
        capture_output=True, text=True, check=True,
    ).stdout
    (doc,) = load_documents(out)
    assert np.allclose(doc.rho, werner(0.25))
