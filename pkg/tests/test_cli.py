from __future__ import annotations

import json

import pytest

from oracles import VAS_SIG, small_signatures
from sturmkit.cli import main
from sturmkit.lapsig import MaxN, enumerate_signatures, serialize


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_table(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-nq", "7")
    assert code == 0 and out.split() == small_signatures()


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-nq", "4", "--json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[2] == {"signature": "*({1}@{1})*", "n": 3, "q": 1, "N": 5}


def test_sig_to_perm_and_back(capsys):
    assert run(capsys, "sig-to-perm", "*({1,1}(@)*(@){1,1})*")[1].strip() == "1,8,7,4,5,6,3,2,9"
    assert run(capsys, "perm-to-sig", "1,8,7,4,5,6,3,2,9")[1].strip() == "*({1,1}(@)*(@){1,1})*"
    code, _, err = run(capsys, "perm-to-sig", "1,4,5,2,3,6,7")
    assert code == 1 and "(i)" in err


def test_validate_perm(capsys):
    code, out, _ = run(capsys, "validate-perm", "1,6,7,10,3,4,9,8,5,2,11")
    assert code == 0 and "sturm=true" in out
    assert run(capsys, "validate-perm", "1,3,2")[0] == 1


def test_pitchfork(capsys):
    code, out, _ = run(capsys, "pitchfork", "1,6,7,10,3,4,9,8,5,2,11")
    assert code == 1 and "no pitchfork" in out
    code, out, _ = run(capsys, "pitchfork", "1,4,3,2,5", "--trace")
    assert code == 0 and "1,2,3" in out and "reducible" in out


def test_validate_sig_codes(capsys):
    assert run(capsys, "validate-sig", "*({1,2}@{2,1})*")[0] == 0
    code, out, _ = run(capsys, "validate-sig", "*({2}@{2})*")
    assert code == 1 and "(vii)" in out
    code, _, err = run(capsys, "validate-sig", "*(@")
    assert code == 2 and "position" in err
    assert run(capsys, "validate-perm", "1,1,2")[0] == 2


def test_census_report(capsys):
    code, out, _ = run(capsys, "census", "--N", "9", "--class", "all", "--dedup", "both", "--jobs", "2")
    assert json.loads(out) == {"N": 9, "raw": 32, "uptoTrivial": 20}
    code, _, err = run(capsys, "census", "--N", "13", "--class", "all")
    assert code == 1 and "limit" in err


def test_compose(capsys):
    assert run(capsys, "compose-paths", "2,1", "1,2")[1].strip() == "2,1"


def test_file_inputs_and_out(capsys, tmp_path):
    src = tmp_path / "sig.txt"
    src.write_text(VAS_SIG + "\n")
    dest = tmp_path / "g.dot"
    code, out, _ = run(capsys, "graph", "--sig", f"@{src}", "--bc", "periodic", "--reduce", "--format", "dot", "--out", str(dest))
    assert code == 0 and out == "" and dest.read_text().count("[kind=") == 9


def test_meander_formats(capsys):
    assert "<svg" in run(capsys, "meander", "1,4,3,2,5", "--format", "svg")[1]
    assert "graph meander" in run(capsys, "meander", "--sig", "*({1}@{1})*", "--format", "dot")[1]
    doc = json.loads(run(capsys, "meander", "1,2,3", "--format", "json")[1])
    assert doc["arcs"][0] == {"from": 1, "to": 2, "side": "upper"}
    assert run(capsys, "meander", "1,2,3", "--sig", "*({1}@{1})*")[0] == 1


@pytest.mark.parametrize("sig", enumerate_signatures(MaxN(11)), ids=serialize)
def test_graph_pipeline_consistency(capsys, sig):
    text = serialize(sig)
    _, via_sig, _ = run(capsys, "graph", "--sig", text, "--bc", "periodic")
    _, perm, _ = run(capsys, "sig-to-perm", text)
    _, via_perm, _ = run(capsys, "graph", perm.strip(), "--bc", "periodic")
    assert via_sig == via_perm


def test_no_color_env(capsys, monkeypatch):
    monkeypatch.setenv("SAK_COLOR", "0")
    _, _, err = run(capsys, "validate-sig", "*(@")
    assert "\x1b[" not in err
