"""JSON round-trips for the four file kinds and end-to-end command line runs."""

import json

import numpy as np
import pytest

from braceforge.brace import brace_from_group
from braceforge.constructions import brace_from_cocycle
from braceforge.errors import ValidationFailed
from braceforge.groups import dihedral, symmetric
from braceforge.io import (
    brace_payload,
    detect_kind,
    group_payload,
    load_any,
    load_brace,
    load_cocycle,
    load_group,
    load_solution,
    save_payload,
    solution_payload,
)
from braceforge.cli import run
from braceforge.ybe import solution_from_brace
from tests.conftest import build_funny_brace


# ------------------------------------------------------------------ file io


def test_group_round_trip(tmp_path):
    G = symmetric(3)
    p = tmp_path / "s3.json"
    save_payload(str(p), group_payload(G))
    H = load_group(str(p))
    assert np.array_equal(G.table, H.table)
    kind, obj = load_any(str(p))
    assert kind == "group" and obj.order == 6


def test_brace_round_trip(tmp_path, fix_brace):
    p = tmp_path / "b.json"
    save_payload(str(p), brace_payload(fix_brace))
    B = load_brace(str(p))
    assert np.array_equal(B.add.table, fix_brace.add.table)
    assert np.array_equal(B.circle.table, fix_brace.circle.table)


def test_solution_round_trip(tmp_path, ring_brace):
    s = solution_from_brace(ring_brace)
    p = tmp_path / "sol.json"
    save_payload(str(p), solution_payload(s))
    t = load_solution(str(p))
    assert np.array_equal(s.sigma, t.sigma) and np.array_equal(s.tau, t.tau)


def _cocycle_payload():
    d = build_funny_brace()
    return {
        "G": group_payload(d.G),
        "X": group_payload(d.X),
        "action": np.asarray(d.action).tolist(),
        "pi": list(d.pi),
    }


def test_cocycle_round_trip(tmp_path, funny_brace):
    p = tmp_path / "coc.json"
    save_payload(str(p), _cocycle_payload())
    A = brace_from_cocycle(load_cocycle(str(p)))
    assert np.array_equal(A.circle.table, funny_brace.circle.table)


def test_detect_kind():
    assert detect_kind({"add": [], "circle": []}) == "brace"
    assert detect_kind({"sigma": [], "tau": []}) == "solution"
    assert detect_kind({"pi": [], "G": {}, "X": {}}) == "cocycle"
    assert detect_kind({"table": []}) == "group"
    with pytest.raises(ValidationFailed):
        detect_kind({"rows": []})


def test_malformed_files(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ValidationFailed):
        load_group(str(bad))
    with pytest.raises(ValidationFailed):
        load_group(str(tmp_path / "missing.json"))
    toplevel = tmp_path / "list.json"
    toplevel.write_text("[1, 2]\n")
    with pytest.raises(ValidationFailed):
        load_any(str(toplevel))

    mismatch = tmp_path / "mismatch.json"
    save_payload(str(mismatch), {"order": 3, "table": [[0, 1], [1, 0]]})
    with pytest.raises(ValidationFailed):
        load_group(str(mismatch))

    ragged = tmp_path / "ragged.json"
    save_payload(str(ragged), {"table": [[0, 1, 0], [1, 0, 1]]})
    with pytest.raises(ValidationFailed):
        load_group(str(ragged))

    strorder = tmp_path / "strorder.json"
    save_payload(str(strorder), {"order": "2", "table": [[0, 1], [1, 0]]})
    with pytest.raises(ValidationFailed):
        load_group(str(strorder))


# ------------------------------------------------------------- command line


@pytest.fixture
def files(tmp_path, fix_brace, funny_brace, ring_brace):
    out = {}
    for name, payload in (
        ("fix", brace_payload(fix_brace)),
        ("funny", brace_payload(funny_brace)),
        ("ring", brace_payload(ring_brace)),
        ("ts3", brace_payload(brace_from_group(symmetric(3)))),
        ("td8", brace_payload(brace_from_group(dihedral(8)))),
        ("s3", group_payload(symmetric(3))),
        ("sol", solution_payload(solution_from_brace(ring_brace))),
        ("coc", _cocycle_payload()),
    ):
        p = tmp_path / f"{name}.json"
        save_payload(str(p), payload)
        out[name] = str(p)
    out["dir"] = str(tmp_path)
    return out


def test_cli_validate_lines(files, capsys):
    assert run(["validate", files["funny"]]) == 0
    assert capsys.readouterr().out.strip() == "valid skew left brace, order 16, abelian type"
    assert run(["validate", files["fix"]]) == 0
    assert capsys.readouterr().out.strip() == "valid skew left brace, order 6, abelian type"
    assert run(["validate", files["ts3"]]) == 0
    assert capsys.readouterr().out.strip() == "valid skew left brace, order 6, non-nilpotent type"
    assert run(["validate", files["td8"]]) == 0
    assert capsys.readouterr().out.strip() == "valid skew left brace, order 8, nilpotent type"
    assert run(["validate", files["s3"]]) == 0
    assert capsys.readouterr().out.strip() == "valid group, order 6, non-abelian"
    assert run(["validate", files["sol"]]) == 0
    assert capsys.readouterr().out.strip() == "valid solution, size 8, nondegenerate, involutive"
    assert run(["validate", files["coc"]]) == 0
    assert capsys.readouterr().out.strip() == "valid skew left brace, order 16, abelian type"


def test_cli_validate_rejects_bad_file(tmp_path, capsys):
    p = tmp_path / "broken.json"
    save_payload(str(p), {"add": [[0, 1], [1, 0]], "circle": [[0, 0], [0, 0]]})
    assert run(["validate", str(p)]) == 1
    assert "error:" in capsys.readouterr().err


def test_cli_validate_degenerate_solution(tmp_path, capsys):
    p = tmp_path / "deg.json"
    save_payload(str(p), {"sigma": [[0, 0], [1, 1]], "tau": [[0, 1], [0, 1]]})
    assert run(["validate", str(p)]) == 1
    assert "invalid solution" in capsys.readouterr().out


def test_cli_info_json(files, capsys):
    assert run(["--json", "info", files["funny"]]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["order"] == 16
    assert payload["abelian_type"] and payload["nilpotent_type"]
    assert not payload["two_sided"]
    assert payload["mpl"] == 4
    assert len(payload["socle"]) == 2
    assert payload["left_nilpotent"] and payload["right_nilpotent"] and payload["strongly_nilpotent"]


def test_cli_series(files, capsys):
    assert run(["series", "--kind", "strong", files["funny"]]) == 0
    out = capsys.readouterr().out
    assert "term sizes 16,8,4,2,2,1" in out and "reaches zero: yes" in out

    assert run(["series", "--kind", "socle", files["funny"]]) == 0
    out = capsys.readouterr().out
    assert "term sizes 1,2,4,8,16" in out and "mpl: 4" in out

    # inversion semidirect product: right series reaches zero, left one stalls
    assert run(["--json", "series", "--kind", "right", files["fix"]]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "right" and payload["reaches_zero"] is True
    assert payload["sizes"] == [6, 3, 1]
    assert run(["--json", "series", "--kind", "left", files["fix"]]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "left" and payload["reaches_zero"] is False


def test_cli_ybe_and_orbits(files, capsys):
    assert run(["--json", "ybe", files["funny"]]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["report"]["ybe"] and payload["report"]["involutive"]

    assert run(["orbits", files["funny"]]) == 0
    out = capsys.readouterr().out
    assert "{2,3,6,7,10,11,14,15}" in out and "decomposable" in out

    assert run(["ybe", files["sol"]]) == 0
    assert "ybe: yes" in capsys.readouterr().out


def test_cli_restrict(files, capsys):
    assert run(["--json", "restrict", "--subset", "4,5", files["ring"]]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["size"] == 2 and payload["valid"]

    assert run(["restrict", "--subset", "4,x", files["ring"]]) == 2
    capsys.readouterr()
    assert run(["restrict", "--subset", "0,2", files["funny"]]) == 1
    assert "error:" in capsys.readouterr().err


def test_cli_enumerate_inline(files, capsys):
    assert run(["--json", "enumerate", "--order", "4"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["count"] == 4
    assert all("brace" in e and "signature" in e for e in payload["braces"])


def test_cli_enumerate_out_dir(tmp_path, capsys):
    out = tmp_path / "braces6"
    assert run(["enumerate", "--order", "6", "--out", str(out)]) == 0
    capsys.readouterr()
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["count"] == 6
    names = sorted(e["file"] for e in manifest["braces"])
    assert names == [f"brace_6_{i}.json" for i in range(6)]
    for name in names:
        assert load_brace(str(out / name)).order == 6

    assert run(["laws", "--dir", str(out)]) == 0
    text = capsys.readouterr().out
    assert "all laws pass" in text and "directory" in text


def test_cli_enumerate_additive_filter(files, tmp_path, capsys):
    assert run(["--json", "enumerate", "--order", "6", "--additive", files["s3"]]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["count"] == 4  # of the six order-6 braces, four add like S3
    assert run(["enumerate", "--order", "6", "--additive", files["fix"]]) == 1
    assert "group file" in capsys.readouterr().err


def test_cli_enumerate_caps(files, capsys, monkeypatch):
    assert run(["enumerate", "--order", "9"]) == 1
    assert "cap" in capsys.readouterr().err

    monkeypatch.setenv("BRACEFORGE_CAP", "9")
    assert run(["--json", "enumerate", "--order", "9"]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == 4

    monkeypatch.setenv("BRACEFORGE_CAP", "99")
    assert run(["enumerate", "--order", "13"]) == 1
    capsys.readouterr()

    monkeypatch.setenv("BRACEFORGE_CAP", "zero")
    assert run(["enumerate", "--order", "4"]) == 2
    capsys.readouterr()
    monkeypatch.setenv("BRACEFORGE_CAP", "0")
    assert run(["enumerate", "--order", "4"]) == 2
    capsys.readouterr()


def test_cli_window(capsys):
    assert run(["--json", "window", "--kind", "rump", "--n", "10"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "rump_cyclic"
    assert payload["triples_checked"] == 21 ** 3
    assert payload["ok"] and payload["failures"] == []

    assert run(["window", "--kind", "dihedral", "--n", "5"]) == 0
    assert "0 failure(s)" in capsys.readouterr().out


def test_cli_laws_deterministic(capsys):
    assert run(["--json", "laws", "--orders", "1..4", "--scan-questions"]) == 0
    first = capsys.readouterr().out
    assert run(["--json", "laws", "--orders", "1..4", "--scan-questions"]) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert payload["ok"] is True


def test_cli_usage_errors(files, capsys):
    assert run(["series", files["fix"]]) == 2  # missing --kind
    capsys.readouterr()
    assert run(["frobnicate"]) == 2
    capsys.readouterr()
    assert run(["validate", "/nonexistent/nope.json"]) == 1
    assert "error:" in capsys.readouterr().err
