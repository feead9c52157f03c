from __future__ import annotations

import csv
import io
import json
import shutil

import pytest

from salemforge import acceptance, cli
from salemforge.golden import default_path


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_growth_builtin(capsys):
    code, out, _ = run(capsys, "growth", "triangle-2-3-7", "--terms", "6")
    rec = json.loads(out)
    assert code == 0
    assert rec["denominator"] == "1 1 0 -1 -1 -1 -1 -1 0 1 1"
    assert rec["series_prefix"][:2] == [1, 3]
    assert rec["growth_rate"]["lo"].startswith("1.17628")


def test_growth_graph_file(tmp_path, capsys):
    p = tmp_path / "g.txt"
    p.write_text("nodes 3 / edge 1 2 3 / edge 2 3 7\n")
    code, out, _ = run(capsys, "growth", str(p))
    assert code == 0 and json.loads(out)["denominator"] == "1 1 0 -1 -1 -1 -1 -1 0 1 1"


def test_growth_bad_graph(tmp_path, capsys):
    p = tmp_path / "g.txt"
    p.write_text("nodes 2\nedge 1 2 1\n")
    assert run(capsys, "growth", str(p))[0] == 2
    assert run(capsys, "growth", "no-such-graph")[0] == 2


def test_domino(capsys):
    code, out, _ = run(capsys, "domino", "--l", "3", "--m", "2", "--n", "7")
    rec = json.loads(out)
    q = list(map(int, rec["Q"].split()))
    assert code == 0 and q[17] == -34 and q[16] == 15 and rec["palindromic"]
    assert rec["root_profile"]["circle_pairs"] == 7 and rec["salem_class"] == "TwoSalem"


def test_domino_invalid_counts(capsys):
    code, _, err = run(capsys, "domino", "--l", "0", "--m", "0", "--n", "3")
    assert code == 2 and "usage error" in err


def test_census_small(capsys):
    code, out, _ = run(capsys, "census", "--n-max", "1")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 4
    assert [(r["l"], r["m"], r["n"]) for r in rows] == [("0", "0", "0"), ("0", "0", "1"), ("0", "1", "1"), ("1", "0", "1")]
    assert {r["salem_class"] for r in rows} == {"TwoSalem"}
    assert list(rows[0]) == cli.CSV_HEADER


def test_census_csv_json_agree(capsys):
    _, out_csv, _ = run(capsys, "census", "--n-max", "3", "--skip-irreducibility")
    _, out_json, _ = run(capsys, "census", "--n-max", "3", "--skip-irreducibility", "--format", "json")
    rows = list(csv.DictReader(io.StringIO(out_csv)))
    recs = json.loads(out_json)
    assert len(rows) == len(recs)
    for r, j in zip(rows, recs):
        assert r["q_coeffs"].split() == [str(c) for c in j["q_coeffs"]]
        assert r["tau_lo"] == j["tau_lo"] and r["beta_hi"] == j["beta_hi"]
        assert r["irreducible"] == j["irreducible"] == "skipped"


def test_census_worker_determinism(tmp_path, monkeypatch):
    outs = []
    for w in ("1", "3"):
        monkeypatch.setenv("SALEMFORGE_WORKERS", w)
        p = tmp_path / f"c{w}.csv"
        assert cli.main(["census", "--n-max", "5", "--out", str(p)]) == 0
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]


def test_census_negative_n(capsys):
    assert run(capsys, "census", "--n-max", "-1")[0] == 2


def test_classify_factor_cohn(tmp_path, capsys):
    L = tmp_path / "L.txt"
    L.write_text("# Lehmer\n1 1 0 -1 -1 -1 -1 -1 0 1 1\n")
    code, out, _ = run(capsys, "classify", str(L))
    assert code == 0 and json.loads(out)["kind"] == "Salem"
    prod = tmp_path / "p.txt"
    prod.write_text("1 4 5 4 1\n")  # (t^2+3t+1)(t^2+t+1)
    code, out, _ = run(capsys, "factor", str(prod))
    assert code == 0 and sorted(out.split("\n")[:2]) == ["1 1 1", "1 3 1"]
    D = tmp_path / "D.txt"
    D.write_text("1 -4 1 0 1 1 0 2 0 2 0 1 1 0 1 -4 1\n")
    code, out, _ = run(capsys, "cohn", str(D))
    rec = json.loads(out)
    assert code == 0 and rec["H"] == 4 and rec["witness"]["n"] == 186
    bad = tmp_path / "bad.txt"
    bad.write_text("1 x 2\n")
    assert run(capsys, "classify", str(bad))[0] == 2
    assert run(capsys, "classify", str(tmp_path / "missing.txt"))[0] == 2


def test_geometry_verify(capsys):
    code, out, _ = run(capsys, "geometry-verify")
    assert code == 0 and json.loads(out)["ok"] is True


def test_tampered_golden_fails_only_symbolic_check(tmp_path):
    data = json.loads(default_path().read_text())
    assert "(5m-l)t^11" in data["domino_Q_lmn"]
    data["domino_Q_lmn"] = data["domino_Q_lmn"].replace("(5m-l)t^11", "(5m-l+1)t^11")
    p = tmp_path / "golden.json"
    p.write_text(json.dumps(data))
    results = acceptance.verify_paper(str(p))
    failed = [r.number for r in results if not r.ok]
    assert failed == [4]
