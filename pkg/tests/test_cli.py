from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from chromroots import known
from chromroots.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, factor_report, format_factored, main
from chromroots.exactalg import IntPoly
from chromroots.graphcore import gen_X, octahedron, write_edgelist, write_graph6

q = IntPoly.q()


def run(capsys, *argv, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv, **kw):
    code, out, err = run(capsys, "--json", "--reproducible", *argv, **kw)
    return code, json.loads(out)


# -- factor display ------------------------------------------------------------

def test_factor_report_g2():
    cands = [q, q - 1, q - 2, q - 3, q - 4, known.MIN_POLY_B10]
    found, rest = factor_report(known.P_G2, cands)
    assert dict((str(f), m) for f, m in found) == {
        "q": 1, "q - 1": 1, "q - 2": 1, "q - 3": 1, "q^2 - 5*q + 5": 1}
    assert rest == q**5 - 8 * q**4 + 30 * q**3 - 63 * q**2 + 73 * q - 36


def test_factor_report_rational_roots():
    p = (2 * q - 3) ** 2 * (q + 5) * (q**2 + 1)
    found, rest = factor_report(p, [])
    assert {(str(f), m) for f, m in found} == {("2*q - 3", 2), ("q + 5", 1)}
    assert rest == q**2 + 1
    assert format_factored(found, rest) == "(q + 5) * (2*q - 3)^2 * (q^2 + 1)"


# -- chromatic -------------------------------------------------------------------

def test_chromatic_k3_edgelist(capsys, monkeypatch):
    code, out, _ = run(capsys, "chromatic", "-", stdin="3 3\n0 1\n1 2\n0 2\n", monkeypatch=monkeypatch)
    assert code == EXIT_OK
    assert "P(q) = q^3 - 3*q^2 + 2*q" in out


def test_chromatic_g2_reports_b10_factor(capsys):
    code, out, _ = run(capsys, "generate", "G2")
    code, rep = run_json(capsys, "chromatic", "-", stdin=out, monkeypatch=pytest.MonkeyPatch())
    assert code == EXIT_OK
    assert IntPoly.from_json_obj(rep["polynomial"]) == known.P_G2
    assert {"factor": "q^2 - 5*q + 5", "multiplicity": 1} in rep["factors"]


def test_chromatic_h_reports_double_two(capsys, monkeypatch, tmp_path):
    code, out, _ = run(capsys, "generate", "H", "--format", "graph6")
    path = tmp_path / "h.g6"
    path.write_text(out)
    code, rep = run_json(capsys, "chromatic", str(path))
    assert {"factor": "q - 2", "multiplicity": 2} in rep["candidates"]


def test_chromatic_custom_candidates(capsys, tmp_path):
    path = tmp_path / "x2.txt"
    path.write_text(write_edgelist(gen_X(2)))
    code, rep = run_json(capsys, "chromatic", str(path), "--candidates", "q-2, (q-1)^2")
    assert [c["multiplicity"] for c in rep["candidates"]] == [2, 0]


def test_chromatic_errors(capsys, monkeypatch, tmp_path):
    code, _, err = run(capsys, "chromatic", "-", stdin="nonsense", monkeypatch=monkeypatch)
    assert code == EXIT_USAGE and "cannot parse" in err
    code, _, err = run(capsys, "chromatic", str(tmp_path / "missing"))
    assert code == EXIT_USAGE
    path = tmp_path / "k2.txt"
    path.write_text("2 1\n0 1\n")
    code, _, err = run(capsys, "chromatic", str(path), "--candidates", "q^-1")
    assert code == EXIT_USAGE


# -- generate --------------------------------------------------------------------

def test_generate_formats(capsys):
    code, out, _ = run(capsys, "generate", "X", "--k", "3", "--format", "graph6")
    assert code == EXIT_OK and out.strip() == write_graph6(gen_X(3))
    code, out, _ = run(capsys, "generate", "X", "--k", "2")
    assert out == write_edgelist(gen_X(2))
    code, out, _ = run(capsys, "generate", "H", "--k", "2")
    assert out.splitlines()[0] == "23 39"
    code, out, _ = run(capsys, "generate", "wheel", "--k", "5")
    assert out.splitlines()[0] == "6 10"


def test_generate_errors(capsys):
    assert run(capsys, "generate", "X")[0] == EXIT_USAGE
    assert run(capsys, "generate", "wheel", "--k", "2")[0] == EXIT_USAGE
    assert run(capsys, "generate", "Petersen")[0] == EXIT_USAGE


# -- verify-theorem -------------------------------------------------------------

def test_verify_theorem_passes(capsys):
    code, rep = run_json(capsys, "verify-theorem", "--k-max", "10")
    assert code == EXIT_OK and rep["passed"] and rep["first_failure"] is None
    names = [c["item"] for c in rep["checks"]]
    assert "T (a1..a8 and zero pattern)" in names and "(q-2)^10 | P_10" in names


def test_verify_theorem_colour_count(capsys):
    code, rep = run_json(capsys, "verify-theorem", "--k-max", "4", "--color-count", "3")
    assert code == EXIT_OK
    assert any(c["item"] == "P_4(3) by backtracking" and c["ok"] for c in rep["checks"])


def test_verify_theorem_corrupted_rim_fails_at_p1(capsys):
    code, rep = run_json(capsys, "verify-theorem", "--k-max", "3", "--corrupt-rim")
    assert code == EXIT_FAIL
    assert rep["first_failure"] == "P_1 (deletion-contraction)"


def test_verify_theorem_usage(capsys):
    assert run(capsys, "verify-theorem", "--k-max", "2")[0] == EXIT_USAGE


# -- beraha ------------------------------------------------------------------------

def test_beraha_n10(capsys):
    code, rep = run_json(capsys, "beraha", "--n-max", "10")
    assert code == EXIT_OK
    assert rep["unblocked_non_integer"] == [10]
    rows = {r["n"]: r for r in rep["rows"]}
    assert rows[5]["witness_interval"] == ["0", "1"]
    assert rows[8]["blocked"] and rows[8]["witness_interval"] == ["0", "1"]
    assert rows[10]["certificates"] == {"G1": True, "G2": True}
    assert {n for n, r in rows.items() if r["integer"]} == {1, 2, 3, 4, 6}


def test_beraha_usage(capsys):
    assert run(capsys, "beraha", "--n-max", "4")[0] == EXIT_USAGE


# -- transfer-derive ------------------------------------------------------------

def test_transfer_derive_default_and_file(capsys, tmp_path):
    code, rep = run_json(capsys, "transfer-derive")
    assert code == EXIT_OK
    assert rep["recurrence"]["order"] == 3
    assert [IntPoly.from_json_obj(c) for c in rep["q_minus_2_form"]] == [known.A, known.B, known.C]
    from pathlib import Path

    gadget_file = Path(__file__).resolve().parent.parent / "gadgets" / "x_family.json"
    code, rep2 = run_json(capsys, "transfer-derive", "--gadget", str(gadget_file))
    assert rep2 == rep
    bad = tmp_path / "bad.json"
    bad.write_text('{"gadget": {}}')
    assert run(capsys, "transfer-derive", "--gadget", str(bad))[0] == EXIT_USAGE


# -- golden --------------------------------------------------------------------------

def test_golden(capsys, tmp_path):
    path = tmp_path / "oct.txt"
    path.write_text(write_edgelist(octahedron()))
    code, rep = run_json(capsys, "golden", str(path), "--n-vertices", "6")
    assert code == EXIT_OK and rep["holds"]
    code, _, _ = run(capsys, "golden", str(path), "--n-vertices", "7")
    assert code == EXIT_FAIL


# -- output contract -----------------------------------------------------------------

def test_reproducible_json_is_byte_identical(capsys):
    outs = []
    for threads in ("1", "2"):
        main(["--json", "--reproducible", "--threads", threads, "transfer-derive"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    main(["--json", "beraha", "--n-max", "5"])
    assert "generated_at" in json.loads(capsys.readouterr().out)


def test_flags_after_subcommand(capsys):
    main(["beraha", "--n-max", "5", "--json", "--reproducible"])
    rep = json.loads(capsys.readouterr().out)
    assert "generated_at" not in rep


def test_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("CHROMA_THREADS", "0")
    assert run(capsys, "beraha", "--n-max", "5")[0] == EXIT_USAGE


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "chromroots", "beraha", "--n-max", "6"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and "B_5" in res.stdout
    res = subprocess.run([sys.executable, "-m", "chromroots"], capture_output=True, text=True, check=False)
    assert res.returncode == EXIT_USAGE


def test_threads_env_garbage(capsys, monkeypatch):
    monkeypatch.setenv("CHROMA_THREADS", "many")
    assert run(capsys, "beraha", "--n-max", "5")[0] == EXIT_USAGE
    monkeypatch.setenv("CHROMA_THREADS", "2")
    assert run(capsys, "beraha", "--n-max", "5")[0] == EXIT_OK
