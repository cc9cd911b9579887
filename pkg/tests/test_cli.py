"""Command-line surface: verbs, exit codes, file round trips."""

import json
import subprocess
import sys

from diffres.cli import main


def run_cli(*argv):
    """Invoke the entry point in-process, capturing SystemExit from argparse."""
    try:
        return main(list(argv))
    except SystemExit as exc:
        return exc.code


def test_gen_with_legend(capsys):
    assert run_cli("gen", "--d1", "2", "--d2", "2", "--legend") == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["f1"]) == 6
    assert data["legend"][0] == "a0 = a(0,2)"
    assert data["legend"][5] == "a5 = a(0,0)"


def test_sets_counts(capsys):
    assert run_cli("sets", "--d1", "2", "--d2", "2") == 0
    data = json.loads(capsys.readouterr().out)
    assert data["N"] == 36
    sizes = [s["count"] for s in data["partition"]["sets"]]
    assert sizes == [10, 10, 10, 6]


def test_build_roundtrip(tmp_path, capsys):
    out = tmp_path / "matrix.json"
    assert run_cli("build", "--d1", "1", "--d2", "2", "--out", str(out)) == 0
    data = json.loads(out.read_text())
    assert data["shape"] == [16, 16]
    assert all(len(e) == 3 for e in data["entries"])


def test_carra_ferro_zero_column(capsys):
    assert run_cli("carra-ferro", "--d1", "2", "--d2", "2") == 0
    data = json.loads(capsys.readouterr().out)
    assert data["shape"] == [80, 56]
    assert "y2^5" in data["zero_columns"]


def test_certificate_output(capsys):
    assert run_cli("certificate", "--d1", "2", "--d2", "2") == 0
    data = json.loads(capsys.readouterr().out)
    assert data["counts"] == [10, 10, 10, 6]
    assert data["coefficient"] in ("1024", "-1024")
    assert len(data["steps"]) == 4


def test_det_specialized_seeded_deterministic(capsys):
    assert run_cli("det", "--d1", "1", "--d2", "1", "--seed", "5") == 0
    first = json.loads(capsys.readouterr().out)
    assert run_cli("det", "--d1", "1", "--d2", "1", "--seed", "5") == 0
    second = json.loads(capsys.readouterr().out)
    assert first == second


def test_det_common_zero_is_zero(capsys):
    assert run_cli("det", "--d1", "2", "--d2", "2",
                   "--common-zero", "1", "2", "3", "--seed", "9") == 0
    data = json.loads(capsys.readouterr().out)
    assert data["value"] == "0"


def test_det_symbolic_mode(capsys):
    assert run_cli("det", "--d1", "1", "--d2", "1", "--mode", "symbolic") == 0
    data = json.loads(capsys.readouterr().out)
    assert data["mode"] == "Symbolic"


def test_det_modular_crt(capsys):
    assert run_cli("det", "--d1", "1", "--d2", "1", "--mode", "modular",
                   "--seed", "3") == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["residues"]) == 2


def test_det_specialization_file(tmp_path, capsys):
    table = {}
    for system in ("a", "b"):
        for k, l in ((0, 0), (1, 0), (0, 1)):
            table[f"{system}({k},{l})"] = "1"
            table[f"{system}({k},{l})'"] = "0"
    table["a(0,0)"] = "2"
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(table))
    assert run_cli("det", "--d1", "1", "--d2", "1",
                   "--spec-file", str(path)) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["mode"] == "SpecializedExact"


def test_specialization_file_rejects_unknown_symbols(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"a(9,9)": "1"}))
    code = run_cli("det", "--d1", "1", "--d2", "1", "--spec-file", str(path))
    assert code == 2


def test_lp_partition_with_config(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({
        "liftings": [7, -4, -5, 5, -9, 5, 6, 2, 1, 8, 4, 7],
        "delta": ["1/100", "1/100", "1/100"],
    }))
    assert run_cli("lp-partition", "--d1", "1", "--d2", "1",
                   "--config", str(config)) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["lifting_report"]["passed"] is True
    assert len(data["points"]) == 4
    assert all(len(p["lambda"]) == 18 for p in data["points"])


def test_moves_default_list(capsys):
    assert run_cli("moves", "--d1", "2", "--d2", "2") == 0
    data = json.loads(capsys.readouterr().out)
    before = [s["count"] for s in data["before"]["sets"]]
    after = [s["count"] for s in data["after"]["sets"]]
    assert before == [6, 10, 8, 12]
    assert after == [10, 10, 10, 6]


def test_moves_file(tmp_path, capsys):
    moves = [{"monomial": [0, 1, 1], "from": 4, "to": 1}]
    path = tmp_path / "moves.json"
    path.write_text(json.dumps(moves))
    assert run_cli("moves", "--d1", "2", "--d2", "2",
                   "--moves-file", str(path)) == 0
    data = json.loads(capsys.readouterr().out)
    assert [s["count"] for s in data["after"]["sets"]] == [7, 10, 8, 11]


def test_oracle_command(capsys):
    assert run_cli("oracle", "--d1", "1", "--d2", "1") == 0
    data = json.loads(capsys.readouterr().out)
    assert data["terms"] > 0


def test_check_suite_exit_zero(capsys):
    assert run_cli("check", "--suite", "sizes") == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "1/1 checks passed" in out


def test_export_csv_requires_specialization(capsys):
    code = run_cli("export", "--d1", "1", "--d2", "1", "--format", "csv")
    assert code == 2


def test_export_csv_with_file(tmp_path, capsys):
    table = {}
    for system in ("a", "b"):
        for k, l in ((0, 0), (1, 0), (0, 1)):
            table[f"{system}({k},{l})"] = "1"
            table[f"{system}({k},{l})'"] = "0"
    spec_path = tmp_path / "spec.json"
    spec_path.write_text(json.dumps(table))
    out = tmp_path / "matrix.csv"
    assert run_cli("export", "--d1", "1", "--d2", "1", "--format", "csv",
                   "--spec-file", str(spec_path), "--out", str(out)) == 0
    lines = out.read_text().strip().split("\n")
    assert len(lines) == 5
    assert lines[0].split(",")[1] == "y^0*y1^0*y2^1"


def test_usage_error_exit_code():
    assert run_cli("build", "--d1", "2") == 2          # missing --d2
    assert run_cli("no-such-command") == 2


def test_invariant_violation_exit_code(capsys):
    # an out-of-range perturbation is a library-level invariant failure
    code = run_cli("lp-partition", "--d1", "1", "--d2", "1",
                   "--delta", "2", "2", "2")
    assert code == 3


def test_installed_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "diffres.cli",
                           "sets", "--d1", "1", "--d2", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["N"] == 4
