import json
import subprocess

from antiramsey import parse_coloring, parse_hypergraph, save_hypergraph, spiked_clique
from antiramsey.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_formulas_turan3(capsys):
    code, out, _ = run_cli(capsys, "formulas", "--name", "turan3", "--n", "9", "--s", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == 56
    assert payload["valid"] == "proved"
    assert payload["params"] == {"n": 9, "s": 3}


def test_formulas_ar3_and_lb(capsys):
    code, out, _ = run_cli(capsys, "formulas", "--name", "ar3", "--n", "30", "--s", "10")
    assert code == 0
    assert json.loads(out)["value"] == 2605
    code, out, _ = run_cli(capsys, "formulas", "--name", "lb-perfect", "--n", "16", "--k", "4")
    assert code == 0
    assert json.loads(out)["value"] == 336
    code, out, _ = run_cli(capsys, "formulas", "--name", "s0", "--n", "100", "--k", "3")
    assert code == 0
    assert json.loads(out)["value"] == 28


def test_formulas_alpha(capsys):
    code, out, _ = run_cli(
        capsys, "formulas", "--name", "alpha", "--k", "3", "--tol", "1/100000"
    )
    assert code == 0
    payload = json.loads(out)
    lo, hi = payload["value_float"]
    assert lo <= 0.28686 <= hi or (hi - lo) < 1e-4
    assert payload["params"]["k"] == 3


def test_formulas_missing_parameter(capsys):
    code, _, err = run_cli(capsys, "formulas", "--name", "turan3", "--n", "9")
    assert code == 2
    assert "--s" in err


def test_construct_hypergraph_kinds(capsys):
    code, out, _ = run_cli(
        capsys, "construct", "--kind", "D", "--n", "9", "--k", "3", "--s", "1"
    )
    assert code == 0
    H = parse_hypergraph(out)
    assert H.edge_count == 10
    code, out, _ = run_cli(
        capsys, "construct", "--kind", "Hcover", "--n", "9", "--k", "3", "--s", "2",
        "--w", "4,7",
    )
    assert code == 0
    H = parse_hypergraph(out)
    assert all(4 in e or 7 in e for e in H.edges)
    code, out, _ = run_cli(capsys, "construct", "--kind", "DScript", "--n", "9", "--s", "2")
    assert code == 0
    assert parse_hypergraph(out).edge_count == 47


def test_construct_colorings(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "construct", "--kind", "H1", "--n", "9", "--k", "3")
    assert code == 0
    assert parse_coloring(out).palette_size == 14
    target = tmp_path / "h2.txt"
    code, out, _ = run_cli(
        capsys, "construct", "--kind", "H2", "--n", "12", "--k", "4",
        "--output", str(target),
    )
    assert code == 0
    assert out == ""
    assert parse_coloring(target.read_text()).palette_size == 40
    code, out, _ = run_cli(
        capsys, "construct", "--kind", "turan-plus-one", "--n", "9", "--k", "3", "--s", "3"
    )
    assert code == 0
    assert parse_coloring(out).palette_size == 29


def test_construct_invalid_parameters(capsys):
    code, _, err = run_cli(capsys, "construct", "--kind", "DScript", "--n", "7", "--s", "2")
    assert code == 2
    assert "error" in err


def test_verify_matching_number(capsys, tmp_path):
    path = tmp_path / "ds.txt"
    save_hypergraph(spiked_clique(9, 2), path)
    code, out, _ = run_cli(
        capsys, "verify", "--certificate", "nu-equals-s", "--input", str(path), "--s", "2"
    )
    assert code == 0
    cert = json.loads(out)
    assert cert["verdict"] is True
    assert cert["parameters"]["matching_number"] == 2
    code, out, _ = run_cli(
        capsys, "verify", "--certificate", "nu-equals-s", "--input", str(path), "--s", "3"
    )
    assert code == 1
    assert json.loads(out)["verdict"] is False


def test_verify_stable_and_saturated(capsys, tmp_path):
    path = tmp_path / "ds.txt"
    save_hypergraph(spiked_clique(9, 2), path)
    code, out, _ = run_cli(capsys, "verify", "--certificate", "stable", "--input", str(path))
    assert code == 0
    assert json.loads(out)["verdict"] is True
    code, _, err = run_cli(
        capsys, "verify", "--certificate", "saturated", "--input", str(path)
    )
    assert code == 2
    assert "--s" in err


def test_verify_saturated_positive(capsys, tmp_path):
    path = tmp_path / "d.txt"
    code, _, _ = run_cli(
        capsys, "construct", "--kind", "D", "--n", "6", "--k", "3", "--s", "1",
        "--output", str(path),
    )
    assert code == 0
    code, out, _ = run_cli(
        capsys, "--seed", "7", "verify", "--certificate", "saturated",
        "--input", str(path), "--s", "1",
    )
    assert code == 0
    assert json.loads(out)["verdict"] is True


def test_verify_no_rainbow_pm(capsys, tmp_path):
    path = tmp_path / "h1.txt"
    code, out, _ = run_cli(
        capsys, "construct", "--kind", "H1", "--n", "9", "--k", "3",
        "--output", str(path),
    )
    assert code == 0
    code, out, _ = run_cli(
        capsys, "--threads", "2", "verify", "--certificate", "no-rainbow-pm",
        "--input", str(path),
    )
    assert code == 0
    cert = json.loads(out)
    assert cert["verdict"] is True
    assert cert["search_size"] == 280


def test_verify_missing_file(capsys):
    code, _, err = run_cli(
        capsys, "verify", "--certificate", "stable", "--input", "/nonexistent/g.txt"
    )
    assert code == 2
    assert "error" in err


def test_oracle_turan(capsys):
    code, out, _ = run_cli(
        capsys, "oracle", "--name", "turan", "--n", "7", "--k", "3", "--s", "1"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {"oracle": 15, "formula": 15, "agree": True}


def test_oracle_hilton_milner(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--name", "hilton-milner", "--m", "6", "--l", "2")
    assert code == 0
    assert json.loads(out) == {"oracle": 10, "formula": 10, "agree": True}


def test_oracle_too_large_exits_3(capsys):
    code, _, err = run_cli(
        capsys, "oracle", "--name", "turan", "--n", "20", "--k", "3", "--s", "2"
    )
    assert code == 3
    assert "exceeds" in err


def test_table(capsys):
    code, out, _ = run_cli(capsys, "table", "--family", "turan3", "--n-range", "6..9")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "family,n,s,value,valid"
    assert "turan3,9,3,56,proved" in lines
    assert len(lines) == 6  # header + (6..8) x s=2 + 9 x s in {2,3}
    code, out, _ = run_cli(capsys, "table", "--family", "ar3", "--n-range", "13..13")
    assert "ar3,13,3,68,proved" in out


def test_table_bad_range(capsys):
    code, _, err = run_cli(capsys, "table", "--family", "ar3", "--n-range", "9")
    assert code == 2
    code, _, err = run_cli(capsys, "table", "--family", "ar3", "--n-range", "9..6")
    assert code == 2


def test_bad_thread_count(capsys):
    code, _, err = run_cli(capsys, "--threads", "0", "formulas", "--name", "s0",
                           "--n", "9", "--k", "3")
    assert code == 2


def test_unknown_subcommand_usage_error(capsys):
    assert main(["mystery"]) == 2
    assert main([]) == 2


def test_console_script_entry_point():
    proc = subprocess.run(
        ["antiramsey", "formulas", "--name", "turan3", "--n", "12", "--s", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == 100
