import json

from multires.cli import main
from multires.graph import parse_graph6


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_edges(capsys):
    code, out, _ = run(capsys, "gen", "cycle:4")
    assert code == 0
    assert out == "0 1\n0 3\n1 2\n2 3\n"


def test_gen_graph6_round_trip(capsys):
    code, out, _ = run(capsys, "gen", "wheel:6", "--format", "graph6")
    assert code == 0
    assert parse_graph6(out.strip()).n == 7


def test_compute_table(capsys):
    code, out, _ = run(capsys, "compute", "--gen", "cycle:6", "--variant", "lmd")
    assert code == 0
    assert "lmd" in out and " 1 " in out


def test_compute_json_all_variants(capsys):
    code, out, _ = run(
        capsys, "compute", "--gen", "complete:4", "--output", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 4
    by_name = {r["variant"]: r for r in payload["results"]}
    assert by_name["lmd"]["value"] == "infinity"
    assert by_name["ldim_ms"]["value"] == 3


def test_compute_reads_stdin(capsys, monkeypatch, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("0 1\n1 2\n2 0\n")
    code, out, _ = run(
        capsys, "compute", str(path), "--variant", "ldim_ms", "--output", "json"
    )
    assert code == 0
    assert json.loads(out)["results"][0]["value"] == 2


def test_compute_graph6_input(capsys, tmp_path):
    path = tmp_path / "g.g6"
    path.write_text("Dhc\n")
    code, out, _ = run(
        capsys, "compute", str(path), "--format", "graph6",
        "--variant", "ldim_ms", "--output", "json",
    )
    assert code == 0
    assert json.loads(out)["results"][0]["value"] == 2


def test_certify_valid_and_invalid(capsys):
    code, out, _ = run(
        capsys, "certify", "--gen", "cycle:5",
        "--variant", "ldim_ms", "--witness", "0,1",
    )
    assert code == 0
    assert "valid: True" in out
    code, out, _ = run(
        capsys, "certify", "--gen", "cycle:5",
        "--variant", "lmd", "--witness", "0",
    )
    assert code == 3
    assert "violating pair" in out


def test_certify_rejects_bad_witness(capsys):
    code, _, err = run(
        capsys, "certify", "--gen", "cycle:5",
        "--variant", "lmd", "--witness", "0,9",
    )
    assert code == 1
    assert "out of range" in err


def test_bounds_json(capsys):
    code, out, _ = run(capsys, "bounds", "--gen", "wheel:6", "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["lower"]["lmd"]["value"] == 2


def test_verify_single_theorem(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "cycles")
    assert code == 0
    assert "cycles" in out and "pass" in out


def test_verify_unknown_theorem(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "flat_earth")
    assert code == 1
    assert "unknown theorem" in err


def test_verify_reports_failure_exit_code(capsys):
    # faithful harness: the outer structure condition fails on odd wheels
    code, out, _ = run(capsys, "verify", "--theorem", "wheel_lemma_1or3")
    assert code == 3
    assert "FAIL" in out


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "4")
    lines = out.strip().splitlines()
    assert code == 0
    assert len(lines) == 38
    assert all(parse_graph6(line).n == 4 for line in lines)


def test_cap_exit_code(capsys):
    code, _, err = run(capsys, "compute", "--gen", "complete:25")
    assert code == 2
    assert "cap" in err


def test_env_cap_override(capsys, monkeypatch):
    monkeypatch.setenv("MULTIRES_CAP", "4")
    code, _, err = run(capsys, "compute", "--gen", "cycle:5")
    assert code == 2
    monkeypatch.setenv("MULTIRES_CAP", "25")
    code, _, _ = run(capsys, "compute", "--gen", "cycle:5", "--variant", "ldim")
    assert code == 0


def test_budget_exit_code(capsys):
    code, _, err = run(
        capsys, "compute", "--gen", "wheel:8", "--variant", "lmd", "--budget", "3"
    )
    assert code == 2
    assert "inconclusive" in err


def test_input_error_exit_code(capsys):
    code, _, err = run(capsys, "gen", "hexagon:6")
    assert code == 1
    assert "unknown family" in err


def test_compute_parallel_jobs(capsys):
    code, out, _ = run(
        capsys, "compute", "--gen", "wheel:8", "--variant", "lmd",
        "--jobs", "2", "--output", "json",
    )
    assert code == 0
    assert json.loads(out)["results"][0]["value"] == 2
