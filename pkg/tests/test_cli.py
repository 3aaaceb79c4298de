import json
import subprocess
import sys

from truncdim import cli, harness
from truncdim.graph import from_edge_list_text


def run_cli(argv, stdin_text=""):
    """Run the CLI in a subprocess so stdin/stdout/exit codes are the real thing."""
    proc = subprocess.run(
        [sys.executable, "-m", "truncdim.cli", *argv],
        input=stdin_text,
        capture_output=True,
        text=True,
        timeout=300,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_gen_writes_edge_list():
    code, out, _ = run_cli(["gen", "cycle", "8"])
    assert code == 0
    g = from_edge_list_text(out)
    assert (g.n, g.m) == (8, 8)


def test_pipe_composition_gen_into_dim():
    code, out, _ = run_cli(["gen", "cycle", "8"])
    assert code == 0
    code, out, _ = run_cli(["dim", "--k", "1", "--mode", "fractional"], stdin_text=out)
    assert code == 0
    assert out.strip() == "2/1"


def test_dim_file_equals_stdin(tmp_path):
    code, text, _ = run_cli(["gen", "path", "4"])
    f = tmp_path / "p4.el"
    f.write_text(text)
    code, out_file, _ = run_cli(["dim", "--input", str(f), "--k", "1", "--mode", "both"])
    assert code == 0
    code, out_pipe, _ = run_cli(["dim", "--k", "1", "--mode", "both"], stdin_text=text)
    assert out_file == out_pipe
    assert "dim_k 2" in out_file and "dim_kf 4/3" in out_file


def test_dim_json_schema(tmp_path):
    _, text, _ = run_cli(["gen", "petersen"])
    code, out, _ = run_cli(["dim", "--k", "1", "--mode", "both", "--json"], stdin_text=text)
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 10 and payload["k"] == 1
    assert payload["dim_kf"] == {"num": 5, "den": 3}
    assert payload["dim_k"] == payload["witness"]["integer"]["size"]
    assert payload["verified"] is True
    values = payload["witness"]["fractional"]["values"]
    assert len(values) == 10


def test_formula_command():
    assert run_cli(["formula", "cycle", "12", "--k", "2"])[1].strip() == "2/1"
    assert run_cli(["formula", "path", "8", "--k", "1"])[1].strip() == "2/1..5/2"
    assert run_cli(["formula", "dimk-cycle", "10", "--k", "1"])[1].strip() == "4"
    assert run_cli(["formula", "petersen", "--k", "3"])[1].strip() == "5/3"


def test_formula_tree_from_file(tmp_path):
    _, text, _ = run_cli(["gen", "spider", "1", "1", "1"])
    f = tmp_path / "star.el"
    f.write_text(text)
    assert run_cli(["formula", "tree", "--input", str(f)])[1].strip() == "3/2"
    assert run_cli(["formula", "tree-dim", "--input", str(f)])[1].strip() == "2"


def test_characterize_command():
    _, text, _ = run_cli(["gen", "subdivided-star", "4", "2"])
    code, out, _ = run_cli(["characterize", "--k", "2"], stdin_text=text)
    assert code == 0
    verdict = json.loads(out)
    assert verdict["is_tree"] and not verdict["is_path"]
    assert verdict["tree"]["dim1_eq_dim"] is True
    assert verdict["tree"]["kf_eq_f_at_k"] is True  # legs within distance 2


def test_profile_command():
    _, text, _ = run_cli(["gen", "cycle", "8"])
    code, out, _ = run_cli(["profile", "--k", "1"], stdin_text=text)
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 8 and payload["k"] == 1
    assert all(len(c) >= 4 for c in payload["constraints"])
    assert len(payload["pairs"]) == len(payload["constraints"])


def test_verify_suite_exit_zero(tmp_path):
    out_file = tmp_path / "report.json"
    code, out, _ = run_cli(["verify", "--suite", "petersen", "--json", str(out_file)])
    assert code == 0
    assert "suite petersen: pass" in out
    report = json.loads(out_file.read_text())
    assert report["failed"] == 0


def test_verify_failure_exit_code(monkeypatch):
    # a suite wired to fail must drive a nonzero verification exit code
    def bad_items(p):
        return [0]

    def bad_case(item, p):
        return [harness.Case(key="bad/0", expected="1", computed="2", passed=False)]

    monkeypatch.setitem(harness.SUITES, "always-fails", (bad_items, bad_case, {}))
    assert cli.main(["verify", "--suite", "always-fails"]) == 4


def test_usage_errors_exit_one():
    assert run_cli(["gen", "dodecahedron", "5"])[0] == 1
    assert run_cli(["gen", "cycle"])[0] == 1
    assert run_cli(["formula", "nope", "3"])[0] == 1
    assert run_cli(["formula", "grid", "4"])[0] == 1  # missing second parameter
    assert run_cli(["verify", "--suite", "nope"])[0] == 1
    assert run_cli(["nonsense"])[0] == 1


def test_input_errors_exit_two(tmp_path):
    bad = tmp_path / "bad.el"
    bad.write_text("2 1\n0 0\n")
    assert run_cli(["dim", "--input", str(bad), "--k", "1"])[0] == 2
    assert run_cli(["dim", "--k", "1"], stdin_text="not a graph")[0] == 2
    assert run_cli(["gen", "cycle", "2"])[0] == 2
    missing = tmp_path / "missing.el"
    assert run_cli(["dim", "--input", str(missing), "--k", "1"])[0] == 2


def test_size_limit_exit_three():
    _, text, _ = run_cli(["gen", "cycle", "20"])
    code, _, err = run_cli(
        ["dim", "--k", "1", "--mode", "integer", "--limit", "10"], stdin_text=text
    )
    assert code == 3
    assert "limit" in err


def test_gen_deterministic_seed():
    a = run_cli(["gen", "random-tree", "12", "--seed", "5"])[1]
    b = run_cli(["gen", "random-tree", "12", "--seed", "5"])[1]
    c = run_cli(["gen", "random-tree", "12", "--seed", "6"])[1]
    assert a == b != c


def test_threads_flag_same_answer():
    base = cli_run_capture(["verify", "--suite", "noniso_pair"])
    threaded = cli_run_capture(["--threads", "2", "verify", "--suite", "noniso_pair"])
    assert base == threaded == 0


def cli_run_capture(argv):
    return cli.main(argv)
