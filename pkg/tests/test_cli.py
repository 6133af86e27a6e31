import json
import subprocess
import sys

import pytest

from markoff_forge.cli import RunConfig, UsageError, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_graph(capsys, tmp_path):
    code, out, err = run(capsys, "graph", "--p", "13", "--kappa", "0", "--format", "dot")
    assert code == 0 and out.startswith("graph G {")
    assert "vertices=209" in err and "[208, 1]" in err
    code, out, _ = run(capsys, "graph", "--p", "7", "--format", "json")
    assert json.loads(out)["vertex_count"] == 29
    target = tmp_path / "g.graphml"
    assert run(capsys, "graph", "--p", "7", "--format", "graphml", "--out", str(target))[0] == 0
    assert "<graphml" in target.read_text()


def test_bad_prime_is_usage_error(capsys):
    code, _, err = run(capsys, "graph", "--p", "4")
    assert code == 2 and "prime" in err
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--p", "7"])
    assert exc.value.code == 2


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "--n", "2", "--kappa", "0", "--p", "19")
    assert code == 0 and out.strip() == "{(7,14), (18,14)}"
    code, out, err = run(capsys, "solve", "--n", "2", "--kappa", "3", "--p", "19")
    assert out.strip() == "***" and "warning" in err and code == 1
    code, out, _ = run(capsys, "solve", "--n", "2", "--kappa", "0", "--p", "7", "--format", "json")
    assert code == 1 and json.loads(out)["dist_pairs"] == []


def test_cert_cycles_disjoint(capsys):
    code, out, _ = run(capsys, "cert", "--n", "2", "--kappa", "0", "--p", "19", "--alpha", "7", "--format", "json")
    assert code == 0 and json.loads(out)["flags"]["verified"]
    code, out, _ = run(capsys, "cycles", "--n", "1", "--kappa", "6", "--p", "13", "--format", "json")
    assert code == 0 and json.loads(out)["lengths"] == [6, 9, 10]
    code, out, _ = run(capsys, "disjoint", "--n", "1", "--kappa", "0", "--p", "11")
    assert code == 0 and "disjoint True" in out
    assert run(capsys, "disjoint", "--n", "1", "--kappa", "2", "--p", "11")[0] == 1
    assert run(capsys, "cert", "--n", "2", "--kappa", "0", "--p", "19", "--alpha", "3")[0] == 2


def test_tables_and_topo(capsys):
    code, out, _ = run(capsys, "tables")
    assert code == 0 and "19 | {(7,14), (18,14)}" in out
    code, out, _ = run(capsys, "topo", "--p", "7", "--kind", "k33", "--exhaustive")
    assert code == 1 and "proven absent" in out
    code, out, _ = run(capsys, "topo", "--p", "11", "--kind", "2k33", "--format", "json")
    assert code == 0 and json.loads(out)["kind"] == "TwoK33"
    code, out, _ = run(capsys, "topo", "--p", "13", "--kind", "census", "--format", "json")
    assert json.loads(out)["s"] == 18


def test_density_and_identities(capsys):
    code, out, _ = run(capsys, "density", "--kappa", "0", "--X", "3000", "--format", "csv")
    assert code == 0 and out.startswith("kappa,X")
    code, out, _ = run(capsys, "identities", "--m-max", "6")
    assert code == 0 and "0 failures" in out


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig("graph", p=9).validate()
    with pytest.raises(UsageError):
        RunConfig("solve", p=7, n=0).validate()
    RunConfig("graph", p=7).validate()


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "markoff_forge.cli", "solve", "--n", "3", "--kappa", "1", "--p", "7"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "{(0,2), (4,2)}"
