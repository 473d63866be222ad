"""End-to-end checks of the command-line interface: every subcommand runs,
JSON output is well formed, and failures map to the documented exit codes."""

import json

import pytest

from carlitz.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_ok(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return out


# ---------------------------------------------------------------- smoke, one per subcommand


def test_act(capsys):
    out = run_ok(capsys, "act", "--q", "3", "--M", "T", "--u", "T+1")
    assert "T^3" in out


def test_operator(capsys):
    out = run_ok(capsys, "operator", "--q", "3", "--M", "T^2")
    assert "T^3+T" in out


def test_cyclotomic(capsys):
    out = run_ok(capsys, "cyclotomic", "--q", "3", "--P", "T", "--n", "1")
    assert out.strip() == "x^2 + T"


def test_torsion_padic(capsys):
    out = run_ok(capsys, "torsion-padic", "--q", "3", "--P", "T", "--N", "3")
    assert "T^2+T+1" in out


def test_torsion_vq(capsys):
    out = run_ok(capsys, "torsion-vq", "--q", "3", "--M", "T", "--prec", "8")
    assert "s^-1" in out


def test_divide_t(capsys):
    out = run_ok(capsys, "divide-t", "--q", "3", "--u", "s^-1 + O(s^8)")
    assert out.count("\n") == 3  # q branches


def test_completed_act(capsys):
    run_ok(capsys, "completed-act", "--q", "3", "--M", "T+1", "--u", "s^-1 + O(s^10)")


def test_dirichlet(capsys):
    out = run_ok(capsys, "dirichlet", "--q", "3", "--target", "s^-1 + O(s^12)", "--n", "2")
    assert "s^-1" in out


def test_symbol(capsys):
    out = run_ok(capsys, "symbol", "--q", "3", "--A", "T", "--P", "T+1", "--d", "2")
    assert out.strip().endswith("2")


def test_reciprocity_cmd(capsys):
    out = run_ok(capsys, "reciprocity", "--q", "3", "--P", "T", "--Q", "T+1", "--d", "2")
    assert "True" in out


def test_split_commands(capsys):
    out = run_ok(capsys, "split-kummer", "--q", "3", "--A", "T", "--P", "T+1", "--d", "2")
    assert out.strip().endswith("2")
    out = run_ok(capsys, "split-cyclotomic", "--q", "3", "--P", "T", "--A", "T+1")
    assert out.strip().endswith("2")


def test_xi_and_newton(capsys):
    out = run_ok(capsys, "xi", "--q", "3", "--A", "T^2")
    assert "x^4" in out
    out = run_ok(capsys, "newton", "--q", "3", "--A", "T^2")
    assert "[0, -2]" in out and "[4, 0]" in out


def test_kummer_map_and_solve(capsys):
    out = run_ok(capsys, "kummer", "map", "--q", "3", "--u", "s^-2 + O(s^20)")
    assert out.startswith("T^2")
    run_ok(capsys, "kummer", "solve", "--q", "3", "--M", "T^2", "--prec", "12")


def test_star(capsys):
    run_ok(capsys, "star", "--q", "3", "--A", "T", "--nu", "T^-2 + O(T^-10)")


def test_tangent_and_family(capsys):
    out = run_ok(capsys, "tangent", "--q", "3", "--f1", "1/T", "--f2", "0")
    assert "true" in out
    out = run_ok(capsys, "family", "--q", "3", "--f1", "1/T", "--f2", "0")
    assert "1/(T+1)" in out


def test_descartes_subcommands(capsys):
    out = run_ok(capsys, "descartes", "family", "--q", "3", "--f1", "1/T", "--f2", "0")
    assert "0" in out
    run_ok(capsys, "descartes", "eval", "--q", "3", "--curvatures", "1/T;0;1/(T+1);1/(T+2)")
    run_ok(capsys, "descartes", "sweep", "--q", "3", "--count", "5", "--seed", "2")


def test_soddy(capsys):
    out = run_ok(capsys, "soddy", "--n", "2", "--ks=-1,2,2,3")
    assert out.strip().endswith("0")


def test_tree_subcommands(capsys):
    out = run_ok(capsys, "tree", "neighbors", "--q", "3", "--vertex", "0;0")
    assert len(out.strip().splitlines()) == 4
    out = run_ok(capsys, "tree", "distance", "--q", "3", "--v1", "0;0", "--v2", "2;T^-1")
    assert out.strip().endswith("2")
    out = run_ok(capsys, "tree", "export", "--q", "3", "--radius", "1")
    assert "graph" in out.lower()


def test_ray(capsys):
    out = run_ok(capsys, "ray", "--q", "3", "--f", "1/T", "--steps", "4")
    assert len(out.strip().splitlines()) == 5


def test_normal_basis(capsys):
    out = run_ok(capsys, "normal-basis", "--q", "3")
    assert "1" in out


def test_exp(capsys):
    out = run_ok(capsys, "exp", "--q", "3", "--z", "s^2 + O(s^30)", "--terms", "6")
    assert "s^2" in out


def test_period(capsys):
    out = run_ok(capsys, "period", "--q", "3", "--N", "2", "--prec", "30")
    assert "T" in out


def test_eisenstein_cmd(capsys):
    out = run_ok(capsys, "eisenstein", "--q", "3", "--basis", "s^-1 + O(s^20)", "--k", "2", "--prec", "20")
    assert "s^4" in out


@pytest.mark.parametrize("kind", ["reciprocity", "descartes", "torsion", "splitting"])
def test_sweeps_pass(capsys, kind):
    code, out, err = run(capsys, "sweep", "--q", "3", "--kind", kind,
                         "--max-deg", "2", "--count", "5", "--N", "3")
    assert code == 0, err
    rows = out.strip().splitlines()
    assert rows == sorted(rows)
    assert all("False" not in r for r in rows)


# ---------------------------------------------------------------- output and errors


def test_json_output_success(capsys):
    out = run_ok(capsys, "act", "--q", "3", "--output", "json", "--M", "T", "--u", "1")
    json.loads(out)


def test_usage_errors_exit_2(capsys):
    code, _, _ = run(capsys, "act", "--q", "3", "--M", "T")  # missing --u
    assert code == 2
    code, _, _ = run(capsys, "no-such-command")
    assert code == 2


def test_domain_errors_exit_1(capsys):
    code, _, err = run(capsys, "symbol", "--q", "3", "--A", "T", "--P", "T^2", "--d", "2")
    assert code == 1
    assert "error" in err


def test_json_error_object(capsys):
    code, _, err = run(
        capsys, "symbol", "--q", "3", "--output", "json", "--A", "T", "--P", "T^2", "--d", "2"
    )
    assert code == 1
    obj = json.loads(err)
    assert set(obj) == {"code", "message", "context"}


def test_precision_error_reports_needed(capsys):
    code, _, err = run(
        capsys, "torsion-vq", "--q", "3", "--output", "json", "--M", "T^3", "--prec", "1"
    )
    assert code == 1
    obj = json.loads(err)
    assert obj["context"].get("needed_precision", 0) >= 4


def test_degree_cap(capsys, monkeypatch):
    monkeypatch.setenv("CARLITZ_MAX_DEG", "2")
    code, _, err = run(capsys, "torsion-padic", "--q", "3", "--P", "T^3+2*T+1", "--N", "3")
    assert code == 2

def test_malformed_series_is_usage_error(capsys):
    code, _, _ = run(capsys, "tree", "distance", "--q", "3", "--v1", "0;0", "--v2", "2;s^-1")
    assert code == 2
