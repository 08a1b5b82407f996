"""Command-line driver: file round trips, reports, and exit codes."""
import io

import pytest

from reeselim import parse_algebra
from reeselim.cli import main

EX69 = "ring: Q[Y,Z]\ngen: Z^2+Y^5 w 2\n"
EX610 = "ring: F2[Y,Z]\ngen: Z^2+Y^5 w 2\n"
EX514 = "ring: F2[X,Y]\ngen: X^4+X^2*Y^5 w 4\n"


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def ex69(tmp_path):
    path = tmp_path / "ex69.alg"
    path.write_text(EX69)
    return str(path)


@pytest.fixture
def ex610(tmp_path):
    path = tmp_path / "ex610.alg"
    path.write_text(EX610)
    return str(path)


def test_saturate_normalized_output(ex69):
    code, text = run(["saturate", ex69, "--normalize"])
    assert code == 0
    assert "gen: Z w 1" in text and "gen: Y^4 w 1" in text
    assert text.strip().splitlines()[-1].startswith("#! generators:")


def test_saturate_output_round_trips(ex610):
    code, text = run(["saturate", ex610])
    assert code == 0
    body = "\n".join(line for line in text.splitlines()
                     if not line.startswith("#!")) + "\n"
    G = parse_algebra(body)
    assert any(str(g.poly) == "Y^4" and g.weight == 1 for g in G.generators)


def test_weight_one_algebra_is_fixed_by_saturation(tmp_path):
    path = tmp_path / "flat.alg"
    path.write_text("ring: Q[Y,Z]\ngen: Y+Z w 1\n")
    code, text = run(["saturate", str(path)])
    assert code == 0 and "gen: Y+Z w 1" in text
    assert "#! generators: 1" in text


def test_sing_reports_points(ex610):
    code, text = run(["sing", ex610])
    assert code == 0
    assert "point: 0,0" in text
    assert "#! ideal-generators:" in text


def test_point_invariant_commands(tmp_path):
    path = tmp_path / "e0.alg"
    path.write_text(EX514)
    code, text = run(["ord", str(path), "--at", "0,0"])
    assert code == 0 and "#! ord: 1" in text
    code, text = run(["e0", str(path), "--at", "0,0"])
    assert code == 0 and "#! e0: 2" in text
    path3 = tmp_path / "tau.alg"
    path3.write_text("ring: F2[X,Y,Z]\ngen: Z^2+Y^5 w 2\ngen: X^2 w 2\n")
    code, text = run(["tau", str(path3), "--at", "0,0,0"])
    assert code == 0 and "#! tau: 2" in text


def test_eliminate_via_stdin(monkeypatch):
    sat = EX610 + "gen: Y^4 w 1\n"
    code, text = run(["eliminate", "-", "--monic", "0", "--var", "Z"],
                     stdin=sat, monkeypatch=monkeypatch)
    assert code == 0
    assert "gen: Y^8 w 2" in text


def test_blowup_chart(ex69):
    code, text = run(["blowup", ex69, "--center", "Y,Z", "--chart", "Y"])
    assert code == 0
    assert "Y^5+Y^2*Z^2" not in text  # weighted, not total
    assert "gen: Y^3+Z^2 w 2" in text


def test_ramify_verify_agreement(tmp_path):
    path = tmp_path / "ram.alg"
    path.write_text("ring: F5[Y,Z]\ngen: Z^2-Y w 2\n")
    code, text = run(["ramify-verify", str(path), "--var", "Z"])
    assert code == 0
    assert "#! agreement: true points: 5 mismatches: 0" in text


def test_ramify_verify_field_override(tmp_path):
    path = tmp_path / "ram2.alg"
    path.write_text("ring: F2[Y,Z]\ngen: Z^2+Y w 2\n")
    code, text = run(["ramify-verify", str(path), "--field", "F5",
                      "--var", "Z"])
    assert code == 0
    assert "points: 5" in text


def test_scenario_command(capsys):
    code, text = run(["scenario", "ex6.10"])
    assert code == 0
    assert "#! passed:" in text and "FAIL" not in text


def test_usage_errors_exit_two(tmp_path):
    code, _ = run(["saturate", str(tmp_path / "missing.alg")])
    assert code == 2
    bad = tmp_path / "bad.alg"
    bad.write_text("ring: F2[Y,Z]\ngen: W^3 w 1\n")
    code, _ = run(["saturate", str(bad)])
    assert code == 2
    code, _ = run(["no-such-command"])
    assert code == 2


def test_transversality_failure_exits_two(tmp_path):
    path = tmp_path / "flat.alg"
    path.write_text("ring: Q[Y,Z]\ngen: Z^2+Y w 2\n")
    code, text = run(["eliminate", str(path), "--monic", "0", "--var", "Z"])
    assert code == 2 and "error:" in text
