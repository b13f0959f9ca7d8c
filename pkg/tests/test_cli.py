import json
import math

import jsonschema
import pytest

from schur_szego import cli
from schur_szego.cli import ENVELOPE_SCHEMA, read_poly_file, write_poly_file
from schur_szego.exactpoly import RationalPoly
from fractions import Fraction as F


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def parse_envelope(stdout: str) -> dict:
    env = json.loads(stdout)
    jsonschema.validate(env, ENVELOPE_SCHEMA)
    return env


def test_triangle_csv(capsys):
    code, out, _ = run_cli(capsys, "triangle", "--rows", "5", "--csv")
    assert code == 0
    assert out.splitlines() == ["1", "1,1", "1,3,1", "1,6,6,1", "1,10,20,10,1"]


def test_triangle_json(capsys):
    code, out, _ = run_cli(capsys, "triangle", "--rows", "3", "--json")
    env = parse_envelope(out)
    assert code == 0
    assert env["payload"]["rows"] == [[1], [1, 1], [1, 3, 1]]


def test_narayana_checks(capsys):
    code, out, _ = run_cli(capsys, "narayana", "--n", "7", "--check-recurrence",
                           "--check-catalan", "--check-dyck")
    env = parse_envelope(out)
    assert code == 0
    assert env["status"] == "pass"
    assert env["payload"]["catalan"] == 429


def test_poly_file_round_trip(tmp_path):
    poly = RationalPoly([F(1, 3), F(-2), F(0), F(5, 7)])
    path = tmp_path / "p.poly"
    write_poly_file(str(path), poly)
    assert read_poly_file(str(path)) == poly
    lines = path.read_text().splitlines()
    assert lines[0] == "3"
    assert lines[1] == "1/3"


def test_css_compose(capsys, tmp_path):
    p = tmp_path / "p.poly"
    q = tmp_path / "q.poly"
    write_poly_file(str(p), RationalPoly([0, 1, 2, 1]))   # x(x+1)^2
    write_poly_file(str(q), RationalPoly([1, 2, 1]))      # (x+1)^2
    code, out, _ = run_cli(capsys, "css", "--compose", str(p), str(q), "--m", "3")
    env = parse_envelope(out)
    assert code == 0
    assert env["payload"]["coefficients"] == ["0", "2/3", "2/3"]


def test_css_phi(capsys):
    code, out, _ = run_cli(capsys, "css", "--phi", "3")
    env = parse_envelope(out)
    assert code == 0
    assert env["payload"]["linear"] == [["3/2", "-1/2"], ["0", "1"]]
    assert env["payload"]["offset"] == ["-1/2", "0"]


def test_css_usage_error(capsys):
    code, _, err = run_cli(capsys, "css")
    assert code == 2
    assert "need either" in err


def test_eigen(capsys):
    code, out, _ = run_cli(capsys, "eigen", "--n", "6", "--j", "2")
    env = parse_envelope(out)
    assert code == 0
    assert env["status"] == "pass"
    assert env["payload"]["eigenvalues"][0] == "1"
    assert env["payload"]["eigenpolynomial"] == ["0", "1", "4", "6", "4", "1"]
    assert all(env["payload"]["structure_checks"].values())


def test_limits(capsys):
    code, out, _ = run_cli(capsys, "limits", "--j", "3", "--ns", "20,40,80")
    env = parse_envelope(out)
    assert code == 0
    assert env["status"] == "pass"
    assert env["payload"]["narayana_coefficients"] == [1, 3, 1]
    assert float(env["payload"]["max_deviation"]) <= 1e-2


def test_roots_modes(capsys):
    code, out, _ = run_cli(capsys, "roots", "--n", "6")
    assert code == 0
    assert parse_envelope(out)["payload"]["hyperbolic"] is True
    code, out, _ = run_cli(capsys, "roots", "--n", "6", "--isolate")
    env = parse_envelope(out)
    assert code == 0
    assert env["payload"]["distinct_real_roots"] == 6
    code, out, _ = run_cli(capsys, "roots", "--n", "6", "--interlace")
    env = parse_envelope(out)
    assert code == 0
    assert env["payload"]["verdict"] == "strict-interlace"
    assert env["payload"]["gcd_is_x"] is True


def test_measure(capsys, tmp_path):
    out_path = tmp_path / "fig1.csv"
    code, out, _ = run_cli(capsys, "measure", "--n", "20", "--grid", "16",
                           "--out", str(out_path))
    env = parse_envelope(out)
    assert code == 0
    ks = float(env["payload"]["ks"])
    assert 0 < ks < 0.2
    lines = out_path.read_text().splitlines()
    assert lines[0] == "x,empirical,theoretical"
    assert len(lines) == 17
    first = lines[1].split(",")
    assert float(first[0]) == -1.0
    # 17 significant digits round-trip binary64 exactly
    for tok in lines[5].split(","):
        assert format(float(tok), ".17g") == tok
    last = lines[-1].split(",")
    assert float(last[1]) == 1.0 and float(last[2]) == 1.0


def test_poincare_fibonacci(capsys):
    code, out, _ = run_cli(capsys, "poincare", "--preset", "fibonacci",
                           "--tmax", "50")
    env = parse_envelope(out)
    assert code == 0
    assert abs(float(env["payload"]["limit"]) - (1 + math.sqrt(5)) / 2) < 1e-9


def test_poincare_narayana_no_limit(capsys):
    code, out, _ = run_cli(capsys, "poincare", "--preset", "narayana",
                           "--x", "-1", "--tmax", "40")
    env = parse_envelope(out)
    assert code == 0
    assert env["payload"]["no_limit_claim"] is True
    assert "limit" not in env["payload"]


def test_poincare_narayana_x2(capsys):
    code, out, _ = run_cli(capsys, "poincare", "--preset", "narayana",
                           "--x", "2", "--tmax", "60")
    env = parse_envelope(out)
    assert code == 0
    assert abs(float(env["payload"]["limit"]) - (3 + 2 * math.sqrt(2))) < 1e-3


def test_unknown_subcommand_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_all_smoke(capsys):
    code, out, err = run_cli(capsys, "verify-all", "--max-n", "8")
    env = parse_envelope(out)
    assert code == 0
    assert env["status"] == "pass"
    assert len(env["payload"]["checks"]) == 10
    assert err.count("PASS") == 10
