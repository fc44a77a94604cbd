import json

import pytest

from dunklcalc.cli import main
from dunklcalc.poly import parse_poly


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_apply_example(capsys):
    code, out, _ = run_cli(
        capsys, "apply", "--system", "z2:d=1", "--kappa", "1/2", "--xi", "1",
        "--poly", "x1",
    )
    assert code == 0
    assert out.strip() == "2"


def test_pizzetti_example_with_oracle(capsys):
    code, out, _ = run_cli(
        capsys, "pizzetti", "--system", "z2:d=2", "--kappa", "1,0",
        "--poly", "x1^2", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "3/4"
    assert payload["oracle"] == "3/4"
    assert payload["oracle_match"] is True


def test_pizzetti_non_sign_flip_has_no_oracle(capsys):
    code, out, _ = run_cli(
        capsys, "pizzetti", "--system", "b:d=2", "--kappa", "1,2",
        "--poly", "x1^2", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["oracle"] is None


def test_verify_hobson_exit_zero(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "hobson", "--system", "b:d=2", "--kappa", "1,2",
        "--seed", "7",
    )
    assert code == 0
    assert "[PASS]" in out


def test_verify_json_determinism(capsys):
    args = [
        "verify", "laplacian-commutator", "--system", "z2:d=2", "--kappa", "1,3/2",
        "--seed", "3", "--json",
    ]
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2  # byte identical
    payload = json.loads(out1)
    assert payload[0]["suite"] == "laplacian-commutator"
    names = [c["name"] for c in payload[0]["cases"]]
    assert names == sorted(names)
    for case in payload[0]["cases"]:
        assert set(case) >= {"name", "status", "residual", "detail"}
        assert case["residual"] == "0"


def test_verify_report_file(tmp_path, capsys):
    report = tmp_path / "out.json"
    code, _, _ = run_cli(
        capsys, "verify", "transforms", "--system", "z2:d=1", "--kappa", "1/2",
        "--report", str(report),
    )
    assert code == 0
    payload = json.loads(report.read_text())
    assert payload[0]["suite"] == "transforms"
    numeric = [c for c in payload[0]["cases"] if isinstance(c["residual"], float)]
    assert numeric, "transform cases must carry numeric residuals"


def test_cli_round_trip_of_printed_polynomials(capsys):
    code, out, _ = run_cli(
        capsys, "laplacian", "--system", "b:d=2", "--kappa", "1,2",
        "--poly", "x1^4 - x2^4",
    )
    assert code == 0
    reparsed = parse_poly(out.strip(), 2)
    code2, out2, _ = run_cli(
        capsys, "laplacian", "--system", "b:d=2", "--kappa", "1,2",
        "--poly", str(reparsed),
    )
    assert code2 == 0


def test_usage_errors_exit_two(capsys):
    code, _, err = run_cli(
        capsys, "apply", "--system", "z2:d=2", "--kappa", "1,0", "--xi", "1,0",
        "--poly", "x0",
    )
    assert code == 2
    assert "x0" in err
    code, _, _ = run_cli(capsys, "apply", "--system", "nope:d=1", "--kappa", "1",
                         "--xi", "1", "--poly", "x1")
    assert code == 2
    code, _, _ = run_cli(capsys, "apply", "--system", "z2:d=1", "--kappa", "1",
                         "--poly", "x1")  # missing --xi
    assert code == 2


def test_unknown_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_hobson_cli_residual_zero(capsys):
    code, out, _ = run_cli(
        capsys, "hobson", "--system", "a:d=3", "--kappa", "1",
        "--poly", "x1^2*x2 - x3^3", "--profile", "r^(-3)*exp(-1/2*r^2)", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["residual"] == "0"
    assert payload["status"] == "pass"


def test_transform_cli(capsys):
    code, out, _ = run_cli(
        capsys, "transform", "--system", "z2:d=1", "--kappa", "1/2",
        "--poly", "x1", "--y", "1.0", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["hecke_residual"] <= 1e-9
