import json
import subprocess
import sys

import pytest

from kummercodes.cli import (
    EXIT_CONFIG,
    EXIT_OK,
    EXIT_PRECONDITION,
    EXIT_VERIFY,
    main,
    write_reference_configs,
)


@pytest.fixture(scope="module")
def cfg_dir(tmp_path_factory):
    directory = tmp_path_factory.mktemp("configs")
    write_reference_configs(directory)
    return directory


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_semigroup_subcommand(capsys, cfg_dir):
    code, out, _ = run_cli(
        capsys, "semigroup", "--curve", str(cfg_dir / "f64_y9.cfg"), "--place", "inf"
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["gaps"] == [1, 2, 3, 5, 6, 7, 10, 11, 14, 15, 19, 23]
    assert payload["generators"] == [4, 9]
    assert payload["place"] == "P_inf"


def test_semigroup_text_and_csv_views(capsys, cfg_dir):
    code, out, _ = run_cli(
        capsys, "semigroup", "--curve", str(cfg_dir / "f25_y3.cfg"),
        "--place", "1", "--format", "text",
    )
    assert code == EXIT_OK and "gaps: 1 2 4 7" in out
    code, out, _ = run_cli(
        capsys, "semigroup", "--curve", str(cfg_dir / "f25_y3.cfg"),
        "--place", "1", "--format", "csv",
    )
    assert code == EXIT_OK and "gaps,1;2;4;7" in out


def test_deterministic_output(capsys, cfg_dir):
    args = ("twopoint", "--curve", str(cfg_dir / "f64_y9.cfg"), "--gamma")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == EXIT_OK
    assert out1 == out2
    pairs = json.loads(out1)["pairs"]
    assert pairs[0] == [1, 20] and pairs[-1] == [23, 1] and len(pairs) == 12


def test_twopoint_member_verdicts(capsys, cfg_dir):
    code, out, _ = run_cli(
        capsys, "twopoint", "--curve", str(cfg_dir / "f64_y9.cfg"),
        "--member", "10", "10",
    )
    payload = json.loads(out)
    assert code == EXIT_OK
    assert payload["verdict"] == "gap, pure"
    assert payload["member_formula"] is False and payload["member_oracle"] is False
    assert payload["pure_gap_formula"] is True and payload["pure_gap_oracle"] is True

    code, out, _ = run_cli(
        capsys, "twopoint", "--curve", str(cfg_dir / "f64_y9.cfg"),
        "--member", "0", "0",
    )
    assert code == EXIT_OK and json.loads(out)["verdict"] == "member"

    code, out, _ = run_cli(
        capsys, "twopoint", "--curve", str(cfg_dir / "f64_y9.cfg"),
        "--member", "19", "10",
    )
    assert code == EXIT_OK and json.loads(out)["verdict"] == "member"


def test_twopoint_pure_gaps(capsys, cfg_dir):
    code, out, _ = run_cli(
        capsys, "twopoint", "--curve", str(cfg_dir / "f25_y3.cfg"),
        "--pure-gaps", "16",
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["pure_gaps"] == [[1, 1], [1, 2], [1, 4], [2, 1], [4, 1]]
    assert payload["count"] == 5


def test_code_subcommand(capsys, cfg_dir, tmp_path):
    matrix_path = tmp_path / "gen.txt"
    code, out, _ = run_cli(
        capsys, "code", "--curve", str(cfg_dir / "f25_y3.cfg"),
        "--G", "5P_inf", "--exact-d", "--matrix-out", str(matrix_path),
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert (payload["n"], payload["k"]) == (65, 3)
    assert payload["designed_d"] == 60 and payload["exact_d"] == 60
    assert payload["G"] == "5P_inf"
    text = matrix_path.read_text(encoding="utf-8")
    assert len(text.splitlines()) == 3
    assert "\r" not in text and text.endswith("\n")


def test_code_omega_with_box_upgrade(capsys, cfg_dir):
    code, out, _ = run_cli(
        capsys, "code", "--curve", str(cfg_dir / "f64_y9.cfg"),
        "--G", "19P_inf + 19P_1", "--omega",
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert (payload["n"], payload["k"]) == (255, 228)
    assert payload["designed_d"] == 18 and payload["d_kind"] == "homma_kim"

    code, out, _ = run_cli(
        capsys, "code", "--curve", str(cfg_dir / "f25_y6.cfg"),
        "--G", "25P_inf + 1P_1", "--omega",
    )
    payload = json.loads(out)
    assert (payload["n"], payload["k"]) == (124, 107)
    assert payload["designed_d"] == 10


def test_code_budget_notice(capsys, cfg_dir, monkeypatch):
    monkeypatch.setenv("KUMMER_BUDGET", "100")
    code, out, err = run_cli(
        capsys, "code", "--curve", str(cfg_dir / "f25_y3.cfg"),
        "--G", "5P_inf", "--exact-d",
    )
    assert code == EXIT_OK
    assert "exact_d" not in json.loads(out)
    assert "budget" in err


def test_code_shorten_flag(capsys, cfg_dir):
    code, out, _ = run_cli(
        capsys, "code", "--curve", str(cfg_dir / "f64_y9.cfg"),
        "--G", "19P_inf + 19P_1", "--omega", "--shorten", "29",
    )
    payload = json.loads(out)
    assert payload["shortened"]["n"] == 226 and payload["shortened"]["k"] == 199
    assert payload["shortened"]["designed_d"] == 18


def test_error_exit_codes(capsys, cfg_dir, tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("p = 5\ne = 2\nm = 3\n", encoding="utf-8")  # missing keys
    code, _, err = run_cli(capsys, "semigroup", "--curve", str(bad))
    assert code == EXIT_CONFIG and "missing" in err

    code, _, err = run_cli(capsys, "semigroup", "--curve", str(tmp_path / "nope.cfg"))
    assert code == EXIT_CONFIG

    code, _, err = run_cli(
        capsys, "semigroup", "--curve", str(cfg_dir / "f25_y3.cfg"), "--place", "9"
    )
    assert code == EXIT_PRECONDITION and "out of range" in err

    code, _, err = run_cli(
        capsys, "code", "--curve", str(cfg_dir / "f25_y3.cfg"), "--G", "5Q_inf"
    )
    assert code == EXIT_PRECONDITION

    bad_m = tmp_path / "badm.cfg"
    bad_m.write_text(
        "p = 5\ne = 2\nm = 5\nlambda = 1\nf = 0,4,0,0,0,1\n", encoding="utf-8"
    )
    code, _, err = run_cli(capsys, "semigroup", "--curve", str(bad_m))
    assert code == EXIT_PRECONDITION and "divides" in err


def test_verify_paper_passes(capsys):
    code, out, _ = run_cli(capsys, "verify-paper")
    assert code == EXIT_OK
    lines = [l for l in out.splitlines() if l]
    assert len(lines) == 8 and all(l.startswith("PASS") for l in lines)


def test_verify_paper_list(capsys):
    code, out, _ = run_cli(capsys, "verify-paper", "--list")
    assert code == EXIT_OK
    ids = out.splitlines()
    assert "f64_y9/curve" in ids and len(ids) == 8


def test_verify_paper_tampered_fixture(capsys, tmp_path):
    write_reference_configs(tmp_path)
    tampered = tmp_path / "f64_y9.cfg"
    text = tampered.read_text(encoding="utf-8").replace("m = 9", "m = 7")
    tampered.write_text(text, encoding="utf-8")
    code, out, err = run_cli(capsys, "verify-paper", "--fixtures", str(tmp_path))
    assert code == EXIT_VERIFY
    assert "FAIL f64_y9/curve" in out and "genus" in out
    assert "f64_y9/curve" in err


def test_console_entry_point(cfg_dir):
    result = subprocess.run(
        [sys.executable, "-m", "kummercodes.cli", "semigroup",
         "--curve", str(cfg_dir / "f25_y3.cfg")],
        capture_output=True, text=True,
    )
    assert result.returncode == EXIT_OK
    assert json.loads(result.stdout)["generators"] == [3, 5]


def test_output_file(capsys, cfg_dir, tmp_path):
    out_path = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "semigroup", "--curve", str(cfg_dir / "f25_y3.cfg"),
        "--output", str(out_path),
    )
    assert code == EXIT_OK and out == ""
    assert json.loads(out_path.read_text(encoding="utf-8"))["generators"] == [3, 5]
