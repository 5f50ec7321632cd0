"""End-to-end tests for the subperm CLI."""

import json
from pathlib import Path
from unittest.mock import patch

import pytest

from subperm_patterns.main import build_parser, main, run
from subperm_patterns.oracle_suite import OracleCheck, OracleReport

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
RUNNING_TREE = "(1 L:(3 L:(4 R:(5))) R:(2 R:(6 R:(7 L:(8)))))"


@pytest.fixture
def cli(tmp_path, monkeypatch, capsys):
    """Runs the CLI against built-in defaults and returns (status, stdout, stderr)."""
    for name in ("SUBPERM_ORACLE_CEILING", "SUBPERM_WORKERS", "SUBPERM_SEED"):
        monkeypatch.delenv(name, raising=False)
    missing = str(tmp_path / "no-config.yaml")

    def invoke(*argv):
        status = run(["--config", missing, *argv])
        captured = capsys.readouterr()
        return status, captured.out, captured.err

    return invoke


def test_cli_help_message(capsys):
    """Test the help message lists every subcommand."""
    with patch("sys.argv", ["subperm", "--help"]):
        with pytest.raises(SystemExit) as excinfo:
            main()
    assert excinfo.value.code == 0
    help_text = capsys.readouterr().out
    for command in ("convert", "subperm", "count", "asym", "prob", "simulate", "oracle"):
        assert command in help_text


def test_usage_error_exits_with_one(capsys):
    with pytest.raises(SystemExit) as excinfo:
        run(["count", "--bogus"])
    assert excinfo.value.code == 1


def test_malformed_permutation_is_a_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        run(["subperm", "1 1 2"])
    assert excinfo.value.code == 1


def test_convert_both_ways(cli):
    status, out, _ = cli("convert", "--to-tree", "4 5 3 1 2 6 8 7")
    assert status == 0
    assert out == RUNNING_TREE + "\n"

    status, out, _ = cli("convert", "--to-perm", RUNNING_TREE)
    assert status == 0
    assert out == "4 5 3 1 2 6 8 7\n"


def test_convert_psi(cli):
    status, out, _ = cli("convert", "--to-tree", "1", "--bijection", "psi")
    assert status == 0
    assert out == "(L:* R:*)\n"


def test_subperm_csv(cli):
    status, out, _ = cli("subperm", "4 5 3 1 2 6 8 7")
    assert status == 0
    lines = out.split("\r\n")
    assert lines[0] == "k,start,end,size,pattern"
    assert len([line for line in lines if line]) == 9


def test_subperm_json(cli):
    status, out, _ = cli("subperm", "4 5 3 1 2 6 8 7", "--k", "1", "--format", "json")
    assert status == 0
    document = json.loads(out)
    assert document["schema_version"] == 1
    assert document["sub_permutations"][0]["pattern"] == "4 5 3 1 2 6 8 7"


def test_subperm_k_out_of_range(cli):
    status, _, err = cli("subperm", "2 1 3", "--k", "4")
    assert status == 2
    assert err.startswith("Error:")


def test_count_bfile(cli):
    status, out, _ = cli("count", "--family", "pj", "--j", "1", "--n-max", "10")
    assert status == 0
    values = [int(line.split()[1]) for line in out.splitlines()]
    assert values == [1, 1, 0, 1, 2, 6, 16, 45, 126, 358, 1024]


def test_count_needs_index(cli):
    status, _, err = cli("count", "--family", "pj", "--n-max", "5")
    assert status == 2
    assert "--j" in err


def test_count_json(cli):
    status, out, _ = cli("count", "--family", "catalan", "--n-max", "4", "--format", "json")
    assert status == 0
    document = json.loads(out)
    assert document["schema_version"] == 1
    assert document["coefficients"] == ["1", "1", "2", "5", "14"]


def test_prob_exact_csv(cli):
    status, out, _ = cli("prob", "--pattern", "213", "--n", "5", "--k", "2", "--method", "exact")
    assert status == 0
    assert out == "n,k,method,value,truncation\r\n5,2,exact,0.433333333333,\r\n"


def test_prob_series_from_file(cli):
    status, out, _ = cli(
        "prob", "--pattern", "1324", "--n", "50", "--k", "10",
        "--seq-file", str(DATA_DIR / "av_1324.txt"), "--format", "json",
    )
    assert status == 0
    row = json.loads(out)["rows"][0]
    assert row["truncation"] == 20
    assert 0.0 < row["value"] < 1.0


def test_prob_asym_only_for_two(cli):
    status, _, _ = cli("prob", "--pattern", "213", "--n", "40", "--k", "3", "--method", "asym")
    assert status == 2


def test_prob_conditional_sweep_small_k(cli):
    status, out, _ = cli("prob", "--pattern", "213", "--n", "50", "--k-sweep", "--method", "conditional")
    assert status == 0
    lines = out.strip().split("\r\n")
    assert len(lines) == 51
    assert lines[2].startswith("50,2,")


def test_simulate_is_byte_identical(cli, tmp_path):
    paths = [tmp_path / "first.csv", tmp_path / "second.csv", tmp_path / "parallel.csv"]
    common = ("simulate", "--pattern", "213", "--n", "10", "--k-from", "1", "--k-to", "10",
              "--samples", "2000", "--seed", "99")
    assert cli("--output", str(paths[0]), *common)[0] == 0
    assert cli("--output", str(paths[1]), *common)[0] == 0
    assert cli("--output", str(paths[2]), *common, "--workers", "2")[0] == 0
    first = paths[0].read_bytes()
    assert first == paths[1].read_bytes() == paths[2].read_bytes()
    assert first.startswith(b"n,k,estimate,stderr,samples,capped,seed\r\n")
    assert first.count(b"\r\n") == 11


def test_simulate_needs_a_size(cli):
    status, _, err = cli("simulate", "--pattern", "213", "--k", "2")
    assert status == 2
    assert "--n" in err


def test_oracle_small(cli):
    status, out, _ = cli("oracle", "--check", "all", "--n-max", "3")
    assert status == 0
    assert out == "OK (n <= 3): bijections 24/24, tables 54/54, probability 8/8\n"


def test_oracle_above_ceiling(cli):
    status, _, err = cli("oracle", "--n-max", "12")
    assert status == 3
    assert "ceiling" in err


def test_oracle_failure_exit_code(cli, mocker):
    report = OracleReport(2, ["tables"], [OracleCheck("tables", "pj(1)", 2, False, "expected 1, found 2")])
    mocker.patch("subperm_patterns.main.run_oracle_suite", return_value=report)
    status, out, err = cli("oracle", "--check", "tables", "--n-max", "2")
    assert status == 4
    assert out.startswith("FAILED (n <= 2)")
    assert "FAIL tables/pj(1) n=2" in out
    assert "oracle check(s) failed" in err


def test_parser_defaults():
    args = build_parser().parse_args(["prob", "--pattern", "213", "--n", "10", "--k-sweep"])
    assert args.method == "series"
    assert args.denominator == "mean_size"
    assert args.k is None
