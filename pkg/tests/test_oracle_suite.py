"""Tests for the exhaustive cross-check suites."""

import json

import pytest

from subperm_patterns.errors import InvalidInputError, ResourceLimitError
from subperm_patterns.oracle_suite import (
    SUITES,
    OracleCheck,
    OracleReport,
    bijection_checks,
    probability_checks,
    run_oracle_suite,
    table_checks,
)


class TestRunOracleSuite:
    """Test the suite runner and its ceiling handling."""

    def test_zero_ceiling_is_empty_success(self):
        report = run_oracle_suite(0)
        assert report.passed
        assert report.checks == []
        assert report.summary() == "OK (n <= 0): bijections 0/0, tables 0/0, probability 0/0"

    def test_ceiling_above_configuration(self):
        with pytest.raises(ResourceLimitError):
            run_oracle_suite(6, config={"oracle": {"ceiling": 5}})

    def test_invalid_arguments(self):
        with pytest.raises(InvalidInputError):
            run_oracle_suite(3, ["nonsense"])
        with pytest.raises(InvalidInputError):
            run_oracle_suite(-1)

    def test_counts_at_three(self):
        report = run_oracle_suite(3)
        assert report.passed
        assert report.counts() == {
            "bijections": {"passed": 24, "total": 24},
            "tables": {"passed": 54, "total": 54},
            "probability": {"passed": 8, "total": 8},
        }

    def test_single_suite(self):
        report = run_oracle_suite(4, ["probability"])
        assert report.suites == ["probability"]
        assert {check.suite for check in report.checks} == {"probability"}

    @pytest.mark.slow
    def test_full_run(self):
        report = run_oracle_suite(8, SUITES)
        assert report.passed, report.summary()


class TestSuites:
    @pytest.mark.parametrize("runner", [bijection_checks, table_checks, probability_checks])
    def test_every_check_passes(self, runner):
        checks = runner(6)
        assert checks
        assert all(check.passed for check in checks), [c.to_dict() for c in checks if not c.passed]


class TestOracleReport:
    @pytest.fixture
    def failing(self):
        return OracleReport(
            2,
            ["tables"],
            [
                OracleCheck("tables", "motzkin", 1, True),
                OracleCheck("tables", "pj(1)", 2, False, "expected 1, found 2"),
            ],
        )

    def test_failures(self, failing):
        assert not failing.passed
        assert [check.name for check in failing.failures] == ["pj(1)"]
        assert failing.summary().splitlines() == [
            "FAILED (n <= 2): tables 1/2",
            "  FAIL tables/pj(1) n=2: expected 1, found 2",
        ]

    def test_exports(self, failing):
        assert list(failing.to_frame().columns) == ["suite", "name", "n", "passed", "detail"]
        data = json.loads(failing.to_json())
        assert data["passed"] is False
        assert data["counts"]["tables"] == {"passed": 1, "total": 2}
