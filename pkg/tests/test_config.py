"""Tests for configuration loading."""

import pytest
import yaml

from subperm_patterns.config_manager import (
    DEFAULT_CONFIG,
    get_setting,
    load_config,
    oracle_ceiling,
)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("SUBPERM_ORACLE_CEILING", "SUBPERM_WORKERS", "SUBPERM_SEED"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(
        yaml.safe_dump(
            {
                "oracle": {"ceiling": 8},
                "montecarlo": {"samples": 500},
                "avoidance_sequences": {"1 3 2 4": "data/av_1324.txt"},
            }
        )
    )
    return path


class TestLoadConfig:
    """Test YAML loading over the built-in defaults."""

    def test_missing_file_gives_defaults(self, tmp_path, caplog):
        config = load_config(str(tmp_path / "missing.yaml"))
        assert config == DEFAULT_CONFIG
        assert "not found" in caplog.text

    def test_merge_keeps_unset_keys(self, config_file):
        config = load_config(str(config_file))
        assert config["oracle"]["ceiling"] == 8
        assert config["montecarlo"]["samples"] == 500
        assert config["montecarlo"]["seed"] == DEFAULT_CONFIG["montecarlo"]["seed"]
        assert config["avoidance_sequences"]["1 3 2 4"] == "data/av_1324.txt"

    def test_defaults_are_not_mutated(self, config_file):
        load_config(str(config_file))
        assert DEFAULT_CONFIG["oracle"]["ceiling"] == 11

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("")
        assert load_config(str(path)) == DEFAULT_CONFIG


class TestEnvironmentOverrides:
    def test_override_wins_over_file(self, config_file, monkeypatch):
        monkeypatch.setenv("SUBPERM_ORACLE_CEILING", "6")
        monkeypatch.setenv("SUBPERM_WORKERS", "4")
        config = load_config(str(config_file))
        assert oracle_ceiling(config) == 6
        assert config["montecarlo"]["workers"] == 4

    def test_non_integer_is_ignored(self, tmp_path, monkeypatch, caplog):
        monkeypatch.setenv("SUBPERM_SEED", "abc")
        config = load_config(str(tmp_path / "missing.yaml"))
        assert config["montecarlo"]["seed"] == 20240601
        assert "SUBPERM_SEED" in caplog.text

    def test_default_ceiling_reads_environment(self, monkeypatch):
        assert oracle_ceiling() == 11
        monkeypatch.setenv("SUBPERM_ORACLE_CEILING", "9")
        assert oracle_ceiling() == 9


class TestGetSetting:
    def test_dotted_lookup(self):
        assert get_setting(DEFAULT_CONFIG, "series.h_terms") == 60
        assert get_setting(DEFAULT_CONFIG, "series.missing", 5) == 5
        assert get_setting(DEFAULT_CONFIG, "oracle.ceiling.deeper") is None
