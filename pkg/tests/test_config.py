"""Tests the budget configuration layers."""

from pathlib import Path

import pytest

from cellideals.config import ENV_VAR, BudgetConfig, load_budget_config


def test_defaults(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(ENV_VAR, raising=False)
    config = load_budget_config()
    assert config == BudgetConfig()
    assert config.exact_rank_limit == 5
    assert config.to_budget().max_seconds is None


def test_file_then_env(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    path = tmp_path / "budget.yaml"
    path.write_text("max_exact_rank: 4\nmax_seconds: 10\n", encoding="utf-8")
    monkeypatch.setenv(ENV_VAR, "max_seconds=60, allow_exact_rank6=true")
    config = load_budget_config(path)
    assert config.max_exact_rank == 4
    assert config.max_seconds == 60
    assert config.allow_exact_rank6
    assert config.exact_rank_limit == 6


def test_bad_env(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(ENV_VAR, "max_seconds")
    with pytest.raises(ValueError):
        load_budget_config()
