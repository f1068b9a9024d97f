import json

import pytest

from vactab import config
from vactab.errors import BoundExceeded
from vactab.walks import enumerate_walks


@pytest.fixture(autouse=True)
def isolated(monkeypatch, tmp_path):
    monkeypatch.setenv("VT_CONFIG", str(tmp_path / "missing.json"))
    monkeypatch.delenv("VT_ENUM_BOUND", raising=False)
    monkeypatch.delenv("VT_GROUND_BOUND", raising=False)


def test_defaults():
    cfg = config.load_config()
    assert (cfg.enumeration_bound, cfg.ground_bound, cfg.output_format, cfg.time_budget_ms) == (7, 12, "text", 10_000)


def test_file_then_env(monkeypatch, tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"enumeration_bound": 3, "output_format": "json", "unrelated": 1}))
    monkeypatch.setenv("VT_CONFIG", str(path))
    assert config.load_config().enumeration_bound == 3
    assert config.walk_bound() == 3
    monkeypatch.setenv("VT_ENUM_BOUND", "5")
    assert config.walk_bound() == 5
    assert config.load_config().output_format == "json"


def test_env_bound_applies_to_enumeration(monkeypatch):
    monkeypatch.setenv("VT_ENUM_BOUND", "2")
    with pytest.raises(BoundExceeded):
        enumerate_walks("simplified", 3)


def test_invalid_values_rejected():
    with pytest.raises(ValueError):
        config.CliConfig(enumeration_bound=0)
    with pytest.raises(ValueError):
        config.CliConfig(output_format="xml")
