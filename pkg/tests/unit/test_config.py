"""Tests for run settings and the Ramsey table loader."""

import json

import pytest

from ramseytype.config import ConfigLoader, HarnessSettings, SearchLimits, Settings, WitnessSettings
from ramseytype.errors import ConfigError, ErrorCode


def write(tmp_path, text):
    path = tmp_path / "ramsey.json"
    path.write_text(text, encoding="utf-8")
    return path


class TestSettings:
    def test_default_limits(self):
        limits = Settings.default().limits
        assert limits == SearchLimits(exact_cap=24, node_budget=5_000_000, enumeration_cap=8,
                                      path_exact_cap=18, mono_clique_cap=64)

    def test_default_harness(self):
        assert Settings.default().harness == HarnessSettings(jobs=1, lenient=False, progress=False)

    def test_fallback_only_in_best_effort_mode(self):
        assert WitnessSettings().fallback_enabled
        assert not WitnessSettings(exhaustive_fallback=False).fallback_enabled
        assert not WitnessSettings(mode="paper").fallback_enabled

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            WitnessSettings(mode="fast")


class TestRamseyTableLoader:
    def test_valid_table(self, tmp_path):
        path = write(tmp_path, json.dumps({"values": [
            {"colors": 2, "order": 4, "value": 18},
            {"colors": 3, "order": 3, "value": 17},
        ]}))
        assert ConfigLoader().load_ramsey_table(path) == {(2, 4): 18, (3, 3): 17}

    def test_missing_values_is_empty(self, tmp_path):
        assert ConfigLoader().load_ramsey_table(write(tmp_path, "{}")) == {}

    @pytest.mark.parametrize("text", [
        "{not json",
        "[1, 2]",
        '{"values": {"colors": 2}}',
        '{"values": [{"colors": 2, "order": 4}]}',
        '{"values": [{"colors": 2, "order": 4, "value": 0}]}',
        '{"values": [{"colors": true, "order": 4, "value": 18}]}',
        '{"values": [7]}',
    ])
    def test_bad_tables(self, tmp_path, text):
        with pytest.raises(ConfigError) as exc:
            ConfigLoader().load_ramsey_table(write(tmp_path, text))
        assert exc.value.code == ErrorCode.E401
        assert str(tmp_path) in exc.value.message

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError) as exc:
            ConfigLoader().load_ramsey_table(tmp_path / "absent.json")
        assert exc.value.code == ErrorCode.E401
