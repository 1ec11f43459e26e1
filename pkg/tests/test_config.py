"""
Unit tests for runtime configuration, rendering and the acceptance registry.

Core claims:
    - WF_* variables override the defaults and malformed values are rejected
    - JSON rendering is compact, sorted and keeps big integers exact
    - Every acceptance row is registered under a stable name
"""

import json

import pytest

from wonderful import __version__, blocks, frobenius, ktheory, lie
from wonderful.acceptance import ROWS, RowResult
from wonderful.config import (
    CANDIDATE_WINDOW,
    DP_STATE_LIMIT,
    EXPAND_LIMIT,
    LOG_DIR,
    WEYL_RANK_LIMIT,
    WonderfulConfig,
)
from wonderful.errors import ConfigurationError, InvalidPrime, WonderfulError
from wonderful.output import SAFE_INTEGER, render_json, render_pretty, status_line


# -- Helpers -----------------------------------------------------------------

_WF_VARIABLES = (
    "WF_DP_STATE_LIMIT",
    "WF_EXPAND_LIMIT",
    "WF_WEYL_RANK_LIMIT",
    "WF_CANDIDATE_WINDOW",
    "WF_LOG_DIR",
    "WF_LOG_LEVEL",
)


@pytest.fixture
def clean_env(monkeypatch):
    for name in _WF_VARIABLES:
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


# == 1. Environment ===========================================================

class TestConfig:
    def test_defaults(self, clean_env):
        config = WonderfulConfig.from_env()
        assert config.dp_state_limit == DP_STATE_LIMIT
        assert config.expand_limit == EXPAND_LIMIT
        assert config.weyl_rank_limit == WEYL_RANK_LIMIT
        assert config.candidate_window == CANDIDATE_WINDOW
        assert config.log_dir == LOG_DIR
        assert config.log_level == "INFO"

    def test_overrides(self, clean_env):
        clean_env.setenv("WF_DP_STATE_LIMIT", "1000")
        clean_env.setenv("WF_CANDIDATE_WINDOW", "4")
        clean_env.setenv("WF_LOG_LEVEL", "debug")
        config = WonderfulConfig.from_env()
        assert config.dp_state_limit == 1000
        assert config.candidate_window == 4
        assert config.log_level == "DEBUG"

    def test_empty_means_default(self, clean_env):
        clean_env.setenv("WF_EXPAND_LIMIT", "")
        assert WonderfulConfig.from_env().expand_limit == EXPAND_LIMIT

    @pytest.mark.parametrize("name, value", [
        ("WF_DP_STATE_LIMIT", "many"),
        ("WF_EXPAND_LIMIT", "0"),
        ("WF_WEYL_RANK_LIMIT", "-3"),
        ("WF_LOG_LEVEL", "LOUD"),
    ])
    def test_rejects(self, clean_env, name, value):
        clean_env.setenv(name, value)
        with pytest.raises(ConfigurationError):
            WonderfulConfig.from_env()

    def test_error_codes(self):
        error = InvalidPrime("p = 4 is not a prime")
        assert isinstance(error, WonderfulError)
        assert error.code == "invalid_prime"
        assert error.detail == "p = 4 is not a prime"
        assert ConfigurationError("x", detail="y").detail == "y"

    def test_version(self):
        assert __version__ == "1.0.0"

    def test_single_version(self):
        for package in (lie, frobenius, blocks, ktheory):
            assert not hasattr(package, "__version__")


# == 2. Rendering =============================================================

class TestRendering:
    def test_compact_and_sorted(self):
        assert render_json({"b": 1, "a": [True, None]}) == '{"a":[true,null],"b":1}'

    def test_big_integers_become_strings(self):
        data = json.loads(render_json({"n": SAFE_INTEGER + 1, "m": SAFE_INTEGER, "k": -(2 ** 80)}))
        assert data == {"n": str(SAFE_INTEGER + 1), "m": SAFE_INTEGER, "k": str(-(2 ** 80))}

    def test_non_ascii_kept(self):
        assert render_json({"λ": "ω"}) == '{"λ":"ω"}'

    def test_pretty(self):
        text = render_pretty({"count": "14828077", "caps_bind": False, "nested": {"a": 1}})
        assert "14,828,077" in text
        assert "no" in text
        assert "nested:" in text

    def test_status_line(self):
        assert "FAIL" in status_line("rank_sets", False, "missing 2")
        assert "PASS" in status_line("rank_sets", True, "")


# == 3. Acceptance registry ===================================================

class TestAcceptanceRegistry:
    def test_row_names(self):
        assert sorted(ROWS) == sorted([
            "subdivisors", "psl3_candidates", "psl3_guaranteed", "rank_sets", "steinberg",
            "block_partition", "psln_type", "kclass", "chern",
        ])

    def test_row_result_omits_timing(self):
        result = RowResult("chern", "desc", True, {"checked": 1}, 0.25)
        assert result.to_dict() == {"name": "chern", "description": "desc", "passed": True, "detail": {"checked": 1}}

    @pytest.mark.parametrize("name", ["psln_type", "block_partition", "kclass"])
    def test_fast_rows_pass(self, name):
        passed, detail = ROWS[name].check()
        assert passed, detail

    def test_rank_sets_row_marks_structural_shortfall(self):
        passed, detail = ROWS["rank_sets"].check()
        assert passed, detail
        assert "shortfall" not in detail["A2 p=7"]
        assert detail["A2 p=7"]["missing"] == []
        a3 = detail["A3 p=11"]
        assert a3["missing"]
        assert a3["shortfall"] == "structural, independent of p"
