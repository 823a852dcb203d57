"""Tests for utility functions."""

import json
import time
from dataclasses import dataclass

import pytest
from loguru import logger

from src.errors import DescriptionError
from src.scenarios import Scenario
from src.utils.documents import load_document, read_json
from src.utils.hashing import canonical_json, hash_content, report_digest
from src.utils.logging import get_logger, scenario_context, setup_logging
from src.utils.performance import PerformanceMonitor, lazy_property, measure_performance, perf_monitor


class TestHashing:
    """Test hashing utilities."""

    def test_content_hashing(self):
        """Same content, same hash; SHA-256 hex length."""
        assert hash_content("ranks") == hash_content(b"ranks")
        assert hash_content("ranks") != hash_content("Ranks")
        assert len(hash_content("")) == 64

    def test_canonical_json_sorts_keys(self):
        assert canonical_json({"b": 1, "a": [1, 2]}) == canonical_json({"a": [1, 2], "b": 1})

    def test_report_digest_ignores_key_order(self):
        assert report_digest({"x": "1/2", "y": [0, 1]}) == report_digest({"y": [0, 1], "x": "1/2"})
        assert report_digest({"x": "1/2"}) != report_digest({"x": "1/3"})


class TestPerformance:
    """Test performance instrumentation."""

    def test_monitor_records_metrics(self):
        monitor = PerformanceMonitor(slow_threshold=10)
        with monitor.measure("rank"):
            pass
        with monitor.measure("rank"):
            pass
        metrics = monitor.get_metrics()
        assert metrics["rank"]["count"] == 2
        assert metrics["rank"]["min_time"] <= metrics["rank"]["max_time"]
        monitor.reset()
        assert monitor.get_metrics() == {}

    def test_summary_line(self):
        monitor = PerformanceMonitor(slow_threshold=10)
        assert monitor.summary() == "none"
        with monitor.measure("window"):
            pass
        assert monitor.summary().startswith("window x1 ")

    def test_slow_operation_warns(self, mocker):
        warning = mocker.patch("src.utils.performance.logger.warning")
        monitor = PerformanceMonitor(slow_threshold=0.001)
        with monitor.measure("nullspace"):
            time.sleep(0.01)
        warning.assert_called_once()
        assert "nullspace" in warning.call_args[0][0]

    def test_decorator_uses_global_monitor(self):
        @measure_performance("tests.square")
        def square(x):
            return x * x

        assert square(7) == 49
        assert perf_monitor.get_metrics()["tests.square"]["count"] >= 1

    def test_lazy_property_on_frozen_object(self):
        calls = []

        @dataclass(frozen=True)
        class Frozen:
            name: str = "window"

            @lazy_property
            def value(self):
                calls.append(1)
                return 42

        item = Frozen()
        assert item.value == 42
        assert item.value == 42
        assert len(calls) == 1


class TestDocuments:
    """JSON documents validated into pydantic models."""

    def test_read_json_text(self):
        assert read_json("inline.json", '{"a": 1}') == {"a": 1}

    def test_line_and_column_of_syntax_error(self):
        with pytest.raises(DescriptionError) as info:
            read_json("bad.json", '{\n  "a": 1,\n  oops\n}')
        assert info.value.line == 3

    def test_missing_file(self, tmp_path):
        with pytest.raises(DescriptionError) as info:
            read_json(tmp_path / "missing.json")
        assert "cannot read file" in str(info.value)

    def test_schema_error_names_field(self):
        text = json.dumps({"name": "x", "kind": "cover", "cover": "z-on-r", "operations": "ranks"})
        with pytest.raises(DescriptionError) as info:
            load_document("scenario.json", Scenario, text)
        assert info.value.field == "operations"

    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "scenario.json"
        path.write_text(json.dumps({"name": "line", "kind": "cover", "cover": "z-on-r",
                                    "operations": ["coinvariant_ranks"]}))
        assert load_document(path, Scenario).cover == "z-on-r"


class TestLogging:
    """Test logging setup."""

    def test_setup_and_bind(self, tmp_path, monkeypatch):
        import src.config

        log_file = tmp_path / "logs" / "coinv.log"
        monkeypatch.setattr(src.config.settings, "log_file_path", str(log_file))
        setup_logging("DEBUG")
        get_logger("tests").info("window built")
        monkeypatch.setattr(src.config.settings, "log_file_path", None)
        setup_logging("WARNING")
        assert log_file.parent.exists()
        assert "window built" in log_file.read_text()

    def test_scenario_context_tags_records(self):
        tags = []
        sink = logger.add(lambda message: tags.append(message.record["extra"]["scenario"]), level="INFO")
        try:
            with scenario_context("two-circles-swap"):
                get_logger("tests").info("inside")
            get_logger("tests").info("outside")
        finally:
            logger.remove(sink)
        assert tags == ["two-circles-swap", "-"]
