"""Utilities module for the coinvariant cohomology engine."""

from .logging import setup_logging, get_logger
from .hashing import hash_content, canonical_json, report_digest
from .performance import PerformanceMonitor, perf_monitor, measure_performance, lazy_property

__all__ = [
    "setup_logging",
    "get_logger",
    "hash_content",
    "canonical_json",
    "report_digest",
    "PerformanceMonitor",
    "perf_monitor",
    "measure_performance",
    "lazy_property",
]
