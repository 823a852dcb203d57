"""Performance instrumentation for exact computations."""

import functools
import time
from contextlib import contextmanager
from typing import Dict, Optional

from src.config import settings
from src.utils.logging import get_logger

logger = get_logger(__name__)


class PerformanceMonitor:
    """Monitor and log performance metrics."""

    def __init__(self, slow_threshold: Optional[float] = None):
        """Initialize performance monitor.

        Args:
            slow_threshold: Seconds after which an operation is logged as slow
        """
        self.slow_threshold = slow_threshold or settings.slow_operation_seconds
        self.metrics = {}

    def _record(self, operation: str, duration: float):
        if operation not in self.metrics:
            self.metrics[operation] = {
                "count": 0,
                "total_time": 0,
                "min_time": float('inf'),
                "max_time": 0
            }

        metric = self.metrics[operation]
        metric["count"] += 1
        metric["total_time"] += duration
        metric["min_time"] = min(metric["min_time"], duration)
        metric["max_time"] = max(metric["max_time"], duration)

        # Log slow operations
        if duration > self.slow_threshold:
            logger.warning(
                f"Slow operation '{operation}' took {duration:.2f}s"
            )

    @contextmanager
    def measure(self, operation: str):
        """Context manager to measure operation performance."""
        start_time = time.perf_counter()

        try:
            yield
        finally:
            self._record(operation, time.perf_counter() - start_time)

    def get_metrics(self) -> Dict[str, Dict[str, float]]:
        """Get performance metrics."""
        result = {}

        for operation, metric in self.metrics.items():
            result[operation] = {
                "count": metric["count"],
                "total_time": metric["total_time"],
                "avg_time": metric["total_time"] / metric["count"] if metric["count"] > 0 else 0,
                "min_time": metric["min_time"] if metric["min_time"] != float('inf') else 0,
                "max_time": metric["max_time"]
            }

        return result

    def summary(self) -> str:
        """One line per recorded operation, slowest total first."""
        metrics = sorted(self.get_metrics().items(), key=lambda item: -item[1]["total_time"])
        return "; ".join(f"{op} x{m['count']} {m['total_time']:.3f}s" for op, m in metrics) or "none"

    def reset(self):
        """Reset all metrics."""
        self.metrics = {}


# Global performance monitor
perf_monitor = PerformanceMonitor()


def measure_performance(operation: str = None):
    """Decorator to measure function performance.

    Args:
        operation: Operation name (defaults to function name)
    """
    def decorator(func):
        op_name = operation or f"{func.__module__}.{func.__name__}"

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            with perf_monitor.measure(op_name):
                return func(*args, **kwargs)

        return wrapper

    return decorator


def lazy_property(func):
    """Decorator for lazy-loaded properties.

    Works on frozen dataclasses: the cached value is stored with
    ``object.__setattr__``.
    """
    attr_name = f"_lazy_{func.__name__}"

    @property
    @functools.wraps(func)
    def wrapper(self):
        try:
            return object.__getattribute__(self, attr_name)
        except AttributeError:
            value = func(self)
            object.__setattr__(self, attr_name, value)
            return value

    return wrapper
