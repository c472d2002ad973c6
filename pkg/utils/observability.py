"""
Observability Module

Provides the observability layer for the toric code pipeline:
- Structured logging with context (one JSON object per record)
- Distributed tracing with OpenTelemetry (opt-in via TORIC_TRACING=1)
- track_operation, which wraps a computation with both

Records propagate to the "toric_codes" logger configured by
utils.logging_config.setup_logging, so they share its level and handlers.
"""

import json
import logging
import sys
import time
from contextlib import contextmanager
from datetime import datetime, timezone
from typing import Any, Dict, Optional

from opentelemetry import trace
from opentelemetry.sdk.resources import Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor, ConsoleSpanExporter
from opentelemetry.trace import Status, StatusCode

from .config import tracing_enabled
from .logging_config import LOGGER_NAME


def _jsonable(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)


class StructuredLogger:
    """
    Structured logger that outputs JSON logs with context.

    Each record includes:
    - Timestamp
    - Log level
    - Component name
    - Contextual data
    - Trace and span IDs when a span is active
    """

    def __init__(self, name: str):
        """
        Initialize structured logger.

        Args:
            name: Component name (geometry, distance, cli, ...)
        """
        self.name = name
        self.logger = logging.getLogger(f"{LOGGER_NAME}.{name}")

    def _log(self, level: str, message: str, **context):
        """Internal logging method with context."""
        log_method = getattr(self.logger, level.lower())
        if not self.logger.isEnabledFor(getattr(logging, level)):
            return

        log_data = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": level,
            "component": self.name,
            "message": message,
        }

        if context:
            log_data["context"] = _jsonable(context)

        span = trace.get_current_span()
        if span and span.get_span_context().is_valid:
            log_data["trace_id"] = format(span.get_span_context().trace_id, '032x')
            log_data["span_id"] = format(span.get_span_context().span_id, '016x')

        log_method(json.dumps(log_data, sort_keys=True))

    def debug(self, message: str, **context):
        """Log debug message with context."""
        self._log("DEBUG", message, **context)

    def info(self, message: str, **context):
        """Log info message with context."""
        self._log("INFO", message, **context)

    def warning(self, message: str, **context):
        """Log warning message with context."""
        self._log("WARNING", message, **context)

    def error(self, message: str, **context):
        """Log error message with context."""
        self._log("ERROR", message, **context)


class DistributedTracer:
    """
    Tracing for the computation pipeline using OpenTelemetry.

    Without TORIC_TRACING the global no-op provider is used, so spans cost
    nothing and nothing is exported.
    """

    def __init__(self, service_name: str = "toric-codes"):
        self.service_name = service_name

        if tracing_enabled():
            resource = Resource.create({"service.name": service_name})
            provider = TracerProvider(resource=resource)
            provider.add_span_processor(BatchSpanProcessor(ConsoleSpanExporter(out=sys.stderr)))
            trace.set_tracer_provider(provider)

        self.tracer = trace.get_tracer(__name__)

    @contextmanager
    def trace_span(self, name: str, attributes: Optional[Dict[str, Any]] = None):
        """
        Create a traced span as context manager.

        Usage:
            with tracer.trace_span("mixed_volume", {"dim": 3}):
                ...
        """
        with self.tracer.start_as_current_span(name) as span:
            for key, value in (attributes or {}).items():
                # OpenTelemetry accepts scalars only; tuples such as box sides become strings
                span.set_attribute(key, value if isinstance(value, (str, bool, int, float)) else str(value))
            try:
                yield span
            except Exception as e:
                span.set_status(Status(StatusCode.ERROR))
                span.record_exception(e)
                raise


# Global singleton instances
_logger_instances: Dict[str, StructuredLogger] = {}
_tracer_instance: Optional[DistributedTracer] = None


def get_logger(name: str) -> StructuredLogger:
    """Get or create a structured logger instance."""
    if name not in _logger_instances:
        _logger_instances[name] = StructuredLogger(name)
    return _logger_instances[name]


def get_tracer() -> DistributedTracer:
    """Get or create the global tracer instance."""
    global _tracer_instance
    if _tracer_instance is None:
        _tracer_instance = DistributedTracer()
    return _tracer_instance


@contextmanager
def track_operation(
    component: str,
    operation_name: str,
    attributes: Optional[Dict[str, Any]] = None
):
    """
    Track a complete operation with logging and tracing.

    Usage:
        with track_operation("distance", "exact_min_distance", {"k": 7}):
            ...

    Args:
        component: Name of the component
        operation_name: Name of the operation
        attributes: Optional attributes for context
    """
    logger = get_logger(component)
    tracer = get_tracer()
    attributes = attributes or {}

    logger.info(f"Starting {operation_name}", **attributes)
    start_time = time.perf_counter()

    with tracer.trace_span(f"{component}.{operation_name}", attributes):
        try:
            yield
        except Exception as e:
            logger.error(
                f"Failed {operation_name}",
                error=str(e),
                error_type=type(e).__name__,
                exit_code=getattr(e, "exit_code", 5),
                duration_seconds=round(time.perf_counter() - start_time, 6),
                **attributes
            )
            raise

    logger.info(
        f"Completed {operation_name}",
        duration_seconds=round(time.perf_counter() - start_time, 6),
        **attributes
    )
