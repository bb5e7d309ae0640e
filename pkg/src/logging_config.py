"""Structured logging configuration for the spread workbench.

Log records are emitted as one JSON object per line on stderr so that
stdout stays reserved for JSON/CSV reports.
"""

import json
import logging
import math
import sys
from datetime import datetime, timezone
from fractions import Fraction
from logging import LogRecord
from typing import Any, Dict, Optional, TextIO, Tuple


_CONTEXT_FIELDS = ("command", "event", "s", "t", "n")
_PAYLOAD_FIELDS = (("params", "params"), ("metrics", "metrics"), ("extra_data", "data"))


def _jsonable(value: Any) -> Any:
    """Convert payload values into something ``json.dumps`` accepts.

    Args:
        value: Arbitrary payload value

    Returns:
        A JSON-compatible value; non-finite floats become strings
    """
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return repr(value)


class StructuredFormatter(logging.Formatter):
    """Renders each record as a single JSON object."""

    def format(self, record: LogRecord) -> str:
        stamp = datetime.fromtimestamp(record.created, tz=timezone.utc)
        entry: Dict[str, Any] = {
            'timestamp': stamp.isoformat(timespec='milliseconds').replace('+00:00', 'Z'),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage(),
        }
        for name in _CONTEXT_FIELDS:
            if hasattr(record, name):
                entry[name] = _jsonable(getattr(record, name))
        for attribute, key in _PAYLOAD_FIELDS:
            if hasattr(record, attribute):
                entry[key] = _jsonable(getattr(record, attribute))
        if record.exc_info:
            entry['exception'] = self.formatException(record.exc_info)
        return json.dumps(entry)


def setup_logging(log_level: str = "INFO", stream: Optional[TextIO] = None) -> None:
    """Route every logger through one JSON handler.

    Args:
        log_level: DEBUG, INFO, WARNING, ERROR or CRITICAL (case-insensitive)
        stream: Destination, stderr by default; never stdout, which carries reports
    """
    level = logging.getLevelName(log_level.upper())
    if not isinstance(level, int):
        level = logging.INFO

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(StructuredFormatter())

    root = logging.getLogger()
    root.setLevel(level)
    root.handlers[:] = [handler]

    # symbolic and multiprecision backends stay at WARNING or above
    for noisy in ("sympy", "mpmath"):
        logging.getLogger(noisy).setLevel(max(level, logging.WARNING))


def get_logger(name: str) -> logging.Logger:
    """Module logger; configuration is global via ``setup_logging``."""
    return logging.getLogger(name)


class ComputationLogger(logging.LoggerAdapter):
    """Adapter stamping (command, s, t, n) onto every record it emits."""

    def process(self, msg: str, kwargs: Dict[str, Any]) -> Tuple[str, Dict[str, Any]]:
        merged = dict(kwargs.get('extra') or {})
        merged.update(self.extra)
        kwargs['extra'] = merged
        return msg, kwargs

    def bind(self, **context: Any) -> "ComputationLogger":
        """Child adapter with extra context; ``None`` values are dropped.

        Args:
            **context: Any of command, event, s, t, n

        Returns:
            ComputationLogger: New adapter on the same logger
        """
        merged = dict(self.extra)
        merged.update({k: v for k, v in context.items() if v is not None})
        return ComputationLogger(self.logger, merged)


def get_context_logger(
    name: str,
    command: Optional[str] = None,
    s: Optional[int] = None,
    t: Optional[int] = None,
    n: Optional[int] = None,
) -> ComputationLogger:
    """Logger whose records carry the computation they belong to.

    Args:
        name: Logger name
        command: CLI command or experiment name
        s: K_{s,t} parameter s
        t: K_{s,t} parameter t
        n: Graph order

    Returns:
        ComputationLogger: Adapter with the non-empty context fields
    """
    return ComputationLogger(get_logger(name), {}).bind(command=command or None, s=s, t=t, n=n)
