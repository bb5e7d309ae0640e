"""JSON and CSV report emission.

Every JSON report is an envelope {command, params, results, diagnostics,
version, timestamp}. Rationals become {num, den, float}; floats are rounded
to 15 significant digits and keys are sorted, so two identical runs differ
only in the timestamp.
"""

import csv
import io
import json
import math
import sys
from dataclasses import is_dataclass
from datetime import datetime
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

from .. import __version__
from ..config import get_config
from ..models.rational import rational_to_dict
from ..observability import get_metrics_collector


def to_jsonable(value: Any) -> Any:
    """Convert report payloads into plain JSON types."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return to_jsonable(rational_to_dict(value))
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return str(value)
        return float(f"{value:.15g}")
    if isinstance(value, bytes):
        return value.hex()
    if hasattr(value, 'to_dict'):
        return to_jsonable(value.to_dict())
    if is_dataclass(value):
        return to_jsonable(vars(value))
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [to_jsonable(v) for v in items]
    try:
        return float(f"{float(value):.15g}")
    except (TypeError, ValueError):
        return str(value)


def build_report(
    command: str,
    params: Dict[str, Any],
    results: Any,
    diagnostics: Optional[Dict[str, Any]] = None
) -> Dict[str, Any]:
    """Assemble the report envelope."""
    extra = dict(diagnostics or {})
    extra.setdefault('metrics', get_metrics_collector().get_session_summary(include_timings=False))
    extra.setdefault('config', get_config().as_dict())
    return {
        'command': command,
        'params': to_jsonable(params),
        'results': to_jsonable(results),
        'diagnostics': to_jsonable(extra),
        'version': __version__,
        'timestamp': datetime.now().isoformat(),
    }


def render_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_csv(rows: Iterable[Dict[str, Any]], fieldnames: Optional[List[str]] = None) -> str:
    """Render rows as CSV; columns follow the first row unless given."""
    rows = [to_jsonable(row) for row in rows]
    buffer = io.StringIO()
    if not rows:
        return ""
    fieldnames = fieldnames or list(rows[0].keys())
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _csv_cell(row.get(k)) for k in fieldnames})
    return buffer.getvalue()


def _csv_cell(value: Any) -> Any:
    if isinstance(value, dict) and 'num' in value and 'den' in value:
        return f"{value['num']}/{value['den']}" if value['den'] != 1 else str(value['num'])
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return value


def write_output(text: str, out: Optional[str] = None) -> None:
    """Write to ``out`` (parents created) or to stdout."""
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding='utf-8')
    else:
        sys.stdout.write(text)
