"""Observability infrastructure for tracking computation metrics.

This module provides the MetricsCollector class for tracking eigen-solves,
minor searches, exhaustive census progress, refusals and near-ties.
The session summary is attached to every JSON report.
"""

import threading
import time
from collections import defaultdict
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, Iterator, List, Optional


@dataclass
class ComputationStats:
    """Running totals for one computation family."""
    kind: str  # 'eigen', 'minor', 'canonical', 'scan', ...
    count: int = 0
    failures: int = 0
    success_ms: float = 0.0
    last_label: str = ""
    last_error: Optional[str] = None

    def add(self, label: str, duration_ms: float, success: bool, error: Optional[str] = None) -> None:
        self.count += 1
        self.last_label = label
        if success:
            self.success_ms += duration_ms
        else:
            self.failures += 1
            self.last_error = error

    @property
    def successes(self) -> int:
        return self.count - self.failures

    @property
    def average_ms(self) -> float:
        """Mean duration of the successful runs, 0.0 if there were none."""
        return self.success_ms / self.successes if self.successes else 0.0

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            'kind': self.kind,
            'count': self.count,
            'failures': self.failures,
            'average_ms': self.average_ms,
            'last_label': self.last_label,
            'last_error': self.last_error
        }


@dataclass
class SearchMetric:
    """Metric for one exhaustive census."""
    n: int
    s: int
    t: int
    examined: int
    minor_free: int
    timestamp: datetime = field(default_factory=datetime.now)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            'n': self.n,
            's': self.s,
            't': self.t,
            'examined': self.examined,
            'minor_free': self.minor_free,
            'timestamp': self.timestamp.isoformat()
        }


@dataclass
class NearTieMetric:
    """A scan instance whose top-two values were too close to call."""
    label: str
    gap: float
    timestamp: datetime = field(default_factory=datetime.now)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            'label': self.label,
            'gap': self.gap,
            'timestamp': self.timestamp.isoformat()
        }


class MetricsCollector:
    """Collector for tracking metrics throughout a workbench session.

    This class is thread-safe and can be shared by pool workers.
    """

    def __init__(self):
        self._lock = threading.RLock()

        self._computations: Dict[str, ComputationStats] = {}
        self._searches: List[SearchMetric] = []
        self._near_ties: List[NearTieMetric] = []

        self._counters: Dict[str, int] = defaultdict(int)
        self._refusals: Dict[str, int] = defaultdict(int)

        self._started: Optional[float] = None

    def start_session(self) -> None:
        """Start the wall clock used for session_duration_seconds."""
        with self._lock:
            self._started = time.monotonic()

    def record_computation(
        self,
        kind: str,
        label: str,
        duration_ms: float,
        success: bool = True,
        error: Optional[str] = None
    ) -> None:
        """Record a timed computation.

        Args:
            kind: Computation family ('eigen', 'minor', ...)
            label: Free-form instance label
            duration_ms: Duration in milliseconds
            success: Whether the computation succeeded
            error: Optional error message if failed
        """
        with self._lock:
            stats = self._computations.setdefault(kind, ComputationStats(kind=kind))
            stats.add(label, duration_ms, success, error)
            self._counters[kind] += 1

    def increment(self, counter: str, amount: int = 1) -> None:
        """Bump a named counter (e.g. 'graphs_examined')."""
        with self._lock:
            self._counters[counter] += amount

    def record_search(self, n: int, s: int, t: int, examined: int, minor_free: int) -> None:
        """Record an exhaustive census.

        Args:
            n: Graph order
            s: Minor parameter s
            t: Minor parameter t
            examined: Isomorphism classes examined
            minor_free: Classes that passed the minor filter
        """
        with self._lock:
            self._searches.append(SearchMetric(
                n=n, s=s, t=t, examined=examined, minor_free=minor_free
            ))

    def record_near_tie(self, label: str, gap: float) -> None:
        """Record a near-tie observed during a scan."""
        with self._lock:
            self._near_ties.append(NearTieMetric(label=label, gap=gap))

    def record_refusal(self, reason: str) -> None:
        """Record a refused computation (cap or hypothesis range)."""
        with self._lock:
            self._refusals[reason] += 1

    @contextmanager
    def timed(self, kind: str, label: str = "") -> Iterator[None]:
        """Time the enclosed block and record it as a computation."""
        start = time.perf_counter()
        try:
            yield
        except Exception as e:
            self.record_computation(
                kind, label, (time.perf_counter() - start) * 1000.0, success=False, error=str(e)
            )
            raise
        self.record_computation(kind, label, (time.perf_counter() - start) * 1000.0)

    def get_session_duration_seconds(self) -> float:
        """Seconds since start_session, 0.0 before it is called."""
        with self._lock:
            return 0.0 if self._started is None else time.monotonic() - self._started

    def get_average_duration(self, kind: Optional[str] = None) -> float:
        """Get average computation duration in milliseconds.

        Args:
            kind: Optional computation family filter

        Returns:
            Average duration in milliseconds, or 0 if nothing recorded
        """
        with self._lock:
            if kind:
                stats = self._computations.get(kind)
                return stats.average_ms if stats else 0.0
            successes = sum(s.successes for s in self._computations.values())
            if not successes:
                return 0.0
            return sum(s.success_ms for s in self._computations.values()) / successes

    def get_failure_count(self) -> int:
        """Get the number of failed computations."""
        with self._lock:
            return sum(s.failures for s in self._computations.values())

    def get_counter(self, counter: str) -> int:
        """Get a named counter value."""
        with self._lock:
            return self._counters.get(counter, 0)

    def get_session_summary(self, include_timings: bool = True) -> Dict[str, Any]:
        """Aggregate the session into a report-ready dictionary.

        Args:
            include_timings: When False, wall-clock figures are omitted so the
                summary is reproducible across runs

        Returns:
            Counters, refusals, failures, searches and near-ties, plus
            performance figures when include_timings is set
        """
        with self._lock:
            summary: Dict[str, Any] = {
                'counters': dict(sorted(self._counters.items())),
                'refusals': dict(sorted(self._refusals.items())),
                'failures': self.get_failure_count(),
                'searches': [
                    {k: v for k, v in m.to_dict().items() if k != 'timestamp'}
                    for m in self._searches
                ],
                'near_ties': [
                    {'label': m.label, 'gap': m.gap} for m in self._near_ties
                ],
            }
            if include_timings:
                kinds = sorted(self._computations)
                summary['performance'] = {
                    'session_duration_seconds': self.get_session_duration_seconds(),
                    'average_duration_ms': {k: self.get_average_duration(k) for k in kinds},
                }
            return summary

    def reset(self) -> None:
        """Drop everything recorded so far."""
        with self._lock:
            self._computations.clear()
            self._searches.clear()
            self._near_ties.clear()
            self._counters.clear()
            self._refusals.clear()
            self._started = None


_metrics_collector: Optional[MetricsCollector] = None


def get_metrics_collector() -> MetricsCollector:
    """Process-wide collector shared by every module and pool worker."""
    global _metrics_collector
    if _metrics_collector is None:
        _metrics_collector = MetricsCollector()
    return _metrics_collector


def reset_metrics_collector() -> None:
    """Discard the process-wide collector; the next access creates a fresh one."""
    global _metrics_collector
    if _metrics_collector is not None:
        _metrics_collector.reset()
    _metrics_collector = None
