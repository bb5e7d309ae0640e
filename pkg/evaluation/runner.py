"""Acceptance runner for executing the criteria suite.

This module provides the runner that evaluates a selection of criteria
and renders a text report or a JSON summary.
"""

import json
import logging
import time
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from src.config import get_config
from src.harness.reports import to_jsonable
from evaluation.criteria import Criterion, get_criteria, select_criteria
from evaluation.evaluators import EvaluationResult, evaluate_criterion

logger = logging.getLogger(__name__)


@dataclass
class EvaluationSummary:
    """Summary of an acceptance run."""

    total_criteria: int
    passed_criteria: int
    failed_criteria: int
    over_budget: int
    total_execution_time_seconds: float
    seed: int
    timestamp: datetime
    results: List[EvaluationResult]

    @property
    def all_passed(self) -> bool:
        return self.failed_criteria == 0

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            'total_criteria': self.total_criteria,
            'passed_criteria': self.passed_criteria,
            'failed_criteria': self.failed_criteria,
            'over_budget': self.over_budget,
            'total_execution_time_seconds': self.total_execution_time_seconds,
            'seed': self.seed,
            'timestamp': self.timestamp.isoformat(),
            'results': [r.to_dict() for r in self.results]
        }


class AcceptanceRunner:
    """Runner for the acceptance criteria."""

    def __init__(self, seed: Optional[int] = None):
        """Initialize the runner.

        Args:
            seed: Seed for randomized criteria (defaults to the configured seed)
        """
        self.seed = get_config().seed if seed is None else seed
        logger.info("AcceptanceRunner initialized", extra={'extra_data': {'seed': self.seed}})

    def run(self, numbers: Optional[Sequence[int]] = None) -> EvaluationSummary:
        """Evaluate the selected criteria.

        Args:
            numbers: Criterion numbers to run (all when None)

        Returns:
            EvaluationSummary with one result per criterion

        Raises:
            ValueError: If a criterion number is unknown
        """
        criteria: List[Criterion] = select_criteria(numbers) if numbers else get_criteria()
        start = time.time()
        logger.info(f"Running {len(criteria)} acceptance criteria")

        results = [evaluate_criterion(criterion, self.seed) for criterion in criteria]

        passed = sum(1 for r in results if r.passed)
        summary = EvaluationSummary(
            total_criteria=len(results),
            passed_criteria=passed,
            failed_criteria=len(results) - passed,
            over_budget=sum(1 for r in results if not r.within_budget),
            total_execution_time_seconds=time.time() - start,
            seed=self.seed,
            timestamp=datetime.now(),
            results=results,
        )
        logger.info(
            f"Acceptance run complete: {passed}/{len(results)} passed, "
            f"{summary.over_budget} over budget"
        )
        return summary

    def generate_report(self, summary: EvaluationSummary, output_file: Optional[str] = None) -> str:
        """Render a plain-text report.

        Args:
            summary: Acceptance summary
            output_file: Optional output file path

        Returns:
            Report text
        """
        lines = [
            "=" * 80,
            "ACCEPTANCE REPORT",
            "=" * 80,
            f"Timestamp: {summary.timestamp.isoformat()}",
            f"Seed: {summary.seed}",
            f"Criteria: {summary.total_criteria}",
            f"Passed: {summary.passed_criteria}",
            f"Failed: {summary.failed_criteria}",
            f"Over budget: {summary.over_budget}",
            f"Total Execution Time: {summary.total_execution_time_seconds:.2f}s",
            "",
            "CRITERIA",
            "-" * 80,
        ]
        for result in summary.results:
            status = "PASS" if result.passed else "FAIL"
            budget = "" if result.within_budget else " [OVER BUDGET]"
            lines.append(
                f"{result.criterion}. {result.metric_name}: {status} "
                f"score={result.score:.3f} "
                f"time={result.duration_seconds:.2f}s/{result.budget_seconds:.0f}s{budget}"
            )
            if result.error:
                lines.append(f"   error: {result.error}")
            for failure in result.failures[:5]:
                lines.append(f"   failure: {failure}")
        lines.extend(["", "=" * 80, "END OF REPORT", "=" * 80])
        text = "\n".join(lines) + "\n"

        if output_file:
            path = Path(output_file)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding='utf-8')
            logger.info(f"Report saved to {output_file}")
        return text

    def save_results_json(self, summary: EvaluationSummary, output_file: str) -> None:
        """Save the summary as JSON.

        Args:
            summary: Acceptance summary
            output_file: Output file path
        """
        path = Path(output_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w') as f:
            json.dump(to_jsonable(summary.to_dict()), f, indent=2, sort_keys=True)
        logger.info(f"Results saved to {output_file}")
