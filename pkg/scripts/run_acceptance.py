#!/usr/bin/env python3
"""Run the acceptance suite and write its reports.

Writes ``acceptance_report.txt`` and ``acceptance_results.json`` into the
output directory and exits non-zero when any criterion fails.
"""

import sys
import argparse
import logging
from pathlib import Path

# Make the repository root importable when run as a script
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from evaluation.criteria import get_criteria
from evaluation.runner import AcceptanceRunner
from src.logging_config import setup_logging


def main():
    """Main entry point for the acceptance suite."""
    parser = argparse.ArgumentParser(
        description='Run the acceptance criteria for the spread workbench'
    )
    parser.add_argument(
        '--output-dir',
        type=str,
        default='acceptance_results',
        help='Directory for output files (default: acceptance_results)'
    )
    parser.add_argument(
        '--criteria',
        type=int,
        nargs='+',
        help='Criterion numbers to run (default: all)'
    )
    parser.add_argument(
        '--seed',
        type=int,
        help='Seed for randomized criteria (default: WORKBENCH_SEED)'
    )
    parser.add_argument(
        '--log-level',
        type=str,
        default='INFO',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        help='Logging level (default: INFO)'
    )
    parser.add_argument(
        '--list',
        action='store_true',
        help='List the criteria and exit'
    )

    args = parser.parse_args()

    if args.list:
        for criterion in get_criteria():
            print(f"{criterion.number}. {criterion.name} ({criterion.budget_seconds:.0f}s): {criterion.description}")
        return 0

    setup_logging(args.log_level)
    logger = logging.getLogger(__name__)

    output_dir = Path(args.output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)

    try:
        runner = AcceptanceRunner(seed=args.seed)
        summary = runner.run(args.criteria)
    except ValueError as e:
        logger.error(f"Invalid criteria selection: {e}")
        return 2

    report_text = runner.generate_report(summary, str(output_dir / 'acceptance_report.txt'))
    print("\n" + report_text)
    runner.save_results_json(summary, str(output_dir / 'acceptance_results.json'))
    logger.info(f"Acceptance run complete. Results saved to {output_dir}")

    return 0 if summary.all_passed else 1


if __name__ == '__main__':
    sys.exit(main())
