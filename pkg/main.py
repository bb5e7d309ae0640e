#!/usr/bin/env python3
"""Main CLI entry point for the spread workbench.

This module provides a command-line interface for computing spreads,
building extremal K_{s,t}-minor-free constructions, maximizing ψ, testing
minors and running the exhaustive and convergence experiments.

Reports (JSON, CSV or plain values) go to stdout or ``--out``; status
messages and structured logs go to stderr.
"""

import sys
import argparse
import logging
from dataclasses import fields
from typing import Any, Callable, Dict, List, Optional

from src.config import WorkbenchConfig, get_config, set_config
from src.errors import (
    ComputationRefused,
    ConvergenceError,
    MalformedInput,
    ParameterRangeError,
    WorkbenchError,
)
from src.logging_config import get_context_logger, setup_logging
from src.observability import get_metrics_collector
from src.admissibility import admissibility_table, maximize_psi, maximize_psi_bruteforce
from src.expansion import (
    approx_spread,
    c2_decomposition,
    c2_equality_report,
    implicit_spread,
    moment_series,
)
from src.extremal import ell_zero, scan_ell
from src.graphs import Graph, build_extremal, empty, from_graph6, join, to_graph6
from src.harness import (
    build_report,
    convergence_experiment,
    render_csv,
    render_json,
    search_max_spread,
    write_output,
)
from src.minors import edge_filters, has_kst_minor, has_minor
from src.spectra import eigenvalues


# ANSI color codes for terminal output
class Colors:
    """ANSI color codes for terminal output."""
    HEADER = '\033[95m'
    OKCYAN = '\033[96m'
    OKGREEN = '\033[92m'
    WARNING = '\033[93m'
    FAIL = '\033[91m'
    ENDC = '\033[0m'
    BOLD = '\033[1m'


_QUIET = False


def print_header(text: str) -> None:
    """Print a formatted header to stderr."""
    if _QUIET:
        return
    bar = '=' * 80
    print(f"\n{Colors.HEADER}{Colors.BOLD}{bar}{Colors.ENDC}", file=sys.stderr)
    print(f"{Colors.HEADER}{Colors.BOLD}{text.center(80)}{Colors.ENDC}", file=sys.stderr)
    print(f"{Colors.HEADER}{Colors.BOLD}{bar}{Colors.ENDC}\n", file=sys.stderr)


def print_success(text: str) -> None:
    """Print a success message.

    Args:
        text: Success message to print
    """
    if not _QUIET:
        print(f"{Colors.OKGREEN}✓ {text}{Colors.ENDC}", file=sys.stderr)


def print_error(text: str) -> None:
    """Print an error message (never suppressed)."""
    print(f"{Colors.FAIL}✗ {text}{Colors.ENDC}", file=sys.stderr)


def print_warning(text: str) -> None:
    if not _QUIET:
        print(f"{Colors.WARNING}⚠ {text}{Colors.ENDC}", file=sys.stderr)


def print_info(text: str) -> None:
    if not _QUIET:
        print(f"{Colors.OKCYAN}ℹ {text}{Colors.ENDC}", file=sys.stderr)


def parse_graph(text: str) -> Graph:
    """Decode a graph6 argument; '-' reads one line from stdin."""
    if text == '-':
        text = sys.stdin.readline().strip()
    return from_graph6(text)


def parse_caps(text: Optional[str]) -> Dict[str, Any]:
    """Parse ``key=value,key=value`` into typed config overrides.

    Raises:
        MalformedInput: If an item is not key=value or a value has the wrong type
    """
    if not text:
        return {}
    types = {f.name: f.type for f in fields(WorkbenchConfig)}
    caps: Dict[str, Any] = {}
    for item in text.split(','):
        key, sep, raw = item.partition('=')
        key = key.strip().replace('-', '_')
        if not sep or not key:
            raise MalformedInput(f"--caps expects key=value items, got {item!r}")
        kind = types.get(key)
        if kind is None:
            raise MalformedInput(f"Unknown cap: {key}")
        try:
            if kind in (int, 'int'):
                caps[key] = int(raw)
            elif kind in (float, 'float'):
                caps[key] = float(raw)
            else:
                caps[key] = raw.strip().upper() if key == 'log_level' else raw.strip()
        except ValueError:
            raise MalformedInput(f"--caps {key} expects a number, got {raw!r}") from None
    return caps


def configure(args: argparse.Namespace) -> WorkbenchConfig:
    """Apply --caps, --threads, --seed and --log-level on top of the environment."""
    overrides = parse_caps(args.caps)
    if args.threads is not None:
        overrides['threads'] = args.threads
    if args.seed is not None:
        overrides['seed'] = args.seed
    if args.log_level:
        overrides['log_level'] = args.log_level
    config = get_config().with_overrides(**overrides)
    set_config(config)
    level = config.log_level
    if args.quiet and not args.log_level:
        level = 'ERROR'
    setup_logging(level)
    return config


def emit(
    args: argparse.Namespace,
    params: Dict[str, Any],
    results: Any,
    text: str,
    rows: Optional[List[Dict[str, Any]]] = None,
    diagnostics: Optional[Dict[str, Any]] = None
) -> None:
    """Write the command's output in the selected format.

    Args:
        args: Parsed arguments (--json, --csv, --out)
        params: Command parameters for the JSON envelope
        results: Result payload for the JSON envelope
        text: Plain rendering
        rows: Table rows for --csv (falls back to JSON when absent)
        diagnostics: Extra diagnostics for the JSON envelope
    """
    if args.csv and rows is not None:
        output = render_csv(rows)
    elif args.json or args.csv:
        if args.csv:
            print_warning(f"'{args.command}' has no table form; emitting JSON")
        output = render_json(build_report(args.command, params, results, diagnostics))
    else:
        output = text if text.endswith('\n') else text + '\n'
    write_output(output, args.out)
    if args.out:
        print_success(f"Report written to {args.out}")


def cmd_spread(args: argparse.Namespace) -> int:
    g = parse_graph(args.graph)
    spectrum = eigenvalues(g, method=args.method)
    spectrum.validate(edge_count=g.edge_count())
    results = {
        'graph6': to_graph6(g),
        'n': g.n,
        'edges': g.edge_count(),
        'eigenvalues': list(spectrum.eigenvalues),
        'largest': spectrum.largest,
        'smallest': spectrum.smallest,
        'spread': spectrum.spread,
    }
    emit(args, {'graph': args.graph, 'method': args.method}, results, repr(round(spectrum.spread, 12)))
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    head = parse_graph(args.head) if args.head else empty(args.s - 1)
    ell = args.ell
    if ell is None:
        construction = ell_zero(args.s, args.t, args.n)
        ell = construction.ell_candidates[0]
        print_info(f"Using ℓ₀ = {ell} (ℓ₁ = {construction.ell_one})")
    g = build_extremal(head, ell, args.n, args.t)
    spectrum = eigenvalues(g)
    results = {
        'graph6': to_graph6(g),
        'n': g.n,
        'edges': g.edge_count(),
        'ell': ell,
        'head': to_graph6(head),
        'spread': spectrum.spread,
    }
    params = {'s': args.s, 't': args.t, 'n': args.n, 'ell': args.ell, 'head': args.head}
    emit(args, params, results, results['graph6'])
    return 0


def cmd_psi_max(args: argparse.Namespace) -> int:
    report = maximize_psi_bruteforce(args.s, args.t) if args.brute_force else maximize_psi(args.s, args.t)
    report.validate()
    rows = [
        {'degrees': ' '.join(map(str, seq.degrees)), 'psi': report.psi_max}
        for seq in report.optimal_degree_sequences
    ]
    verdict = "admissible" if report.admissible else "not admissible"
    text = f"psi_max = {report.psi_max} ({verdict}); witness {to_graph6(report.witness)}"
    emit(args, {'s': args.s, 't': args.t, 'method': report.method}, report, text, rows=rows)
    return 0


def cmd_admissible(args: argparse.Namespace) -> int:
    rows = admissibility_table(args.s_max, args.t_max, brute_force=args.brute_force)
    csv_rows = [row.to_csv_row() for row in rows]
    lines = [f"{'s':>3} {'t':>3}  admissible  closed_form  psi_max"]
    for row in csv_rows:
        lines.append(
            f"{row['s']:>3} {row['t']:>3}  {row['admissible']:>10}  {row['closed_form']:>11}  {row['psi_max']}"
        )
    disagreements = [(row.s, row.t) for row in rows if not row.agree]
    if disagreements:
        print_warning(f"Verdicts disagree at {disagreements}")
    params = {'s_max': args.s_max, 't_max': args.t_max, 'brute_force': args.brute_force}
    emit(args, params, rows, '\n'.join(lines), rows=csv_rows)
    return 0


def cmd_ell0(args: argparse.Namespace) -> int:
    construction = ell_zero(args.s, args.t, args.n)
    construction.validate()
    candidates = ', '.join(str(ell) for ell in construction.ell_candidates)
    text = f"ell_one = {construction.ell_one}, ell_zero = {candidates}"
    if construction.is_tie:
        print_warning("ℓ₁ is a half-integer: both neighbours are candidates")
    emit(args, {'s': args.s, 't': args.t, 'n': args.n}, construction, text)
    return 0


def cmd_scan_ell(args: argparse.Namespace) -> int:
    head = parse_graph(args.head) if args.head else None
    result = scan_ell(args.s, args.t, args.n, head=head, method=args.method, threads=args.threads)
    result.validate()
    lines = [f"{ell:>4}  {value:.12f}{'  *' if ell in result.best_ells else ''}" for ell, value in result.table]
    if not result.decisive:
        print_warning(f"Near-tie: top-two gap {result.gap:.3g}")
    params = {'s': args.s, 't': args.t, 'n': args.n, 'method': args.method, 'head': args.head}
    emit(args, params, result, '\n'.join(lines), rows=result.to_csv_rows())
    return 0


def _minor_text(result) -> str:
    if not result.found:
        return "no minor"
    sets = ' | '.join(' '.join(map(str, branch)) for branch in result.witness.branch_sets)
    return f"minor found: {sets}"


def cmd_minor(args: argparse.Namespace) -> int:
    g = parse_graph(args.graph)
    h = parse_graph(args.pattern)
    result = has_minor(g, h, threads=args.threads or 1)
    emit(args, {'graph': args.graph, 'pattern': args.pattern}, result, _minor_text(result))
    return 0


def cmd_kst_minor(args: argparse.Namespace) -> int:
    g = parse_graph(args.graph)
    result = has_kst_minor(g, args.s, args.t, threads=args.threads or 1)
    verdicts = edge_filters(g, args.s, args.t)
    emit(
        args,
        {'graph': args.graph, 's': args.s, 't': args.t},
        {'minor': result, 'filters': verdicts},
        _minor_text(result),
        rows=[v.to_dict() for v in verdicts],
    )
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    record = search_max_spread(args.n, args.s, args.t, threads=args.threads)
    lines = [
        f"census: {record.census_size} of {record.examined} classes are K_{args.s},{args.t}-minor-free",
        f"best spread: {record.best_spread:.12f}",
        f"winners: {', '.join(record.best_graph6)}",
        f"winner in family: {record.winner_in_family}"
        + (f" (ell={record.winner_ell})" if record.winner_ell is not None else ""),
    ]
    if record.tait_violations or record.crs_violations:
        print_warning(
            f"{record.tait_violations} spectral-radius and {record.crs_violations} edge-ceiling violations"
        )
    emit(args, {'n': args.n, 's': args.s, 't': args.t}, record, '\n'.join(lines))
    return 0


def cmd_converge(args: argparse.Namespace) -> int:
    table = convergence_experiment(args.s, args.t, args.n, dps=args.dps)
    rows = [row.to_dict() for row in table.rows]
    lines = [f"{'n':>6} {'ell':>5} {'exact':>20} {'residual':>12} {'ratio':>8}"]
    for row in table.rows:
        ratio = f"{row.ratio:.2f}" if row.ratio is not None else "-"
        lines.append(f"{row.n:>6} {row.ell:>5} {row.exact:>20.12f} {row.residual:>12.3e} {ratio:>8}")
    params = {'s': args.s, 't': args.t, 'n': list(args.n), 'dps': args.dps}
    emit(args, params, table, '\n'.join(lines), rows=rows)
    return 0


def cmd_expand(args: argparse.Namespace) -> int:
    head = parse_graph(args.head)
    rest = parse_graph(args.rest)
    estimate = approx_spread(head, rest)
    estimate.validate()
    series = moment_series(head, rest, order=args.order)
    results: Dict[str, Any] = {'estimate': estimate, 'series': series}
    diagnostics: Dict[str, Any] = {}
    try:
        results['implicit_spread'] = implicit_spread(series)
    except (ParameterRangeError, ConvergenceError) as e:
        results['implicit_spread'] = None
        diagnostics['implicit_spread'] = str(e)
        print_warning(f"implicit solve skipped: {e}")
    if head.n + rest.n <= get_config().max_order:
        results['exact_spread'] = eigenvalues(join(head, rest)).spread
    if rest.max_degree() ** 2 >= series.a0:
        print_warning("Δ(R)² ≥ a₀: the expansion is outside its range of validity")
    if args.t is not None:
        results['c2_decomposition'] = c2_decomposition(head, rest, args.t)
        if 2 <= head.n + 1 <= get_config().psi_max_s:
            results['c2_equality'] = c2_equality_report(head, rest, args.t)
    text = f"approx = {estimate.approx_spread:.12f}"
    if 'exact_spread' in results:
        text += f"\nexact  = {results['exact_spread']:.12f}"
    params = {'head': args.head, 'rest': args.rest, 't': args.t, 'order': args.order}
    emit(args, params, results, text, diagnostics=diagnostics)
    return 0


def cmd_accept(args: argparse.Namespace) -> int:
    from evaluation.runner import AcceptanceRunner

    numbers = None
    if args.criteria:
        try:
            numbers = [int(x) for x in args.criteria.split(',') if x.strip()]
        except ValueError:
            raise MalformedInput(f"--criteria expects comma-separated numbers, got {args.criteria!r}") from None
    print_header("ACCEPTANCE SUITE")
    runner = AcceptanceRunner(seed=get_config().seed)
    summary = runner.run(numbers)
    rows = [
        {
            'criterion': r.criterion,
            'name': r.metric_name,
            'passed': r.passed,
            'score': r.score,
            'seconds': round(r.duration_seconds, 3),
            'budget': r.budget_seconds,
        }
        for r in summary.results
    ]
    emit(args, {'criteria': numbers}, summary, runner.generate_report(summary), rows=rows)
    if summary.all_passed:
        print_success(f"All {summary.total_criteria} criteria passed")
        return 0
    print_error(f"{summary.failed_criteria} of {summary.total_criteria} criteria failed")
    return 1


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    'spread': cmd_spread,
    'construct': cmd_construct,
    'psi-max': cmd_psi_max,
    'admissible': cmd_admissible,
    'ell0': cmd_ell0,
    'scan-ell': cmd_scan_ell,
    'minor': cmd_minor,
    'kst-minor': cmd_kst_minor,
    'search': cmd_search,
    'converge': cmd_converge,
    'expand': cmd_expand,
    'accept': cmd_accept,
}


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    output_group = common.add_argument_group('Output')
    output_group.add_argument('--json', action='store_true', help='Emit a JSON report')
    output_group.add_argument('--csv', action='store_true', help='Emit a CSV table where the command has one')
    output_group.add_argument('--out', help='Write the report to this path instead of stdout')
    run_group = common.add_argument_group('Execution')
    run_group.add_argument('--threads', type=int, help='Worker pool size (overrides WORKBENCH_THREADS)')
    run_group.add_argument('--seed', type=int, help='Seed for randomized suites (overrides WORKBENCH_SEED)')
    run_group.add_argument('--caps', help='Config overrides as key=value,... (e.g. enum_max_n=7,minor_max_n=12)')
    run_group.add_argument(
        '--log-level',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        help='Set logging level (overrides WORKBENCH_LOG_LEVEL env var)'
    )
    run_group.add_argument('--quiet', action='store_true', help='Suppress status messages')

    parser = argparse.ArgumentParser(
        description="Maximum-spread K_{s,t}-minor-free graph workbench",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Spread of K2
  python main.py spread A_

  # Optimal number of K_t blocks
  python main.py ell0 --s 2 --t 2 --n 100 --json

  # Admissibility table as CSV
  python main.py admissible --s-max 8 --t-max 24 --csv

  # Exhaustive search on 6 vertices
  python main.py search --n 6 --s 2 --t 2
        """
    )
    subparsers = parser.add_subparsers(dest='command', help='Command to execute')

    def pair(p: argparse.ArgumentParser) -> None:
        p.add_argument('--s', type=int, required=True, help='K_{s,t} parameter s')
        p.add_argument('--t', type=int, required=True, help='K_{s,t} parameter t')

    p = subparsers.add_parser('spread', parents=[common], help='Spread of a graph6 graph')
    p.add_argument('graph', help="graph6 string ('-' reads stdin)")
    p.add_argument('--method', choices=['lapack', 'jacobi'], default='lapack', help='Eigensolver')

    p = subparsers.add_parser('construct', parents=[common], help='Build L ∨ (ℓK_t ∪ mP₁)')
    pair(p)
    p.add_argument('--n', type=int, required=True, help='Order')
    p.add_argument('--ell', type=int, help='Number of K_t blocks (default: ℓ₀)')
    p.add_argument('--head', help='graph6 of the join head L (default: (s−1)P₁)')

    p = subparsers.add_parser('psi-max', parents=[common], help='Maximize ψ over graphs on s−1 vertices')
    pair(p)
    p.add_argument('--brute-force', action='store_true', help='Enumerate graphs instead of degree sequences')

    p = subparsers.add_parser('admissible', parents=[common], help='Admissibility table')
    p.add_argument('--s-max', type=int, required=True, help='Largest s')
    p.add_argument('--t-max', type=int, required=True, help='Largest t')
    p.add_argument('--brute-force', action='store_true', help='Add the graph-enumeration verdict')

    p = subparsers.add_parser('ell0', parents=[common], help='ℓ₁ and the rounded ℓ₀')
    pair(p)
    p.add_argument('--n', type=int, required=True, help='Order')

    p = subparsers.add_parser('scan-ell', parents=[common], help='Exact spread for every ℓ')
    pair(p)
    p.add_argument('--n', type=int, required=True, help='Order')
    p.add_argument('--method', choices=['dense', 'cubic', 'auto'], default='auto', help='Spread method')
    p.add_argument('--head', help='graph6 of the join head L (default: (s−1)P₁)')

    p = subparsers.add_parser('minor', parents=[common], help='Is H a minor of G?')
    p.add_argument('graph', help='graph6 of G')
    p.add_argument('pattern', help='graph6 of H')

    p = subparsers.add_parser('kst-minor', parents=[common], help='Is K_{s,t} a minor of G?')
    p.add_argument('graph', help='graph6 of G')
    pair(p)

    p = subparsers.add_parser('search', parents=[common], help='Exhaustive max-spread search')
    pair(p)
    p.add_argument('--n', type=int, required=True, help='Order')

    p = subparsers.add_parser('converge', parents=[common], help='Expansion convergence experiment')
    pair(p)
    p.add_argument('--n', type=int, nargs='+', required=True, help='Orders (usually doublings)')
    p.add_argument('--dps', type=int, default=50, help='mpmath precision in digits')

    p = subparsers.add_parser('expand', parents=[common], help='Spread expansion of L ∨ R')
    p.add_argument('head', help='graph6 of L')
    p.add_argument('rest', help='graph6 of R')
    p.add_argument('--t', type=int, help='Report the c₂ rewriting for this t')
    p.add_argument('--order', type=int, default=6, help='Moment truncation K for the implicit solve')

    p = subparsers.add_parser('accept', parents=[common], help='Run the acceptance suite')
    p.add_argument('--criteria', help='Comma-separated criterion numbers (default: all)')

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point.

    Returns:
        Exit code: 0 success, 1 computation refused or failed, 2 malformed input,
        130 interrupted
    """
    global _QUIET
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 2

    _QUIET = args.quiet
    try:
        configure(args)
        logger = get_context_logger(__name__, command=args.command).bind(
            **{key: getattr(args, key) for key in ("s", "t", "n") if isinstance(getattr(args, key, None), int)}
        )
        get_metrics_collector().start_session()
        logger.info("command started", extra={'params': {k: v for k, v in vars(args).items() if k != 'command'}})
        code = COMMANDS[args.command](args)
        logger.info("command finished", extra={'event': 'exit', 'metrics': {'exit_code': code}})
        return code

    except KeyboardInterrupt:
        print_warning("Interrupted by user")
        return 130

    except MalformedInput as e:
        print_error(f"Malformed input: {e}")
        return 2

    except ComputationRefused as e:
        print_error(f"Refused: {e}")
        return 1

    except WorkbenchError as e:
        print_error(f"Computation failed: {e}")
        logging.exception("Computation failed")
        return 1

    except ValueError as e:
        print_error(f"Invalid value: {e}")
        return 2


if __name__ == '__main__':
    sys.exit(main())
