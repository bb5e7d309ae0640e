"""Tests for the exhaustive search, convergence experiments and reports."""

import csv
import io
import json
from fractions import Fraction

import pytest

from src.config import get_config, set_config
from src.extremal import NonAdmissiblePairError
from src.graphs import (
    build_extremal,
    complete,
    cycle,
    empty,
    from_graph6,
    star,
)
from src.harness import (
    SearchCapError,
    build_report,
    convergence_experiment,
    family_membership,
    render_csv,
    render_json,
    search_max_spread,
    to_jsonable,
    write_output,
)
from src.minors import has_kst_minor
from src.observability import get_metrics_collector
from src.spectra import spectral_radius, spread, tait_bound


class TestSearch:
    """Test the exhaustive maximum-spread search."""

    def test_census_at_four(self):
        record = search_max_spread(4, 2, 2)
        assert record.examined == 11
        assert record.census_size == 8
        assert record.filter_skips == 2
        record.validate()

    def test_winner_matches_recomputation(self):
        record = search_max_spread(5, 2, 2, threads=2)
        winner = from_graph6(record.best_graph6[0])
        assert spread(winner) == pytest.approx(record.best_spread, abs=1e-10)
        assert record.best_spread >= spread(star(4)) - 1e-10
        assert record.best_spread >= 4.0 - 1e-10
        assert not has_kst_minor(winner, 2, 2).found

    def test_ceilings_hold_for_small_orders(self):
        for n in range(1, 7):
            record = search_max_spread(n, 2, 2)
            assert record.tait_violations == 0
            assert record.crs_violations == 0

    def test_winner_checks(self):
        record = search_max_spread(6, 2, 3)
        checks = record.winner_checks
        assert checks['tait_bound'] == pytest.approx(tait_bound(2, 3, 6))
        assert checks['tait_consistent']
        assert [f['name'] for f in checks['filters']] == ["mader", "kostochka_prince", "crs", "bipartite"]
        assert 'window' in checks

    def test_family_membership_is_reported(self):
        record = search_max_spread(5, 2, 2)
        winner = from_graph6(record.best_graph6[0])
        assert record.winner_in_family == (family_membership(winner, 2, 2) is not None)
        if record.winner_in_family:
            assert record.winner_ell == family_membership(winner, 2, 2)

    def test_single_vertex(self):
        record = search_max_spread(1, 2, 2)
        assert record.census_size == 1
        assert record.best_spread == 0.0
        assert record.runner_up_gap is None
        assert record.winner_in_family
        assert record.winner_ell == 0

    @pytest.mark.slow
    @pytest.mark.parametrize("s,t", [(2, 2), (2, 3), (3, 3)])
    def test_tait_ceiling_over_full_census(self, s, t):
        for n in range(1, 9):
            record = search_max_spread(n, s, t)
            assert record.tait_violations == 0
            if s == 2:
                assert record.crs_violations == 0

    def test_deterministic(self):
        first = search_max_spread(5, 2, 3, threads=1).to_dict()
        second = search_max_spread(5, 2, 3, threads=4).to_dict()
        assert first == second

    def test_counts_examined_graphs(self):
        search_max_spread(4, 2, 2)
        assert get_metrics_collector().get_counter("graphs_examined") == 11

    def test_cap(self):
        set_config(get_config().with_overrides(search_max_n=4))
        with pytest.raises(SearchCapError):
            search_max_spread(5, 2, 2)


class TestFamilyMembership:
    """Test structural detection of L ∨ (ℓK_t ∪ mP₁)."""

    def test_extremal_construction(self):
        assert family_membership(build_extremal(empty(1), 3, 7, 2), 2, 2) == 3
        assert family_membership(build_extremal(complete(2), 2, 9, 3), 3, 3) == 2

    def test_relabelled_construction(self):
        g = build_extremal(empty(1), 2, 6, 2)
        assert family_membership(g.relabel([5, 4, 3, 2, 1, 0]), 2, 2) == 2

    def test_star_has_no_cliques(self):
        assert family_membership(star(4), 2, 2) == 0

    def test_non_members(self):
        assert family_membership(cycle(5), 2, 2) is None
        assert family_membership(build_extremal(empty(1), 1, 6, 3), 2, 2) is None

    def test_head_covers_every_vertex(self):
        assert family_membership(empty(1), 2, 2) == 0
        assert family_membership(complete(2), 3, 3) == 0
        assert family_membership(empty(2), 3, 3) == 0


class TestConvergence:
    """Test the expansion-residual experiment."""

    def test_residual_ratios(self):
        table = convergence_experiment(2, 2, [200, 400, 800, 1600])
        assert len(table.rows) == 4
        assert table.rows[0].ratio is None
        assert len(table.ratios) == 3
        assert table.min_ratio >= 8.0

    def test_other_pair(self):
        table = convergence_experiment(3, 4, [200, 400, 800, 1600])
        assert all(ratio >= 8.0 for ratio in table.ratios)

    def test_rows_carry_formula_constant(self):
        table = convergence_experiment(2, 2, [200, 400])
        for row in table.rows:
            assert row.formula_constant == pytest.approx(row.formula_residual * row.n ** 1.5)
            assert row.exact == pytest.approx(row.approx, abs=1e-6)
        assert json.loads(json.dumps(to_jsonable(table)))['rows'][0]['n'] == 200

    def test_refuses_non_admissible(self):
        with pytest.raises(NonAdmissiblePairError):
            convergence_experiment(8, 8, [200])


class TestReports:
    """Test the JSON envelope and CSV rendering."""

    def test_rationals(self):
        assert to_jsonable(Fraction(890, 27)) == {'num': 890, 'den': 27, 'float': float(f"{890 / 27:.15g}")}

    def test_floats_and_containers(self):
        assert to_jsonable(1 / 3) == float(f"{1 / 3:.15g}")
        assert to_jsonable(float('inf')) == "inf"
        assert to_jsonable({3, 1, 2}) == [1, 2, 3]
        assert to_jsonable((1, (2, b"\x01"))) == [1, [2, "01"]]

    def test_envelope_is_deterministic(self):
        first = build_report("ell0", {'s': 2, 't': 2, 'n': 100}, {'ell_one': Fraction(890, 27)})
        second = build_report("ell0", {'s': 2, 't': 2, 'n': 100}, {'ell_one': Fraction(890, 27)})
        first.pop('timestamp')
        second.pop('timestamp')
        assert render_json(first) == render_json(second)
        assert set(first) == {'command', 'params', 'results', 'diagnostics', 'version'}
        assert 'config' in first['diagnostics']

    def test_csv(self):
        text = render_csv([
            {'s': 8, 't': 8, 'psi_max': Fraction(6, 7), 'admissible': "no"},
            {'s': 8, 't': 9, 'psi_max': Fraction(-3), 'admissible': "yes"},
        ])
        rows = list(csv.DictReader(io.StringIO(text)))
        assert rows[0] == {'s': '8', 't': '8', 'psi_max': '6/7', 'admissible': 'no'}
        assert rows[1]['psi_max'] == '-3'
        assert render_csv([]) == ""

    def test_write_output(self, tmp_path, capsys):
        target = tmp_path / "nested" / "report.json"
        write_output("{}\n", str(target))
        assert target.read_text() == "{}\n"
        write_output("hello\n")
        assert capsys.readouterr().out == "hello\n"

    def test_tait_bound_consistency_of_family(self):
        g = build_extremal(empty(1), 4, 9, 2)
        assert spectral_radius(g) == pytest.approx(tait_bound(2, 2, 9))
