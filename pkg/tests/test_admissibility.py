"""Tests for ψ, its maximization and the admissibility verdicts."""

from collections import defaultdict
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.admissibility import (
    NotGraphicalError,
    OrderMismatchError,
    admissibility_table,
    admissible_closed_form,
    closed_form_note,
    closed_form_threshold,
    count_graphical_sequences,
    degree_square_bounds,
    graphical_sequences,
    havel_hakimi,
    is_graphical,
    maximize_psi,
    maximize_psi_bruteforce,
    psi,
    psi_decaen_upper,
    psi_from_degrees,
    psi_star_formula,
)
from src.config import get_config, set_config
from src.errors import ParameterRangeError
from src.graphs import complete, complete_bipartite, empty, enumerate_graphs, star
from src.models import PsiReport


class TestPsi:
    """Test the ψ objective."""

    @pytest.mark.parametrize("s", [2, 4, 9])
    def test_empty_head(self, s):
        assert psi(empty(s - 1), s, 7) == 0

    def test_star_at_eight_eight(self):
        assert psi(star(6), 8, 8) == Fraction(6, 7)
        assert psi_from_degrees(12, 42, 8, 8) == Fraction(6, 7)

    def test_single_edge(self):
        assert psi(complete(2), 3, 3) == -2
        assert psi_from_degrees(2, 2, 3, 3) == -2

    def test_zero_profile(self):
        assert psi_from_degrees(0, 0, 5, 9) == 0

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatchError):
            psi(complete(3), 3, 3)

    def test_small_s(self):
        with pytest.raises(ParameterRangeError):
            psi_from_degrees(0, 0, 1, 3)

    def test_depends_only_on_degree_sequence(self):
        for m in range(1, 7):
            seen = defaultdict(set)
            for head in enumerate_graphs(m):
                seen[head.degree_sequence().degrees].add(psi(head, m + 1, m + 2))
            assert all(len(values) == 1 for values in seen.values())

    @pytest.mark.parametrize("s", [3, 4, 5, 8, 10])
    def test_star_formula_matches_direct(self, s):
        for t in range(s, 3 * s + 1):
            assert psi_star_formula(s, t) == psi(star(s - 2), s, t)

    def test_star_formula_examples(self):
        assert psi_star_formula(8, 8) == Fraction(6, 7)
        assert psi_star_formula(3, 3) == -2
        with pytest.raises(ParameterRangeError):
            psi_star_formula(2, 2)

    @pytest.mark.parametrize("s", [4, 6, 8, 10])
    def test_star_sign_flips_at_threshold(self, s):
        positive = [t for t in range(s, 4 * s) if psi_star_formula(s, t) > 0]
        if positive:
            assert max(positive) < closed_form_threshold(s)
        assert all(psi_star_formula(s, t) <= 0 for t in range(s, 4 * s) if t >= closed_form_threshold(s))

    def test_large_t_makes_every_nonempty_head_negative(self):
        for s in range(3, 8):
            t = max(s, -(-3 * (s - 3) // 2) + 1)
            for head in enumerate_graphs(s - 1):
                if head.edge_count():
                    assert psi(head, s, t) < 0

    def test_decaen_upper_bound(self):
        for m in range(2, 7):
            for head in enumerate_graphs(m):
                total = sum(head.degrees())
                assert psi(head, m + 1, m + 3) <= psi_decaen_upper(total, m + 1, m + 3)


class TestDegreeSequences:
    """Test the Erdős–Gallai test and Havel–Hakimi realization."""

    def test_is_graphical(self):
        assert is_graphical([3, 3, 3, 3])
        assert is_graphical([0, 0])
        assert not is_graphical([3, 3, 1, 1])
        assert not is_graphical([1])
        assert not is_graphical([4, 1, 1, 1])

    def test_counts(self):
        assert [count_graphical_sequences(m) for m in range(1, 6)] == [1, 2, 4, 11, 31]

    def test_sequences_are_sorted_and_distinct(self):
        sequences = [seq.degrees for seq in graphical_sequences(5)]
        assert len(sequences) == len(set(sequences))
        assert all(list(d) == sorted(d, reverse=True) for d in sequences)

    def test_sequences_match_enumerated_graphs(self):
        for m in range(1, 7):
            realized = {g.degree_sequence().degrees for g in enumerate_graphs(m)}
            assert realized == {seq.degrees for seq in graphical_sequences(m)}

    @given(st.integers(1, 7).flatmap(lambda m: st.lists(st.integers(0, m - 1), min_size=m, max_size=m)))
    @settings(max_examples=80, deadline=None)
    def test_havel_hakimi_realizes(self, degrees):
        if not is_graphical(degrees):
            with pytest.raises(NotGraphicalError):
                havel_hakimi(degrees)
            return
        g = havel_hakimi(degrees)
        assert sorted(g.degrees(), reverse=True) == sorted(degrees, reverse=True)

    def test_not_graphical_is_a_value_error(self):
        with pytest.raises(ValueError):
            havel_hakimi([2, 0])


class TestMaximizePsi:
    """Test ψ maximization and the verdict rule."""

    def test_s_two(self):
        report = maximize_psi(2, 2)
        assert report.psi_max == 0
        assert report.witness.n == 1
        assert report.admissible

    def test_three_three(self):
        report = maximize_psi(3, 3)
        assert report.psi_max == 0
        assert [seq.degrees for seq in report.optimal_degree_sequences] == [(0, 0)]
        assert report.admissible
        report.validate()

    def test_eight_eight(self):
        report = maximize_psi(8, 8)
        assert report.psi_max >= Fraction(6, 7)
        assert not report.admissible
        assert psi(report.witness, 8, 8) == report.psi_max
        report.validate()

    def test_range(self):
        with pytest.raises(ParameterRangeError):
            maximize_psi(1, 3)
        with pytest.raises(ParameterRangeError):
            maximize_psi(get_config().psi_max_s + 1, 40)

    def test_configurable_range(self):
        set_config(get_config().with_overrides(psi_max_s=4))
        with pytest.raises(ParameterRangeError):
            maximize_psi(5, 5)

    @pytest.mark.parametrize("s", [3, 4, 5, 6, 7])
    def test_bruteforce_agrees(self, s):
        for t in range(s, 3 * s + 1):
            fast = maximize_psi(s, t)
            slow = maximize_psi_bruteforce(s, t)
            assert fast.psi_max == slow.psi_max
            assert fast.admissible == slow.admissible
            assert {seq.degrees for seq in fast.optimal_degree_sequences} == {
                seq.degrees for seq in slow.optimal_degree_sequences
            }

    @pytest.mark.slow
    def test_bruteforce_agrees_at_eight(self):
        for t in range(8, 25):
            assert maximize_psi(8, t).admissible == maximize_psi_bruteforce(8, t).admissible

    def test_report_round_trip(self):
        report = maximize_psi(5, 5)
        again = PsiReport.from_dict(report.to_dict())
        assert again.psi_max == report.psi_max
        assert again.optimal_degree_sequences == report.optimal_degree_sequences
        assert again.witness.degrees() == report.witness.degrees()

    def test_validate_rejects_wrong_flag(self):
        report = maximize_psi(3, 3)
        broken = PsiReport(
            s=3, t=3, psi_max=report.psi_max,
            optimal_degree_sequences=report.optimal_degree_sequences,
            witness=report.witness, admissible=False,
        )
        with pytest.raises(ValueError, match="admissible"):
            broken.validate()


class TestClosedForm:
    """Test the closed-form criterion and the table."""

    def test_examples(self):
        assert not admissible_closed_form(8, 8)
        assert admissible_closed_form(8, 9)
        assert admissible_closed_form(3, 3)
        assert closed_form_threshold(8) == Fraction(15, 2) + Fraction(4, 7)

    def test_s_two_special_case(self):
        assert admissible_closed_form(2, 2)
        assert closed_form_note(2, 2)
        assert closed_form_note(2, 3) == ""
        assert closed_form_note(3, 3) == ""

    def test_range(self):
        with pytest.raises(ParameterRangeError):
            admissible_closed_form(4, 3)
        with pytest.raises(ParameterRangeError):
            admissible_closed_form(1, 3)

    def test_agrees_with_degree_path(self):
        for s in range(2, 11):
            for t in range(s, 3 * s + 1):
                assert admissible_closed_form(s, t) == maximize_psi(s, t).admissible

    def test_table(self):
        rows = admissibility_table(8, 24, threads=2)
        assert [(row.s, row.t) for row in rows] == sorted((row.s, row.t) for row in rows)
        assert all(row.agree for row in rows)
        non_admissible = [(row.s, row.t) for row in rows if row.t <= 8 and not row.degree_path]
        assert non_admissible == [(8, 8)]

    def test_table_with_brute_force(self):
        rows = admissibility_table(5, 8, brute_force=True)
        assert all(row.brute_force is not None for row in rows)
        assert all(row.agree for row in rows)

    def test_csv_row(self):
        row = next(r for r in admissibility_table(8, 8) if (r.s, r.t) == (8, 8))
        csv_row = row.to_csv_row()
        assert csv_row['admissible'] == "no"
        assert csv_row['brute_force'] == ""
        assert csv_row['psi_max'] == str(row.psi_max)


class TestDegreeSquareBounds:
    """Test the de Caen and Das ceilings."""

    def test_triangle_is_tight_for_decaen(self):
        bounds = degree_square_bounds(complete(3))
        assert bounds.actual == 12
        assert bounds.decaen == 12

    def test_claw_is_tight_for_das(self):
        bounds = degree_square_bounds(complete_bipartite(1, 3))
        assert bounds.actual == 12
        assert bounds.das == 12

    def test_edgeless(self):
        bounds = degree_square_bounds(empty(4))
        assert (bounds.actual, bounds.decaen, bounds.das) == (0, 0, 0)

    def test_hold_on_all_small_graphs(self):
        for n in range(2, 7):
            for g in enumerate_graphs(n):
                assert degree_square_bounds(g).holds()

    def test_needs_two_vertices(self):
        with pytest.raises(ParameterRangeError):
            degree_square_bounds(empty(1))
