"""Tests for eigenvalues, spread and the spectral bounds."""

import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.config import get_config, set_config
from src.errors import ComputationRefused, ParameterRangeError
from src.graphs import (
    Graph,
    build_extremal,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    join,
    path,
    random_graph,
    star,
    star_of_cliques,
    tait_extremal,
)
from src.models import Spectrum
from src.observability import get_metrics_collector
from src.spectra import (
    NonRegularError,
    check_spectrum,
    clique_union_side,
    eigenvalues,
    empty_side,
    jacobi_eigenvalues,
    join_graph_spectrum,
    join_regular_spectrum,
    kst_spread_closed_form,
    lambdan_window,
    regular_side,
    spectral_radius,
    spread,
    spread_lower_bound,
    tait_bound,
    window_check,
)
from tests.test_graphs import graphs


class TestEigenvalues:
    """Test the dense solvers."""

    def test_k2_spread(self):
        assert spread(complete(2)) == pytest.approx(2.0, abs=1e-12)

    def test_complete_graph(self):
        values = eigenvalues(complete(5)).eigenvalues
        assert values[0] == pytest.approx(4.0)
        assert all(v == pytest.approx(-1.0) for v in values[1:])
        assert spread(complete(5)) == pytest.approx(5.0)

    def test_star_and_cycle(self):
        assert spread(star(9)) == pytest.approx(6.0)
        expected = sorted((2 * math.cos(2 * math.pi * k / 7) for k in range(7)), reverse=True)
        assert np.allclose(eigenvalues(cycle(7)).eigenvalues, expected, atol=1e-12)

    def test_sorted_descending_and_valid(self, rng):
        for _ in range(10):
            g = random_graph(12, 0.4, rng)
            spectrum = check_spectrum(g)
            assert list(spectrum.eigenvalues) == sorted(spectrum.eigenvalues, reverse=True)

    def test_matches_numpy_oracle(self, rng):
        for _ in range(10):
            g = random_graph(rng.randint(2, 30), rng.random(), rng)
            oracle = np.sort(np.linalg.eigvalsh(nx.to_numpy_array(g.to_networkx())))[::-1]
            assert np.allclose(eigenvalues(g).eigenvalues, oracle, atol=1e-10)

    @given(g=graphs(max_n=10))
    @settings(max_examples=50, deadline=None)
    def test_jacobi_agrees_with_lapack(self, g):
        lapack = eigenvalues(g, method="lapack").eigenvalues
        jacobi = eigenvalues(g, method="jacobi").eigenvalues
        assert np.allclose(lapack, jacobi, atol=1e-9)

    def test_jacobi_on_dense_matrix(self):
        matrix = np.array([[2.0, 1.0, 0.0], [1.0, 2.0, 1.0], [0.0, 1.0, 2.0]])
        values = sorted(jacobi_eigenvalues(matrix))
        assert np.allclose(values, [2 - math.sqrt(2), 2.0, 2 + math.sqrt(2)], atol=1e-12)

    def test_unknown_method(self):
        with pytest.raises(ValueError, match="Unknown eigen method"):
            eigenvalues(complete(3), method="power")

    def test_dense_cap(self):
        set_config(get_config().with_overrides(dense_max_n=3))
        with pytest.raises(ComputationRefused):
            eigenvalues(complete(4))

    def test_eigen_solves_are_counted(self):
        spectral_radius(path(3))
        spread(path(3))
        assert get_metrics_collector().get_counter("eigen") == 2


class TestSpectrumModel:
    """Test Spectrum validation."""

    def test_validate_rejects_unsorted(self):
        with pytest.raises(ValueError, match="sorted"):
            Spectrum((-1.0, 1.0)).validate()

    def test_validate_rejects_bad_trace(self):
        with pytest.raises(ValueError, match="trace"):
            Spectrum((1.0, 0.5)).validate()

    def test_validate_second_moment(self):
        Spectrum((1.0, -1.0)).validate(edge_count=1)
        with pytest.raises(ValueError, match="2\\|E\\|"):
            Spectrum((1.0, -1.0)).validate(edge_count=2)

    def test_dict_round_trip(self):
        spectrum = eigenvalues(cycle(4))
        assert Spectrum.from_dict(spectrum.to_dict()) == spectrum
        assert spectrum.n == 4


class TestJoinSpectrum:
    """Test the regular join-spectrum formula."""

    def test_closed_form_sides(self):
        assert np.allclose(sorted(empty_side(4).spectrum), sorted(regular_side(empty(4)).spectrum))
        dense = regular_side(disjoint_union([(complete(3), 2)])).spectrum
        assert np.allclose(sorted(clique_union_side(2, 3).spectrum), sorted(dense), atol=1e-12)

    def test_matches_dense_solver(self):
        cases = [
            (cycle(5), complete(3)),
            (empty(3), cycle(6)),
            (complete(1), disjoint_union([(complete(2), 3)])),
            (complete_bipartite(3, 3), empty(2)),
        ]
        for g, h in cases:
            formula = join_graph_spectrum(g, h).eigenvalues
            dense = eigenvalues(join(g, h)).eigenvalues
            assert np.allclose(formula, dense, atol=1e-9)

    def test_random_regular_pairs(self, rng):
        checked = 0
        while checked < 30:
            m, k = rng.randint(1, 9), rng.randint(0, 8)
            n, l = rng.randint(1, 9), rng.randint(0, 8)
            if k >= m or l >= n or (m * k) % 2 or (n * l) % 2:
                continue
            g = regular(k, m, rng)
            h = regular(l, n, rng)
            formula = join_regular_spectrum(regular_side(g), regular_side(h)).eigenvalues
            assert np.allclose(formula, eigenvalues(join(g, h)).eigenvalues, atol=1e-9)
            checked += 1

    def test_non_regular_side(self):
        with pytest.raises(NonRegularError):
            regular_side(path(3))

    def test_inconsistent_side(self):
        side = clique_union_side(2, 3)
        broken = type(side)(degree=1, order=side.order, spectrum=side.spectrum)
        with pytest.raises(NonRegularError):
            join_regular_spectrum(broken, empty_side(2))


def regular(degree, order, rng):
    if degree == 0:
        return empty(order)
    return Graph.from_networkx(nx.random_regular_graph(degree, order, seed=rng.randrange(2 ** 31)))


class TestBounds:
    """Test closed forms and asymptotic windows."""

    @pytest.mark.parametrize("s", [2, 3, 4, 5])
    @pytest.mark.parametrize("q", [1, 2, 5, 8])
    def test_star_of_cliques_closed_form(self, s, q):
        for t in range(s, 6):
            assert spread(star_of_cliques(s, t, q)) == pytest.approx(
                kst_spread_closed_form(s, t, q), abs=1e-9
            )

    def test_closed_form_range(self):
        with pytest.raises(ParameterRangeError):
            kst_spread_closed_form(3, 3, 0)
        with pytest.raises(ParameterRangeError):
            kst_spread_closed_form(1, 3, 2)

    @pytest.mark.parametrize("s,t,n", [(2, 2, 9), (3, 3, 11), (3, 4, 14), (4, 5, 23)])
    def test_tait_bound_is_attained(self, s, t, n):
        assert spectral_radius(tait_extremal(s, t, n)) == pytest.approx(tait_bound(s, t, n), abs=1e-9)

    def test_tait_bound_range(self):
        with pytest.raises(ParameterRangeError):
            tait_bound(3, 2, 10)
        with pytest.raises(ParameterRangeError):
            tait_bound(3, 3, 5)

    def test_lambdan_window(self):
        window = lambdan_window(3, 4, 51)
        assert window.center == pytest.approx(math.sqrt(2 * 49))
        assert window.high - window.low == pytest.approx(4.0)
        assert window.contains(window.center)
        assert not window.contains(window.high + 0.5)
        assert window.contains(window.high + 0.5, slack=1.0)
        assert "slack" in window.to_dict()['note']

    def test_spread_lower_bound_by_interlacing(self):
        s, t, n = 3, 3, 20
        q = (n - s + 1) // t
        full = build_extremal(empty(s - 1), q, n, t)
        assert spread_lower_bound(s, t, n) <= spread(full) + 1e-9
        assert spread_lower_bound(s, t, n) == pytest.approx(kst_spread_closed_form(s, t, q))

    def test_spread_lower_bound_needs_room(self):
        with pytest.raises(ParameterRangeError):
            spread_lower_bound(3, 5, 5)

    def test_window_check(self):
        g = build_extremal(empty(1), 10, 41, 2)
        report = window_check(g, 2, 2, slack=1.0)
        assert report['lambda_n_inside']
        assert report['lambda_1_at_least_low']
        assert report['abs_lambda_n'] == pytest.approx(abs(eigenvalues(g).smallest))

    @given(q=st.integers(1, 6), t=st.integers(2, 5))
    @settings(max_examples=30, deadline=None)
    def test_tait_family_below_ceiling(self, q, t):
        s = 2
        n = s - 1 + q * t
        if n < s + t:
            return
        g = build_extremal(empty(1), q, n, t)
        assert spectral_radius(g) <= tait_bound(s, t, n) + 1e-9
