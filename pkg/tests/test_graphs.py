"""Tests for the graph value type, constructions, canonical forms, enumeration and graph6."""

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.config import get_config, set_config
from src.errors import ComputationRefused, MalformedInput, ParameterRangeError
from src.graphs import (
    CanonicalCapError,
    EnumerationCapError,
    Graph,
    Graph6Error,
    OrderOverflowError,
    build_extremal,
    canonical_code,
    canonical_form,
    complete,
    complete_bipartite,
    construct,
    count_graphs,
    cycle,
    disjoint_union,
    empty,
    enumerate_graphs,
    from_graph6,
    join,
    path,
    random_graph,
    star,
    star_of_cliques,
    tait_extremal,
    to_graph6,
)


@st.composite
def graphs(draw, min_n=1, max_n=8):
    """Hypothesis strategy for small labelled graphs."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [pair for pair, keep in zip(pairs, chosen) if keep])


class TestGraph:
    """Test the Graph value type."""

    def test_from_edges_is_symmetric(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        assert g.has_edge(1, 0)
        assert g.has_edge(2, 1)
        assert not g.has_edge(0, 2)
        assert g.edges() == [(0, 1), (1, 2)]

    def test_invalid_rows_rejected(self):
        with pytest.raises(ValueError, match="symmetric"):
            Graph(2, (0b10, 0))
        with pytest.raises(ValueError, match="loop"):
            Graph(1, (1,))
        with pytest.raises(ValueError):
            Graph(0, ())

    def test_degree_helpers(self):
        g = star(3)
        assert g.degrees() == [3, 1, 1, 1]
        assert g.edge_count() == 3
        assert g.max_degree() == 3
        assert g.degree_sequence().degrees == (3, 1, 1, 1)
        assert g.is_regular() is None
        assert cycle(5).is_regular() == 2

    def test_components_and_bipartition(self):
        g = disjoint_union([(complete(2), 2), (empty(1), 1)])
        assert g.components() == [0b00011, 0b01100, 0b10000]
        assert not g.is_connected()
        assert cycle(4).bipartition() is not None
        assert cycle(5).bipartition() is None

    def test_derived_graphs(self):
        g = path(4)
        assert g.delete_vertex(0).edges() == [(0, 1), (1, 2)]
        assert g.add_edge(0, 3).edges() == cycle(4).edges()
        assert complete(4).complement().edge_count() == 0
        assert g.induced([3, 2]).edges() == [(0, 1)]
        assert g.relabel([3, 2, 1, 0]).edges() == g.edges()

    def test_networkx_round_trip(self):
        g = complete_bipartite(2, 3)
        assert Graph.from_networkx(g.to_networkx()) == g

    def test_adjacency_matrix(self):
        matrix = cycle(4).adjacency_matrix()
        assert matrix.shape == (4, 4)
        assert (matrix == matrix.T).all()
        assert matrix.sum() == 8

    def test_from_adjacency_and_neighbors(self):
        g = Graph.from_adjacency(cycle(5).adjacency_matrix().tolist())
        assert g == cycle(5)
        assert g.neighbors(0) == [1, 4]
        assert star(3).neighbors(0) == [1, 2, 3]


class TestConstructions:
    """Test named constructions."""

    def test_named_examples(self):
        assert complete(3).edge_count() == 3
        assert empty(4).n == 4 and empty(4).edge_count() == 0
        k23 = complete_bipartite(2, 3)
        assert (k23.n, k23.edge_count()) == (5, 6)

    def test_construct_dispatch(self):
        assert construct("cycle", 5) == cycle(5)
        assert construct("star", 4) == star(4)
        assert construct("star_of_cliques", 2, 3, 2).n == 7

    def test_construct_errors(self):
        with pytest.raises(ValueError, match="Unknown construction"):
            construct("wheel", 5)
        with pytest.raises(ValueError, match="Wrong parameters"):
            construct("complete_bipartite", 2)
        with pytest.raises(ParameterRangeError):
            construct("complete", 0)
        with pytest.raises(ParameterRangeError):
            cycle(2)

    def test_order_overflow(self):
        with pytest.raises(OrderOverflowError):
            complete(65)
        with pytest.raises(OrderOverflowError):
            join(complete(40), empty(30))

    def test_lowered_order_cap(self):
        set_config(get_config().with_overrides(max_order=10))
        with pytest.raises(OrderOverflowError):
            empty(11)
        assert isinstance(OrderOverflowError("x"), ComputationRefused)

    def test_join_examples(self):
        assert join(complete(1), complete(1)) == complete(2)
        assert join(empty(2), empty(3)) == complete_bipartite(2, 3)
        g = join(complete(1), disjoint_union([(complete(2), 3)]))
        assert (g.n, g.edge_count()) == (7, 9)

    def test_disjoint_union_examples(self):
        g = disjoint_union([(complete(2), 3)])
        assert (g.n, g.edge_count()) == (6, 3)
        g = disjoint_union([(complete(3), 1), (empty(1), 2)])
        assert (g.n, g.edge_count()) == (5, 3)
        g = disjoint_union([(complete(3), 2)])
        assert (g.n, g.edge_count()) == (6, 6)

    def test_disjoint_union_errors(self):
        with pytest.raises(ValueError):
            disjoint_union([(complete(3), 0)])
        with pytest.raises(ParameterRangeError):
            disjoint_union([(complete(3), -1)])

    def test_join_edge_identity_on_small_classes(self):
        small = [g for n in range(1, 4) for g in enumerate_graphs(n)]
        for g, h in itertools.product(small, repeat=2):
            assert join(g, h).edge_count() == g.edge_count() + h.edge_count() + g.n * h.n

    def test_build_extremal_examples(self):
        g = build_extremal(complete(1), 2, 6, 2)
        assert (g.n, g.edge_count()) == (6, 7)
        # |L|(n−|L|) + |E(L)| + ℓ·t(t−1)/2 = 12 + 0 + 3
        g = build_extremal(empty(2), 1, 8, 3)
        assert (g.n, g.edge_count()) == (8, 15)
        assert nx.is_isomorphic(build_extremal(complete(1), 0, 5, 2).to_networkx(),
                                star(4).to_networkx())

    def test_build_extremal_labelling(self):
        g = build_extremal(empty(2), 1, 7, 3)
        assert all(g.has_edge(h, v) for h in (0, 1) for v in range(2, 7))
        assert g.has_edge(2, 3) and g.has_edge(3, 4) and g.has_edge(2, 4)
        assert g.degrees()[5:] == [2, 2]

    def test_build_extremal_errors(self):
        with pytest.raises(ParameterRangeError):
            build_extremal(empty(2), 3, 8, 3)
        with pytest.raises(ParameterRangeError):
            build_extremal(empty(2), -1, 8, 3)

    @given(head=graphs(max_n=4), ell=st.integers(0, 3), t=st.integers(1, 4), extra=st.integers(0, 4))
    @settings(max_examples=60, deadline=None)
    def test_build_extremal_edge_count(self, head, ell, t, extra):
        n = head.n + ell * t + extra
        g = build_extremal(head, ell, n, t)
        expected = head.n * (n - head.n) + head.edge_count() + ell * t * (t - 1) // 2
        assert g.edge_count() == expected

    def test_star_of_cliques_and_tait_family(self):
        g = star_of_cliques(3, 2, 4)
        assert (g.n, g.edge_count()) == (10, 2 * 8 + 4)
        tait = tait_extremal(3, 3, 8)
        assert tait.edge_count() == 1 + 2 * 6 + 2 * 3
        with pytest.raises(ParameterRangeError):
            tait_extremal(3, 3, 9)

    def test_random_graph_is_reproducible(self):
        a = random_graph(8, 0.5, random.Random(7))
        b = random_graph(8, 0.5, random.Random(7))
        assert a == b


class TestCanonical:
    """Test canonical codes and forms."""

    def test_cycle_relabel_invariance(self):
        c4 = cycle(4)
        for perm in itertools.permutations(range(4)):
            assert canonical_code(c4.relabel(list(perm))) == canonical_code(c4)

    def test_distinguishes_p4_and_claw(self):
        assert canonical_code(path(4)) != canonical_code(star(3))

    def test_all_labelled_graphs_on_four_vertices(self):
        pairs = list(itertools.combinations(range(4), 2))
        codes = set()
        for mask in range(1 << len(pairs)):
            edges = [pair for i, pair in enumerate(pairs) if (mask >> i) & 1]
            codes.add(canonical_code(Graph.from_edges(4, edges)))
        assert len(codes) == 11

    def test_canonical_form_is_isomorphic(self, rng):
        for _ in range(20):
            g = random_graph(rng.randint(1, 8), rng.random(), rng)
            form = canonical_form(g)
            assert nx.is_isomorphic(form.to_networkx(), g.to_networkx())
            assert canonical_form(form) == form

    def test_random_permutations(self, rng):
        for _ in range(50):
            g = random_graph(rng.randint(1, 8), rng.random(), rng)
            code = canonical_code(g)
            for _ in range(50):
                perm = list(range(g.n))
                rng.shuffle(perm)
                assert canonical_code(g.relabel(perm)) == code

    @given(g=graphs(max_n=7), data=st.data())
    @settings(max_examples=80, deadline=None)
    def test_codes_agree_with_isomorphism(self, g, data):
        h = data.draw(graphs(min_n=g.n, max_n=g.n))
        same = nx.is_isomorphic(g.to_networkx(), h.to_networkx())
        assert (canonical_code(g) == canonical_code(h)) == same

    def test_cap_and_heuristic(self):
        g = path(11)
        with pytest.raises(CanonicalCapError):
            canonical_code(g)
        code = canonical_code(g, heuristic=True)
        assert code.startswith(b"\xff")


class TestEnumeration:
    """Test isomorphism-class enumeration."""

    @pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
    def test_class_counts(self, n, expected):
        assert count_graphs(n) == expected

    def test_matches_networkx_atlas(self):
        atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 5]
        ours = list(enumerate_graphs(5))
        assert len(ours) == len(atlas)
        for g in ours:
            matches = [a for a in atlas if nx.is_isomorphic(a, g.to_networkx())]
            assert len(matches) == 1

    def test_pairwise_non_isomorphic(self):
        classes = [g.to_networkx() for g in enumerate_graphs(5)]
        for a, b in itertools.combinations(classes, 2):
            assert not nx.is_isomorphic(a, b)

    def test_deterministic_order(self):
        assert list(enumerate_graphs(4)) == list(enumerate_graphs(4))
        edges = [g.edge_count() for g in enumerate_graphs(4)]
        assert edges == sorted(edges)

    @pytest.mark.slow
    def test_six_and_seven_vertices(self):
        assert count_graphs(6) == 156
        assert count_graphs(7) == 1044

    def test_cap(self):
        with pytest.raises(EnumerationCapError):
            list(enumerate_graphs(9))
        assert count_graphs(3, cap=3) == 4
        with pytest.raises(EnumerationCapError):
            list(enumerate_graphs(4, cap=3))

    def test_hard_cap_cannot_be_raised(self):
        with pytest.raises(ValueError):
            get_config().with_overrides(enum_max_n=10)


class TestGraph6:
    """Test graph6 encoding and decoding."""

    def test_known_strings(self):
        assert to_graph6(complete(3)) == "Bw"
        assert to_graph6(empty(2)) == "A?"
        assert to_graph6(complete(2)) == "A_"
        assert from_graph6("Bw") == complete(3)

    def test_header_and_whitespace(self):
        assert from_graph6(">>graph6<<Bw\n") == complete(3)

    @given(g=graphs(max_n=20))
    @settings(max_examples=100, deadline=None)
    def test_round_trip(self, g):
        assert from_graph6(to_graph6(g)) == g

    def test_agrees_with_networkx(self, rng):
        for _ in range(20):
            g = random_graph(rng.randint(1, 40), 0.3, rng)
            expected = nx.to_graph6_bytes(g.to_networkx(), header=False).strip().decode()
            assert to_graph6(g) == expected

    @pytest.mark.parametrize("text", ["", "A", "Bw?", "A!", "~??"])
    def test_malformed(self, text):
        with pytest.raises(Graph6Error):
            from_graph6(text)

    def test_graph6_error_is_malformed_input(self):
        with pytest.raises(MalformedInput):
            from_graph6("A")
        with pytest.raises(ValueError):
            from_graph6("A")
