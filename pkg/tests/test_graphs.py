# tests/test_graphs.py
"""Graph model, G(n, p) sampling and the domination oracles."""

import pytest

from src.core.errors import GuardLimitError, ParameterError
from src.graphs import (
    Graph,
    VertexSet,
    all_graphs,
    domination_number_oracle,
    gnp_sample,
    is_dominating,
    is_independent,
    maximal_independent_set,
    oracle_search,
)


class TestGraphModel:

    def test_from_edges_is_symmetric(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert g.has_edge(1, 0) and g.has_edge(0, 1)
        assert not g.has_edge(0, 2)
        assert g.edges() == [(0, 1), (2, 3)]
        assert g.edge_count() == 2

    def test_closed_neighborhood_includes_vertex(self, path3):
        assert path3.closed(0) == 0b011
        assert path3.closed(1) == 0b111
        assert path3.neighbors(1) == [0, 2]

    def test_rejects_self_loop_and_asymmetry(self):
        with pytest.raises(ParameterError):
            Graph.from_edges(2, [(1, 1)])
        with pytest.raises(ParameterError):
            Graph(2, (0b10, 0b00))

    def test_complete_and_empty(self):
        assert Graph.complete(5).edge_count() == 10
        assert Graph.empty(5).edge_count() == 0

    def test_vertex_set(self):
        s = VertexSet.of(5, [4, 1])
        assert s.to_list() == [1, 4]
        assert len(s) == 2
        assert 4 in s and 0 not in s
        assert s.bits & ~VertexSet.full(5).bits == 0
        with pytest.raises(ParameterError):
            VertexSet.of(3, [3])


class TestSampling:

    def test_same_seed_same_graph(self):
        assert gnp_sample(30, 0.3, 42) == gnp_sample(30, 0.3, 42)

    def test_different_seeds_differ(self):
        graphs = {gnp_sample(30, 0.5, s).adj for s in range(5)}
        assert len(graphs) > 1

    def test_extreme_probabilities(self):
        assert gnp_sample(8, 0.0, 1).edge_count() == 0
        assert gnp_sample(8, 1.0, 1).edge_count() == 28

    def test_n_zero_and_one(self):
        assert gnp_sample(0, 0.5, 3).n == 0
        assert gnp_sample(1, 0.5, 3).edge_count() == 0

    @pytest.mark.parametrize("n,p,seed", [(-1, 0.5, 1), (3, 1.5, 1), (3, -0.1, 1), (3, 0.5, -1), (3, 0.5, 1 << 64)])
    def test_invalid_arguments(self, n, p, seed):
        with pytest.raises(ParameterError):
            gnp_sample(n, p, seed)

    def test_edge_density_near_p(self):
        g = gnp_sample(200, 0.25, 11)
        density = g.edge_count() / (200 * 199 / 2)
        assert abs(density - 0.25) < 0.02, f"density {density} too far from 0.25"

    def test_all_graphs_counts(self):
        assert [sum(1 for _ in all_graphs(n)) for n in range(1, 5)] == [1, 2, 8, 64]
        assert len({g.adj for g in all_graphs(4)}) == 64


class TestDomination:

    def test_is_dominating(self, path3):
        assert is_dominating(path3, VertexSet.of(3, [1]))
        assert not is_dominating(path3, VertexSet.of(3, [0]))
        assert is_dominating(path3, VertexSet.full(3))

    def test_mismatched_sizes(self, path3):
        with pytest.raises(ParameterError):
            is_dominating(path3, VertexSet.of(4, [1]))

    def test_oracle_known_values(self, path3, edgeless3, k4, petersen):
        assert domination_number_oracle(path3)[0] == 1
        assert domination_number_oracle(edgeless3)[0] == 3
        assert domination_number_oracle(k4)[0] == 1
        size, witness = domination_number_oracle(petersen)
        assert size == 3
        assert is_dominating(petersen, witness)

    def test_oracle_counts_subsets(self, edgeless3):
        # 3 singletons + 3 pairs + the full set
        assert oracle_search(edgeless3)[2] == 7

    def test_oracle_guard(self, small_config):
        with pytest.raises(GuardLimitError, match="n <= 6"):
            domination_number_oracle(Graph.empty(7))

    def test_oracle_needs_vertices(self):
        with pytest.raises(ParameterError):
            domination_number_oracle(Graph.empty(0))

    def test_maximal_independent_set_dominates(self):
        """Every maximal independent set is dominating, so gamma <= |MIS|."""
        for seed in range(20):
            g = gnp_sample(9, 0.3, seed)
            mis = maximal_independent_set(g, list(range(9)))
            assert is_independent(g, mis)
            assert is_dominating(g, mis)
            assert domination_number_oracle(g)[0] <= len(mis)

    def test_mis_order_must_be_permutation(self, path3):
        with pytest.raises(ParameterError):
            maximal_independent_set(path3, [0, 0, 1])


class TestDominationProperties:

    def test_supersets_of_dominating_sets_dominate(self):
        for seed in range(30):
            g = gnp_sample(8, 0.3, seed)
            s = VertexSet(8, seed * 37 % 256)
            t = VertexSet(8, s.bits | (seed * 91 % 256))
            if is_dominating(g, s):
                assert is_dominating(g, t)

    def test_mis_examples(self, path3, edgeless3, k4):
        assert maximal_independent_set(path3, [0, 1, 2]).to_list() == [0, 2]
        assert maximal_independent_set(edgeless3, [2, 0, 1]).to_list() == [0, 1, 2]
        assert maximal_independent_set(k4, [2, 0, 1, 3]).to_list() == [2]

    def test_sampled_graphs_are_well_formed(self):
        g = gnp_sample(40, 0.5, 8)
        for v in range(40):
            assert not g.has_edge(v, v)
            for w in range(40):
                assert g.has_edge(v, w) == g.has_edge(w, v)
