# tests/test_tree.py
"""Node encoding, potentials and the four-way node classification."""

import numpy as np
import pytest

from src.core.errors import GuardLimitError, ParameterError
from src.graphs import Graph, gnp_sample, is_dominating_bits
from src.solvers.branch_bound import replay_visited
from src.solvers.tree import BBNode, children, classify_nodes, node_bits, node_set, potential


class TestNodes:

    def test_root(self):
        root = BBNode.root()
        assert root.depth == 0 and root.prefix == 0
        assert root.parent is None
        assert potential(root, 5) == 0
        assert node_set(root, 5).to_list() == [0, 1, 2, 3, 4]

    def test_from_bits_roundtrip(self):
        node = BBNode.from_bits((0, 1, 0))
        assert node.bits() == (0, 1, 0)
        assert node.prefix == 0b010 and node.depth == 3

    def test_potential_counts_decided_ones(self):
        node = BBNode.from_bits((1, 0, 1))
        assert potential(node, 6) == 2
        assert node.potential == 2
        # {0, 2} decided in, {3, 4, 5} undecided
        assert node_set(node, 6).to_list() == [0, 2, 3, 4, 5]

    def test_children(self):
        node = BBNode.from_bits((1, 0))
        left, right = children(node, 4)
        assert left.bits() == (1, 0, 1)
        assert right.bits() == (1, 0, 0)
        assert left.parent == node and right.parent == node
        # left keeps the set, right drops vertex 2
        assert node_set(left, 4) == node_set(node, 4)
        assert node_set(right, 4).to_list() == [0, 3]

    def test_leaf_has_no_children(self):
        with pytest.raises(ParameterError):
            children(BBNode.from_bits((1, 1)), 2)

    def test_invalid_nodes(self):
        with pytest.raises(ParameterError):
            BBNode(0b100, 2)
        with pytest.raises(ParameterError):
            BBNode.from_bits((2,))
        with pytest.raises(ParameterError):
            potential(BBNode.from_bits((1, 1, 1)), 2)

    def test_potential_at_leaf_is_set_size(self):
        leaf = BBNode.from_bits((1, 0, 1, 1))
        assert potential(leaf, 4) == len(node_set(leaf, 4)) == 3


class TestClassification:
    """Path 0 - 1 - 2 has 15 tree nodes, 11 of them feasible."""

    def test_before_first_expansion(self, path3):
        counts = classify_nodes(path3, replay_visited(path3, 0))
        assert counts.as_dict() == {"visited": 1, "infeasible": 4, "explorable": 2, "hidden": 8}
        assert counts.total == 15

    def test_after_full_search(self, path3):
        counts = classify_nodes(path3, replay_visited(path3, 3))
        assert counts.as_dict() == {"visited": 4, "infeasible": 4, "explorable": 2, "hidden": 5}
        assert counts.feasible == 11

    def test_partition_is_stable_across_steps(self):
        small = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
        totals = {classify_nodes(small, replay_visited(small, s)).feasible for s in range(6)}
        assert len(totals) == 1, "feasible node count must not depend on the step"

    def test_infeasible_visited_node_is_rejected(self, path3):
        with pytest.raises(ParameterError):
            classify_nodes(path3, [BBNode.from_bits((0, 0))])

    def test_guard(self, small_config):
        with pytest.raises(GuardLimitError):
            classify_nodes(Graph.empty(5), [])


def test_random_parent_child_pairs():
    """Verifies, over 10^5 random (parent, child) pairs on graphs with 8 to 60 vertices:
    - a child never has a lower potential than its parent
    - the potential equals the popcount of the prefix
    - the left child keeps the parent's set, hence its feasibility
    - a feasible right child implies a feasible parent
    """
    rng = np.random.Generator(np.random.PCG64(20240607))
    graphs = {n: gnp_sample(n, 0.3, n) for n in (8, 16, 24, 40, 60)}
    closed = {n: g.closed_neighborhoods() for n, g in graphs.items()}
    sizes = list(graphs)
    for _ in range(100_000):
        n = sizes[int(rng.integers(len(sizes)))]
        depth = int(rng.integers(n))
        prefix = int(rng.integers(1 << 62)) & ((1 << depth) - 1)
        parent = BBNode(prefix, depth)
        left, right = children(parent, n)
        assert potential(parent, n) == prefix.bit_count()
        assert potential(left, n) == potential(parent, n) + 1
        assert potential(right, n) == potential(parent, n)
        assert node_set(left, n) == node_set(parent, n)
        parent_ok = is_dominating_bits(closed[n], node_bits(parent, n))
        assert is_dominating_bits(closed[n], node_bits(left, n)) == parent_ok
        if is_dominating_bits(closed[n], node_bits(right, n)):
            assert parent_ok


def test_right_child_of_first_right_child():
    _, right = children(BBNode.from_bits((0,)), 3)
    assert right.bits() == (0, 0)
    assert node_set(right, 3).to_list() == [2]
