# src/solvers/tree.py
"""Branch-and-bound tree nodes.

A node at depth d has decided x_1..x_d; the undecided coordinates are all 1.
``prefix`` stores the decided values as a bit-vector, bit i holding x_{i+1}
(the decision about vertex i), so the node's vertex set is

    {i < d : prefix bit i set} U {d, d+1, ..., n-1}

and its potential |x| - n + d equals popcount(prefix).
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Tuple

from ..core.config import load_config
from ..core.errors import GuardLimitError, ParameterError
from ..graphs import Graph, VertexSet, is_dominating_bits


@dataclass(frozen=True)
class BBNode:
    prefix: int
    depth: int
    potential: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.depth < 0 or self.prefix < 0 or self.prefix >> self.depth:
            raise ParameterError(f"prefix {self.prefix:b} does not fit depth {self.depth}")
        object.__setattr__(self, "potential", self.prefix.bit_count())

    @classmethod
    def root(cls) -> "BBNode":
        return cls(0, 0)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BBNode":
        """Build a node from the decided values x_1..x_d, e.g. ``(0, 1, 0)``."""
        prefix = 0
        depth = 0
        for depth, x in enumerate(bits, 1):
            if x not in (0, 1):
                raise ParameterError(f"decided values must be 0 or 1, got {x}")
            prefix |= x << (depth - 1)
        return cls(prefix, depth)

    def bits(self) -> Tuple[int, ...]:
        return tuple(self.prefix >> i & 1 for i in range(self.depth))

    @property
    def parent(self) -> "BBNode | None":
        if self.depth == 0:
            return None
        return BBNode(self.prefix & ~(1 << (self.depth - 1)), self.depth - 1)


def potential(node: BBNode, n: int) -> int:
    """Score u(x, d) = |x| - n + d, counting the n - d undecided ones in |x|."""
    if node.depth > n:
        raise ParameterError(f"depth {node.depth} exceeds n={n}")
    ones = node.prefix.bit_count() + (n - node.depth)
    return ones - n + node.depth


def node_bits(node: BBNode, n: int) -> int:
    undecided = ((1 << n) - 1) & ~((1 << node.depth) - 1)
    return node.prefix | undecided


def node_set(node: BBNode, n: int) -> VertexSet:
    """Vertices selected by the prefix plus every undecided vertex."""
    if node.depth > n:
        raise ParameterError(f"depth {node.depth} exceeds n={n}")
    return VertexSet(n, node_bits(node, n))


def children(node: BBNode, n: int) -> Tuple[BBNode, BBNode]:
    """(left, right): x_{d+1} = 1 keeps the parent's set, x_{d+1} = 0 drops vertex d."""
    if node.depth >= n:
        raise ParameterError(f"node at depth {node.depth} = n has no children")
    left = BBNode(node.prefix | (1 << node.depth), node.depth + 1)
    right = BBNode(node.prefix, node.depth + 1)
    return left, right


@dataclass
class NodeCategories:
    """Partition of the full tree at one step of the search."""
    visited: int = 0
    infeasible: int = 0
    explorable: int = 0
    hidden: int = 0

    @property
    def feasible(self) -> int:
        return self.visited + self.explorable + self.hidden

    @property
    def total(self) -> int:
        return self.feasible + self.infeasible

    def as_dict(self) -> Dict[str, int]:
        return {
            "visited": self.visited,
            "infeasible": self.infeasible,
            "explorable": self.explorable,
            "hidden": self.hidden,
        }


def classify_nodes(g: Graph, visited: Iterable[BBNode]) -> NodeCategories:
    """Count visited / infeasible / explorable / hidden nodes over the whole tree.

    Visited nodes are feasible by construction; explorable nodes are feasible
    children of visited nodes; hidden nodes are the remaining feasible ones.
    """
    limit = load_config().value("guards", "classify_max_n", 15)
    if g.n > limit:
        raise GuardLimitError("classify_nodes", g.n, limit)

    n = g.n
    seen = set(visited)
    closed = g.closed_neighborhoods()
    counts = NodeCategories()

    for depth in range(n + 1):
        for prefix in range(1 << depth):
            node = BBNode(prefix, depth)
            feasible = is_dominating_bits(closed, node_bits(node, n))
            if node in seen:
                if not feasible:
                    raise ParameterError(f"visited node {node.bits()} is infeasible")
                counts.visited += 1
            elif not feasible:
                counts.infeasible += 1
            elif node.parent is not None and node.parent in seen:
                counts.explorable += 1
            else:
                counts.hidden += 1
    return counts
