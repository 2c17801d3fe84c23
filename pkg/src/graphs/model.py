# src/graphs/model.py
"""Graph and vertex-set values.

Both are immutable dataclasses over Python integers used as bit-vectors:
bit ``w`` of ``adj[v]`` is set iff the edge {v, w} is present, and bit ``v`` of
``VertexSet.bits`` is set iff vertex ``v`` belongs to the set. Vertices are 0-based.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

from ..core.errors import ParameterError


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices {0, ..., n-1}."""
    n: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise ParameterError(f"vertex set has bits outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ParameterError(f"vertex {v} out of range for n={n}")
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def to_list(self) -> List[int]:
        """Sorted vertex list."""
        return list(self)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with per-vertex adjacency bit-vectors."""
    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError(f"n must be >= 0, got {self.n}")
        if len(self.adj) != self.n:
            raise ParameterError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        for v, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise ParameterError(f"adjacency of {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ParameterError(f"self-loop at vertex {v}")
            w_bits = row
            while w_bits:
                low = w_bits & -w_bits
                w = low.bit_length() - 1
                if not self.adj[w] >> v & 1:
                    raise ParameterError(f"adjacency not symmetric for edge ({v}, {w})")
                w_bits ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed(self, v: int) -> int:
        """Closed neighborhood N[v] as a bit-vector."""
        return self.adj[v] | (1 << v)

    def closed_neighborhoods(self) -> Tuple[int, ...]:
        return tuple(self.closed(v) for v in range(self.n))

    def neighbors(self, v: int) -> List[int]:
        return VertexSet(self.n, self.adj[v]).to_list()

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v, sorted lexicographically."""
        return [(u, w) for u in range(self.n) for w in self.neighbors(u) if u < w]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

