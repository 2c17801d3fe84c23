# src/solvers/frontier.py
"""Priority queue of explorable nodes.

Entries are ordered by potential first. Ties are broken by the tie rule:

* ``det``: deeper nodes first, then the right child before the left child at
  equal depth, then insertion order.
* ``rand``: a uniform draw from a seeded numpy generator, then insertion order.
"""

import heapq
import itertools
from dataclasses import dataclass
from typing import Any, List, Tuple

import numpy as np

from ..core.errors import ParameterError
from .tree import BBNode

LEFT, RIGHT = 1, 0
_DRAW_BLOCK = 4096


@dataclass(frozen=True)
class TieRule:
    mode: str = "det"
    seed: int | None = None

    def __post_init__(self):
        if self.mode not in ("det", "rand"):
            raise ParameterError(f"tie rule must be 'det' or 'rand', got {self.mode!r}")
        if self.mode == "rand" and self.seed is None:
            raise ParameterError("the rand tie rule needs a seed")

    @classmethod
    def parse(cls, mode: str, seed: int | None = None) -> "TieRule":
        # det ignores the seed; it is not part of the rule
        return cls(mode, seed if mode == "rand" else None)


class Frontier:
    """Min-heap of (potential, tie key..., seq, node, payload)."""

    def __init__(self, rule: TieRule):
        self.rule = rule
        self._heap: List[Tuple[Any, ...]] = []
        self._seq = itertools.count()
        self._rng = np.random.Generator(np.random.PCG64(rule.seed)) if rule.mode == "rand" else None
        self._draws: List[float] = []

    def _draw(self) -> float:
        if not self._draws:
            # reversed so pop() yields the block in generation order
            self._draws = self._rng.random(_DRAW_BLOCK).tolist()[::-1]
        return self._draws.pop()

    def push(self, node: BBNode, side: int, payload: Any = None) -> None:
        if self._rng is None:
            key = (node.potential, -node.depth, side, next(self._seq))
        else:
            key = (node.potential, self._draw(), next(self._seq))
        heapq.heappush(self._heap, (key, node, payload))

    def pop(self) -> Tuple[BBNode, Any]:
        """Remove and return a minimum-potential node and its payload."""
        _, node, payload = heapq.heappop(self._heap)
        return node, payload

    def __len__(self) -> int:
        return len(self._heap)

    def __bool__(self) -> bool:
        return bool(self._heap)
