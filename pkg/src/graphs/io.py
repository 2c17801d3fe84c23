# src/graphs/io.py
"""Text graph format.

    n m
    u v        (m lines, 0 <= u < v < n, no duplicates)

Blank lines and lines starting with '#' are ignored. Writers emit edges
sorted lexicographically.
"""

from pathlib import Path
from typing import List, Tuple

from ..core.errors import FormatError
from ..core.logger import get_logger
from .model import Graph

log = get_logger(__name__)


def format_graph(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, path: str | Path) -> None:
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(format_graph(g))
    log.info(f"Wrote graph n={g.n} m={g.edge_count()} to {path}")


def _ints(parts: List[str], lineno: int) -> Tuple[int, int]:
    if len(parts) != 2:
        raise FormatError(f"expected two integers, got {len(parts)} fields", lineno)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(f"expected two integers, got {' '.join(parts)!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    header: Tuple[int, int] | None = None
    header_line = 0
    edges: List[Tuple[int, int]] = []
    seen = set()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            header = _ints(parts, lineno)
            header_line = lineno
            if header[0] < 0 or header[1] < 0:
                raise FormatError("n and m must be non-negative", lineno)
            continue
        u, v = _ints(parts, lineno)
        if not 0 <= u < v < header[0]:
            raise FormatError(f"edge ({u}, {v}) violates 0 <= u < v < n={header[0]}", lineno)
        if (u, v) in seen:
            raise FormatError(f"duplicate edge ({u}, {v})", lineno)
        seen.add((u, v))
        edges.append((u, v))

    if header is None:
        raise FormatError("missing 'n m' header line")
    if len(edges) != header[1]:
        raise FormatError(f"header declares m={header[1]} edges, found {len(edges)}", header_line)
    return Graph.from_edges(header[0], edges)


def read_graph(path: str | Path) -> Graph:
    with open(path, "r", encoding="utf-8") as f:
        g = parse_graph(f.read())
    log.debug(f"Read graph n={g.n} m={g.edge_count()} from {path}")
    return g
