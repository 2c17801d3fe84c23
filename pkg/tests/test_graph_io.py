# tests/test_graph_io.py
"""Reading and writing the ``n m`` / ``u v`` graph format."""

import pytest

from src.core.errors import FormatError
from src.graphs import Graph, format_graph, parse_graph, read_graph, write_graph


def test_format_sorts_edges():
    g = Graph.from_edges(4, [(2, 3), (0, 3), (0, 1)])
    assert format_graph(g) == "4 3\n0 1\n0 3\n2 3\n"


def test_write_then_read(tmp_path, petersen):
    path = tmp_path / "petersen.txt"
    write_graph(petersen, path)
    assert read_graph(path) == petersen
    assert path.read_bytes().count(b"\r") == 0


def test_comments_and_blank_lines():
    g = parse_graph("# a path\n\n3 2\n0 1\n\n# middle\n1 2\n")
    assert g.edges() == [(0, 1), (1, 2)]


def test_edgeless_graph():
    assert parse_graph("5 0\n") == Graph.empty(5)


@pytest.mark.parametrize("text,line", [
    ("3 2\n0 1\n", 1),              # too few edges, reported at the header
    ("3 1\n1 0\n", 2),              # u > v
    ("3 1\n0 3\n", 2),              # out of range
    ("3 2\n0 1\n0 1\n", 3),         # duplicate
    ("3 1\n0 1 2\n", 2),            # three fields
    ("3 1\n0 x\n", 2),              # not an integer
    ("x 1\n", 1),
])
def test_malformed_input_reports_line(text, line):
    with pytest.raises(FormatError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}: ")


def test_missing_header():
    with pytest.raises(FormatError, match="header"):
        parse_graph("# nothing here\n")
