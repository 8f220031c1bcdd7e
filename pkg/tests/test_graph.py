import io

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from colortri.errors import ContractError, GraphParseError
from colortri.graph import (
    Graph,
    ParseOptions,
    graph_report,
    neighbors,
    parse_edge_list,
    parse_edge_text,
    read_edge_list,
    to_edge_list_text,
)

from .conftest import graphs


def test_triangle_text():
    g = parse_edge_text("0 1\n1 2\n2 0\n")
    assert (g.n, g.m) == (3, 3)


def test_self_loop_and_reverse_duplicate_dropped():
    g = parse_edge_text("0 0\n0 1\n1 0\n")
    assert (g.n, g.m) == (2, 1)
    assert g.edges.tolist() == [[0, 1]]


def test_comments_blank_lines_and_tabs():
    g = parse_edge_text("# Directed graph\n# FromNodeId\tToNodeId\n\n10\t20\n20\t30\n")
    assert (g.n, g.m) == (3, 2)
    assert g.labels.tolist() == [10, 20, 30]


def test_custom_comment_prefix():
    g = parse_edge_list(io.StringIO("% header\n1 2\n"), ParseOptions(comment_prefix="%"))
    assert g.m == 1


def test_non_contiguous_ids_remapped():
    g = parse_edge_text("5 100\n100 7\n")
    assert g.n == 3
    assert g.labels.tolist() == [5, 7, 100]
    assert g.edges.tolist() == [[0, 2], [1, 2]]


def test_one_indexed_input():
    g = parse_edge_text("1 2\n2 3\n3 1\n")
    assert g.n == 3 and g.labels.tolist() == [1, 2, 3]


def test_vertex_seen_only_in_self_loop_is_kept():
    g = parse_edge_text("0 1\n7 7\n")
    assert g.n == 3 and g.m == 1
    assert g.degrees.tolist() == [1, 1, 0]


def test_empty_input():
    g = parse_edge_text("")
    assert (g.n, g.m) == (0, 0)
    assert g.max_degree == 0


@pytest.mark.parametrize("text,lineno", [("0 1\n1 x\n", 2), ("0 1 2\n", 1), ("# c\n\n5\n", 3)])
def test_malformed_lines(text, lineno):
    with pytest.raises(GraphParseError) as info:
        parse_edge_text(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_directed_parsing_refused():
    with pytest.raises(ContractError):
        parse_edge_text("0 1\n", ParseOptions(treat_as_undirected=False))


def test_neighbors_examples():
    tri = parse_edge_text("0 1\n1 2\n2 0\n")
    assert neighbors(tri, 0).tolist() == [1, 2]
    iso = Graph.from_edges(3, [(0, 1)])
    assert neighbors(iso, 2).tolist() == []
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert path.neighbors(1).tolist() == [0, 2]


@pytest.mark.parametrize("v", [-1, 3])
def test_neighbors_out_of_range(v):
    with pytest.raises(ContractError):
        neighbors(Graph.from_edges(3, [(0, 1)]), v)


def test_arrays_are_read_only():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    for a in (g.edges, g.indices, g.indptr, g.degrees, g.labels):
        with pytest.raises(ValueError):
            a[0] = 5


def test_gzip_file(tmp_path):
    import gzip

    p = tmp_path / "g.txt.gz"
    with gzip.open(p, "wt") as fh:
        fh.write("0 1\n1 2\n")
    assert read_edge_list(p).m == 2


def test_report():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert graph_report(g) == {"n": 4, "m": 3, "max_degree": 3}


@given(graphs(max_n=15))
def test_invariants(g):
    e = g.edges
    assert np.all(e[:, 0] < e[:, 1])
    assert len(np.unique(e, axis=0)) == len(e)
    assert int(g.degrees.sum()) == 2 * g.m
    adj = {v: set(g.neighbors(v).tolist()) for v in range(g.n)}
    for v in range(g.n):
        nb = g.neighbors(v)
        assert np.all(np.diff(nb) > 0)
        for u in nb:
            assert v in adj[int(u)]


@given(graphs(max_n=15), st.randoms(use_true_random=False))
def test_shuffled_and_flipped_input_parses_identically(g, rnd):
    lines = [(int(u), int(v)) for u, v in g.edges]
    lines = [(v, u) if rnd.random() < 0.5 else (u, v) for u, v in lines]
    rnd.shuffle(lines)
    text = "".join(f"{u} {v}\n" for u, v in lines)
    assert parse_edge_text(text).edges.tolist() == parse_edge_text(to_edge_list_text(g)).edges.tolist()


@given(graphs(max_n=15))
def test_round_trip(g):
    # The edge-list format cannot express isolated vertices, so only graphs
    # without them round-trip exactly.
    keep = np.flatnonzero(g.degrees > 0)
    remap = -np.ones(g.n, dtype=np.int64)
    remap[keep] = np.arange(len(keep))
    h = Graph(len(keep), remap[g.edges], keep)
    assert parse_edge_text(to_edge_list_text(h)) == h
