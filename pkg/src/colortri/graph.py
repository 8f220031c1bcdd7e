"""Immutable undirected simple graphs and SNAP-style edge-list I/O."""

from __future__ import annotations

import gzip
import io
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, TextIO, Union

import numpy as np

from .errors import ContractError, GraphParseError

PathOrStream = Union[str, os.PathLike, TextIO]


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Edges are stored once, as rows ``(u, v)`` with ``u < v``, sorted
    lexicographically; the row index is the edge id used by per-edge
    statistics. The adjacency (CSR ``indptr``/``indices``) is built lazily on
    first access and every array is read-only.

    ``labels[i]`` is the raw id vertex ``i`` had in the input file.
    """

    def __init__(self, n: int, edges: np.ndarray, labels: np.ndarray | None = None):
        # Trusted constructor: ``edges`` must already be canonical.
        # Use ``Graph.from_edges`` for arbitrary input.
        self.n = int(n)
        self.edges = _frozen(np.asarray(edges, dtype=np.int64).reshape(-1, 2))
        if labels is None:
            labels = np.arange(self.n, dtype=np.int64)
        self.labels = _frozen(np.asarray(labels, dtype=np.int64))

    @classmethod
    def from_edges(cls, n: int, edges, labels=None) -> "Graph":
        """Normalize an arbitrary edge collection on vertices ``0..n-1``.

        Self-loops are dropped, direction is ignored and duplicates collapse.
        """
        e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if e.size and (e.min() < 0 or e.max() >= n):
            raise ContractError(f"edge endpoint outside 0..{n - 1}")
        e = e[e[:, 0] != e[:, 1]]
        e = np.sort(e, axis=1)
        if len(e):
            e = np.unique(e, axis=0)
        return cls(n, e, labels)

    @classmethod
    def from_labelled_edges(cls, edges, extra_labels=()) -> "Graph":
        """Build a graph from edges over arbitrary integer ids, remapped densely.

        Ids are ordered by value, so ``labels`` is sorted.
        """
        e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        ids = np.concatenate([e.ravel(), np.asarray(list(extra_labels), dtype=np.int64)])
        labels, inverse = np.unique(ids, return_inverse=True)
        dense = inverse[: e.size].reshape(-1, 2)
        return cls.from_edges(len(labels), dense, labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.bincount(self.edges.ravel(), minlength=self.n).astype(np.int64)
        return _frozen(deg)

    @cached_property
    def indptr(self) -> np.ndarray:
        ptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(self.degrees, out=ptr[1:])
        return _frozen(ptr)

    @cached_property
    def indices(self) -> np.ndarray:
        src = np.concatenate([self.edges[:, 0], self.edges[:, 1]])
        dst = np.concatenate([self.edges[:, 1], self.edges[:, 0]])
        order = np.lexsort((dst, src))
        return _frozen(dst[order])

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    def neighbors(self, v: int) -> np.ndarray:
        return neighbors(self, v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.edges, other.edges)
            and np.array_equal(self.labels, other.labels)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def neighbors(graph: Graph, v: int) -> np.ndarray:
    """Sorted neighbor ids of ``v`` (a read-only view)."""
    if not 0 <= v < graph.n:
        raise ContractError(f"vertex {v} out of range for n={graph.n}")
    return graph.indices[graph.indptr[v] : graph.indptr[v + 1]]


@dataclass(frozen=True)
class ParseOptions:
    comment_prefix: str = "#"
    treat_as_undirected: bool = True


def _open_text(source: PathOrStream) -> tuple[TextIO, bool]:
    if hasattr(source, "read"):
        return source, False  # type: ignore[return-value]
    path = os.fspath(source)
    if path.endswith(".gz"):
        return io.TextIOWrapper(gzip.open(path, "rb")), True
    return open(path, "r"), True


def parse_edge_list(source: PathOrStream, options: ParseOptions = ParseOptions()) -> Graph:
    """Parse whitespace-separated integer pairs into a :class:`Graph`.

    ``source`` is a path (optionally ``.gz``) or an open text stream. Lines
    starting with the comment prefix and blank lines are skipped. Raw ids are
    remapped densely to ``0..n-1`` in increasing order; ids that only occur in
    self-loops still become (isolated) vertices.

    Raises
    ------
    GraphParseError
        On a non-integer token or a line without exactly two fields.
    """
    if not options.treat_as_undirected:
        raise ContractError("only undirected parsing is supported")
    stream, owned = _open_text(source)
    prefix = options.comment_prefix
    us: list[int] = []
    vs: list[int] = []
    try:
        for lineno, line in enumerate(stream, start=1):
            s = line.strip()
            if not s or (prefix and s.startswith(prefix)):
                continue
            parts = s.split()
            if len(parts) != 2:
                raise GraphParseError(lineno, f"expected 2 fields, got {len(parts)}")
            try:
                us.append(int(parts[0]))
                vs.append(int(parts[1]))
            except ValueError:
                raise GraphParseError(lineno, f"non-integer token in {s!r}") from None
    finally:
        if owned:
            stream.close()
    edges = np.column_stack([np.array(us, dtype=np.int64), np.array(vs, dtype=np.int64)])
    return Graph.from_labelled_edges(edges)


def read_edge_list(path, **kwargs) -> Graph:
    return parse_edge_list(path, ParseOptions(**kwargs))


def parse_edge_text(text: str, options: ParseOptions = ParseOptions()) -> Graph:
    return parse_edge_list(io.StringIO(text), options)


def to_edge_list_text(graph: Graph) -> str:
    """Serialize edges using the original labels, one ``u v`` pair per line.

    Isolated vertices have no representation in the format and are lost.
    """
    lab = graph.labels
    out = io.StringIO()
    out.write(f"# Nodes: {graph.n} Edges: {graph.m}\n")
    for u, v in graph.edges:
        out.write(f"{lab[u]} {lab[v]}\n")
    return out.getvalue()


def write_edge_list(graph: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(to_edge_list_text(graph))


def graph_report(graph: Graph) -> dict[str, int]:
    return {"n": graph.n, "m": graph.m, "max_degree": graph.max_degree}


def format_kv(items: Iterable[tuple[str, object]] | dict) -> str:
    if isinstance(items, dict):
        items = items.items()
    return "".join(f"{k}={v}\n" for k, v in items)
