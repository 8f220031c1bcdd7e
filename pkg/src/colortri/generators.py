"""Synthetic graphs for experiments and tests."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import ContractError
from .graph import Graph
from .rng import generator


def generate_disjoint_triangles(k: int) -> Graph:
    """``k`` vertex-disjoint triangles on ``3k`` vertices."""
    if k < 0:
        raise ContractError(f"k must be >= 0, got {k}")
    base = 3 * np.arange(k, dtype=np.int64)
    edges = np.empty((3 * k, 2), dtype=np.int64)
    edges[0::3] = np.column_stack([base, base + 1])
    edges[1::3] = np.column_stack([base, base + 2])
    edges[2::3] = np.column_stack([base + 1, base + 2])
    return Graph(3 * k, edges)


def _pair_from_index(k: np.ndarray, n: int) -> np.ndarray:
    # Row i of the strict upper triangle starts at off(i) = i*(2n-i-1)/2.
    b = 2 * n - 1
    i = np.floor((b - np.sqrt(b * b - 8.0 * k)) / 2).astype(np.int64)
    off = lambda r: r * (2 * n - r - 1) // 2  # noqa: E731
    i = np.where(off(i) > k, i - 1, i)
    i = np.where(off(i + 1) <= k, i + 1, i)
    j = k - off(i) + i + 1
    return np.column_stack([i, j])


def generate_gnp(n: int, p_num: int, p_den: int, seed: int) -> Graph:
    """Erdős–Rényi ``G(n, p)`` with ``p = p_num/p_den``.

    The edge count is drawn from ``Binomial(C(n,2), p)`` and that many
    distinct vertex pairs are chosen uniformly, which is the same
    distribution as flipping a coin per pair.
    """
    p = Fraction(p_num, p_den)
    if not 0 <= p <= 1:
        raise ContractError(f"edge probability {p} not in [0, 1]")
    if n < 0:
        raise ContractError(f"negative vertex count {n}")
    pairs = n * (n - 1) // 2
    if p == 0 or pairs == 0:
        return Graph(n, np.zeros((0, 2), dtype=np.int64))
    if p == 1:
        iu = np.triu_indices(n, 1)
        return Graph(n, np.column_stack(iu))
    rng = generator(seed)
    m = int(rng.binomial(pairs, float(p)))
    idx = np.sort(rng.choice(pairs, size=m, replace=False))
    return Graph(n, _pair_from_index(idx.astype(np.int64), n))


def gnp_with_edges(n: int, m: int, seed: int) -> Graph:
    """``G(n, p)`` with ``p`` set so the expected edge count is ``m``."""
    pairs = n * (n - 1) // 2
    return generate_gnp(n, m, pairs, seed)


def generate_chung_lu(n: int, m: int, gamma: float, seed: int) -> Graph:
    """Heavy-tailed random graph with exactly ``m`` edges (when ``m`` is feasible).

    Endpoints are drawn independently with probability proportional to
    ``(i + 1) ** (-1 / (gamma - 1))``; self-loops and repeats are discarded
    and drawing continues until ``m`` distinct edges exist. Edges are kept in
    first-drawn order, so the result is seed-deterministic.
    """
    if gamma <= 1:
        raise ContractError(f"gamma must exceed 1, got {gamma}")
    if m > n * (n - 1) // 2:
        raise ContractError(f"{m} edges do not fit on {n} vertices")
    rng = generator(seed)
    w = (np.arange(n) + 1.0) ** (-1.0 / (gamma - 1.0))
    w /= w.sum()
    seen: np.ndarray = np.zeros((0, 2), dtype=np.int64)
    while len(seen) < m:
        k = max(1024, 2 * (m - len(seen)))
        e = np.sort(np.column_stack([rng.choice(n, size=k, p=w), rng.choice(n, size=k, p=w)]), axis=1)
        e = np.concatenate([seen, e[e[:, 0] != e[:, 1]]])
        _, first = np.unique(e, axis=0, return_index=True)
        seen = e[np.sort(first)]
    return Graph.from_edges(n, seen[:m])


def complete_graph(n: int) -> Graph:
    return generate_gnp(n, 1, 1, 0)


def star_graph(leaves: int) -> Graph:
    e = np.column_stack([np.zeros(leaves, dtype=np.int64), np.arange(1, leaves + 1)])
    return Graph(leaves + 1, e)


def complete_bipartite(a: int, b: int) -> Graph:
    u, v = np.meshgrid(np.arange(a), np.arange(a, a + b), indexing="ij")
    return Graph.from_edges(a + b, np.column_stack([u.ravel(), v.ravel()]))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def triangle_fan(k: int) -> Graph:
    """``k`` triangles sharing only vertex 0."""
    e = []
    for i in range(k):
        a, b = 1 + 2 * i, 2 + 2 * i
        e += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * k + 1, e)
