"""Constructors for the named graphs used in tests, demos and benchmarks."""

from __future__ import annotations

import random

from .graphs import Graph


def path_graph(n: int) -> Graph:
    """Path 1-2-...-n."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    """Cycle 1-2-...-n-1; needs n >= 3."""
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph.from_edges(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def star_graph(leaves: int) -> Graph:
    """Star with center 1 and the given number of leaves."""
    return Graph.from_edges(leaves + 1, [(1, k) for k in range(2, leaves + 2)])


def bowtie_graph() -> Graph:
    """Two triangles sharing the center vertex 1."""
    return Graph.from_edges(5, [(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)])


def petersen_graph() -> Graph:
    outer = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6, 8), (8, 10), (7, 10), (7, 9), (6, 9)]
    return Graph.from_edges(10, outer + spokes + inner)


def gnp_random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) draw from the supplied RNG (caller owns the seed)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0,1], got {p}")
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)
