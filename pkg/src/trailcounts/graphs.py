"""Simple undirected graphs with canonical vertex and edge-slot indexing.

Vertices carry 1-based external labels. Edge slots enumerate ALL unordered
pairs of distinct vertices in lexicographic order (1,2), (1,3), ..., (1,n),
(2,3), ..., so a graph on n vertices maps to an occupation string of length
C(n,2). Under this ordering the 4-cycle with edges {1,2},{1,3},{2,4},{3,4}
reads "110011".

Counts are plain Python integers throughout (arbitrary precision); matrices
use numpy arrays with dtype=object so that matrix powers stay exact.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .errors import EdgeListError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 1..n.

    ``edges`` holds normalized pairs (u, v) with u < v. No self-loops, no
    duplicates, every endpoint in 1..n.
    """

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop on vertex {u} is not allowed")
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph from any iterable of (u, v) pairs, normalizing order
        and collapsing duplicates."""
        normalized = frozenset((min(u, v), max(u, v)) for u, v in edges)
        return cls(n, normalized)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, u: int) -> tuple[int, ...]:
        """Sorted neighbors of u (sorted order drives lexicographic walk
        enumeration everywhere)."""
        self.require_vertex(u)
        return _adjacency(self)[u]

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def require_vertex(self, u: int) -> None:
        if not (1 <= u <= self.n):
            raise ValueError(f"vertex {u} out of range 1..{self.n}")

    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def __repr__(self) -> str:  # compact, deterministic
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


@functools.cache
def _adjacency(g: Graph) -> dict[int, tuple[int, ...]]:
    adj: dict[int, list[int]] = {u: [] for u in range(1, g.n + 1)}
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    return {u: tuple(sorted(vs)) for u, vs in adj.items()}


@functools.cache
def pair_slots(n: int) -> tuple[Edge, ...]:
    """All C(n,2) unordered pairs in lexicographic order."""
    return tuple((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1))


@functools.cache
def pair_slot_index(n: int) -> dict[Edge, int]:
    """Bijection {u,v} (u<v) -> slot position 0..C(n,2)-1."""
    return {pair: i for i, pair in enumerate(pair_slots(n))}


def slot_of_pair(n: int, u: int, v: int) -> int:
    if u == v:
        raise ValueError(f"pair slots are indexed by distinct vertices, got ({u},{v})")
    return pair_slot_index(n)[(min(u, v), max(u, v))]


def parse_edge_list(text: str) -> Graph:
    """Parse a line-oriented edge list.

    Each non-comment line reads "u v" with 1-based integer labels; '#' starts
    a comment (whole line or trailing); blank lines are skipped. An optional
    header line "n <count>" fixes the vertex count, otherwise n is the largest
    label seen. Duplicate edge lines (in either order) collapse to one edge.

    Raises EdgeListError (with the line number) on self-loops, non-integer
    tokens, labels below 1 or above a declared n, and on empty input without
    a header.
    """
    declared_n: int | None = None
    edges: set[Edge] = set()
    max_seen = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if declared_n is not None:
                raise EdgeListError("duplicate 'n' header", line_no)
            if len(tokens) != 2:
                raise EdgeListError("header must read 'n <count>'", line_no)
            declared_n = _int_token(tokens[1], line_no)
            if declared_n < 1:
                raise EdgeListError(f"vertex count must be positive, got {declared_n}", line_no)
            if max_seen > declared_n:
                raise EdgeListError(
                    f"vertex label {max_seen} exceeds declared n={declared_n}", line_no
                )
            continue
        if len(tokens) != 2:
            raise EdgeListError(f"expected 'u v', got {line!r}", line_no)
        u = _int_token(tokens[0], line_no)
        v = _int_token(tokens[1], line_no)
        if u < 1 or v < 1:
            raise EdgeListError(f"vertex labels start at 1, got ({u},{v})", line_no)
        if u == v:
            raise EdgeListError(f"self-loop {u} {v} not allowed in a simple graph", line_no)
        if declared_n is not None and max(u, v) > declared_n:
            raise EdgeListError(
                f"vertex label {max(u, v)} exceeds declared n={declared_n}", line_no
            )
        edges.add((min(u, v), max(u, v)))
        max_seen = max(max_seen, u, v)

    n = declared_n if declared_n is not None else max_seen
    if n == 0:
        raise EdgeListError("empty edge list and no 'n' header; vertex count unknown")
    return Graph(n, frozenset(edges))


def _int_token(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise EdgeListError(f"expected an integer, got {token!r}", line_no) from None


def adjacency_matrix(g: Graph) -> np.ndarray:
    """0/1 symmetric matrix with zero diagonal, dtype=object for exactness."""
    a = np.zeros((g.n, g.n), dtype=object)
    for u, v in g.edges:
        a[u - 1, v - 1] = 1
        a[v - 1, u - 1] = 1
    return a


def identity_matrix(n: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=object)
    for i in range(n):
        m[i, i] = 1
    return m


def matrix_power(matrix: np.ndarray, exponent: int) -> np.ndarray:
    """Exact integer matrix power; exponent 0 gives the identity."""
    if exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {exponent}")
    n = matrix.shape[0]
    result = identity_matrix(n)
    for _ in range(exponent):
        result = np.dot(result, matrix)
    return result


def walk_count(g: Graph, length: int, u: int, v: int) -> int:
    """Number of walks of the given length from u to v, as the (u, v) entry
    of the adjacency-matrix power. Length 0 uses the identity convention:
    one empty walk at each vertex.
    """
    g.require_vertex(u)
    g.require_vertex(v)
    if length < 0:
        raise ValueError(f"walk length must be >= 0, got {length}")
    power = matrix_power(adjacency_matrix(g), length)
    return int(power[u - 1, v - 1])


def occupation_string(g: Graph) -> str:
    """The graph's edge-occupation string over all pair slots, e.g. "110011"
    for the 4-cycle on edges {1,2},{1,3},{2,4},{3,4}."""
    slots = pair_slots(g.n)
    return "".join("1" if pair in g.edges else "0" for pair in slots)


def graph_signature(g: Graph) -> str:
    """Deterministic short identifier: n plus the hex of the edge-slot mask."""
    mask = 0
    index = pair_slot_index(g.n)
    for e in g.edges:
        mask |= 1 << index[e]
    return f"n{g.n}-{mask:x}"
