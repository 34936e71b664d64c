"""Ground-truth counting by exhaustive backtracking.

Everything here enumerates walk sequences directly and filters them by a
predicate; the other engines are validated against this module. Counting is
depth-first with pruning by the class predicate and a configurable visited-
node budget, so it is strictly a desk-scale oracle.

Walks are vertex sequences v0 v1 ... vl with every consecutive pair an edge;
the length l is the number of edges traversed. Direction matters: a trail and
its reversal are two distinct sequences. For closed sequences (u == v) the
path class means a cycle, which requires l >= 3 in a simple graph.
"""

from __future__ import annotations

import enum
import functools
from collections import Counter

from . import limits
from .errors import BudgetExceededError
from .graphs import Graph, pair_slot_index

WalkSeq = tuple[int, ...]


class WalkClass(enum.Enum):
    """Predicate filtering a walk sequence.

    WALK              no constraint.
    TRAIL             no repeated edges.
    PATH              no repeated vertices (closed form: a cycle, l >= 3).
    DISTINCT_NON_INITIAL  v1..vl pairwise distinct, v0 unconstrained; this is
                      the class the literal destination-vertex observable
                      counts.
    START_ONCE_TRAIL_EDGE_SET  one trail per distinct traversed edge set (the
                      lexicographically first); its count equals the number
                      of distinct edge sets, which is what the annihilation-
                      matrix check needs.
    """

    WALK = "walk"
    TRAIL = "trail"
    PATH = "path"
    DISTINCT_NON_INITIAL = "distinct-non-initial"
    START_ONCE_TRAIL_EDGE_SET = "start-once-trail-edge-set"


def enumerate_walks(
    g: Graph,
    length: int,
    u: int,
    v: int,
    walk_class: WalkClass = WalkClass.WALK,
    node_budget: int | None = None,
) -> list[WalkSeq]:
    """All walks of exactly the given length from u to v satisfying the class
    predicate, each once, in lexicographic order."""
    g.require_vertex(u)
    g.require_vertex(v)
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    if length == 0:
        return [(u,)] if u == v else []

    budget = node_budget if node_budget is not None else limits.node_budget()
    remaining = [budget]
    slots = pair_slot_index(g.n)
    out: list[WalkSeq] = []
    seen_edge_sets: set[int] = set()
    seq = [u]

    def step(current: int, depth: int, edge_mask: int, vertex_mask: int, dest_mask: int):
        remaining[0] -= 1
        if remaining[0] < 0:
            raise BudgetExceededError("walk enumeration", budget)
        last = depth + 1 == length
        for w in g.neighbors(current):
            if last and w != v:
                continue
            lo, hi = (current, w) if current < w else (w, current)
            ebit = 1 << slots[(lo, hi)]
            wbit = 1 << (w - 1)
            if walk_class in (WalkClass.TRAIL, WalkClass.START_ONCE_TRAIL_EDGE_SET):
                if edge_mask & ebit:
                    continue
            elif walk_class is WalkClass.DISTINCT_NON_INITIAL:
                if dest_mask & wbit:
                    continue
            elif walk_class is WalkClass.PATH:
                if u == v:
                    # closed path = cycle: v0..v_{l-1} distinct, closure back to u
                    if last:
                        if w != u or length < 3:
                            continue
                    elif vertex_mask & wbit:
                        continue
                elif vertex_mask & wbit:
                    continue
            seq.append(w)
            if last:
                if walk_class is WalkClass.START_ONCE_TRAIL_EDGE_SET:
                    s = edge_mask | ebit
                    if s not in seen_edge_sets:
                        seen_edge_sets.add(s)
                        out.append(tuple(seq))
                else:
                    out.append(tuple(seq))
            else:
                step(w, depth + 1, edge_mask | ebit, vertex_mask | wbit, dest_mask | wbit)
            seq.pop()

    step(u, 0, 0, 1 << (u - 1), 0)
    return out


def count_walks(
    g: Graph,
    length: int,
    u: int,
    v: int,
    walk_class: WalkClass = WalkClass.WALK,
    node_budget: int | None = None,
) -> int:
    """Number of walks enumerate_walks would return, without materializing
    the sequences. Tallies one depth-first search per (graph, start) and
    memoizes the table, so sweeps over many (length, v) queries are cheap."""
    g.require_vertex(u)
    g.require_vertex(v)
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    if length == 0:
        return 1 if u == v else 0
    budget = node_budget if node_budget is not None else limits.node_budget()
    if walk_class is WalkClass.WALK:
        return _walk_table(g, u, length, budget).get((length, v), 0)
    if walk_class is WalkClass.TRAIL:
        counts, _ = _trail_tables(g, u, length, budget)
        return counts.get((length, v), 0)
    if walk_class is WalkClass.START_ONCE_TRAIL_EDGE_SET:
        _, sets = _trail_tables(g, u, length, budget)
        return len(sets.get((length, v), ()))
    if walk_class is WalkClass.DISTINCT_NON_INITIAL:
        dni, _ = _dni_tables(g, u, length, budget)
        return dni.get((length, v), 0)
    if walk_class is WalkClass.PATH:
        _, path = _dni_tables(g, u, length, budget)
        return path.get((length, v), 0)
    raise ValueError(f"unknown walk class {walk_class!r}")


def trail_edge_set_histogram(
    g: Graph, length: int, u: int, v: int, node_budget: int | None = None
) -> dict[frozenset[tuple[int, int]], int]:
    """For each edge set S, the number of trails of the given length from u
    to v traversing exactly S. Zero entries are omitted."""
    g.require_vertex(u)
    g.require_vertex(v)
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    budget = node_budget if node_budget is not None else limits.node_budget()
    _, sets = _trail_tables(g, u, length, budget)
    counter = sets.get((length, v))
    if not counter:
        return {}
    slots = list(pair_slot_index(g.n).items())
    return {
        frozenset(pair for pair, i in slots if mask & (1 << i)): count
        for mask, count in counter.items()
    }


def count_closed_euler_trails(g: Graph, u: int, node_budget: int | None = None) -> int:
    """Closed trails from u traversing every edge exactly once; each
    traversal direction is a distinct trail. 0 when no Eulerian circuit
    through u exists; the edgeless graph counts one empty circuit."""
    g.require_vertex(u)
    return count_walks(g, g.edge_count, u, u, WalkClass.TRAIL, node_budget)


def count_hamiltonian_cycles_through(
    g: Graph, u: int, directed: bool = False, node_budget: int | None = None
) -> int:
    """Hamiltonian cycles containing u (every Hamiltonian cycle contains
    every vertex); nonzero only for n >= 3. With directed=True, counts
    closed length-n sequences visiting every vertex exactly once, which is
    2x the undirected count for n >= 3 but also admits the degenerate
    back-and-forth traversal on K2 (a sequence, not a cycle)."""
    g.require_vertex(u)
    seq = count_walks(g, g.n, u, u, WalkClass.DISTINCT_NON_INITIAL, node_budget)
    if directed:
        return seq
    return seq // 2 if g.n >= 3 else 0


# One DFS per (graph, start) covers every length <= max_len and every end
# vertex at once; the lru_cache key includes max_len and budget so repeated
# queries at the same scale reuse the tables. Concurrent callers may at worst
# recompute a table; results are immutable after construction.


@functools.lru_cache(maxsize=None)
def _walk_table(g: Graph, start: int, max_len: int, budget: int) -> dict:
    counts: dict[tuple[int, int], int] = {}
    remaining = [budget]

    def rec(current: int, depth: int):
        remaining[0] -= 1
        if remaining[0] < 0:
            raise BudgetExceededError("walk tally", budget)
        if depth == max_len:
            return
        for w in g.neighbors(current):
            key = (depth + 1, w)
            counts[key] = counts.get(key, 0) + 1
            rec(w, depth + 1)

    rec(start, 0)
    return counts


@functools.lru_cache(maxsize=None)
def _trail_tables(g: Graph, start: int, max_len: int, budget: int) -> tuple[dict, dict]:
    counts: dict[tuple[int, int], int] = {}
    sets: dict[tuple[int, int], Counter] = {}
    slots = pair_slot_index(g.n)
    remaining = [budget]

    def rec(current: int, depth: int, edge_mask: int):
        remaining[0] -= 1
        if remaining[0] < 0:
            raise BudgetExceededError("trail tally", budget)
        if depth == max_len:
            return
        for w in g.neighbors(current):
            lo, hi = (current, w) if current < w else (w, current)
            ebit = 1 << slots[(lo, hi)]
            if edge_mask & ebit:
                continue
            mask = edge_mask | ebit
            key = (depth + 1, w)
            counts[key] = counts.get(key, 0) + 1
            sets.setdefault(key, Counter())[mask] += 1
            rec(w, depth + 1, mask)

    rec(start, 0, 0)
    return counts, sets


@functools.lru_cache(maxsize=None)
def _dni_tables(g: Graph, start: int, max_len: int, budget: int) -> tuple[dict, dict]:
    """DISTINCT_NON_INITIAL counts plus PATH counts (open paths avoid the
    start vertex entirely; closed paths are cycles, l >= 3)."""
    dni: dict[tuple[int, int], int] = {}
    path: dict[tuple[int, int], int] = {}
    start_bit = 1 << (start - 1)
    remaining = [budget]

    def rec(current: int, depth: int, dest_mask: int):
        remaining[0] -= 1
        if remaining[0] < 0:
            raise BudgetExceededError("path tally", budget)
        if depth == max_len:
            return
        for w in g.neighbors(current):
            wbit = 1 << (w - 1)
            if dest_mask & wbit:
                continue
            mask = dest_mask | wbit
            key = (depth + 1, w)
            dni[key] = dni.get(key, 0) + 1
            if w == start:
                if depth + 1 >= 3:
                    path[key] = path.get(key, 0) + 1
            elif not (mask & start_bit):
                path[key] = path.get(key, 0) + 1
            rec(w, depth + 1, mask)

    rec(start, 0, 0)
    return dni, path
