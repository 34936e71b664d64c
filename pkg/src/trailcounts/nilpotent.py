"""Polynomial matrices over commuting nilpotent generators (x*x = 0).

The quotient ring models normally ordered products of qubit number operators:
a product touching the same slot twice is identically zero, so a monomial is
just a set of generator indices, stored as a bitmask, and multiplication
drops any term whose factors share a generator. Matrix powers of the formal
adjacency matrix therefore keep exactly one monomial per trail; summing
coefficients of an entry counts trails.

Two generator universes are used: edge generators indexed by pair slots
(trail counting) and vertex generators indexed by vertex-1 (path counting
with the destination-vertex observable).

Coefficients are plain Python integers; they never go negative here, but zero
coefficients are always dropped so equality is structural.
"""

from __future__ import annotations

import enum
from typing import Iterator

from . import limits
from .errors import BudgetExceededError
from .graphs import Graph, slot_of_pair


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class Polynomial:
    """Sparse polynomial: bitmask of generator indices -> coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls({0: 1})

    @classmethod
    def generator(cls, index: int) -> "Polynomial":
        if index < 0:
            raise ValueError(f"generator index must be >= 0, got {index}")
        return cls({1 << index: 1})

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[int, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                if m1 & m2:
                    continue  # x*x = 0
                m = m1 | m2
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def term_count(self) -> int:
        return len(self._terms)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def coefficient(self, generators) -> int:
        mask = 0
        for i in generators:
            mask |= 1 << i
        return self._terms.get(mask, 0)

    def terms(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """(sorted generator indices, coefficient) pairs in canonical order
        (monomial bitmask ascending)."""
        for mask in sorted(self._terms):
            yield _mask_generators(mask), self._terms[mask]

    def degrees(self) -> set[int]:
        return {_popcount(m) for m in self._terms}

    def without_generator(self, index: int) -> "Polynomial":
        """Terms not containing the generator; equals multiplying by that
        generator and then stripping it again (the x*x = 0 filter)."""
        bit = 1 << index
        return Polynomial({m: c for m, c in self._terms.items() if not (m & bit)})

    def to_json_obj(self) -> list[dict]:
        return [
            {"generators": list(gens), "coeff": str(coeff)}
            for gens, coeff in self.terms()
        ]

    def __repr__(self) -> str:
        if not self._terms:
            return "Polynomial(0)"
        parts = []
        for gens, coeff in self.terms():
            mono = "*".join(f"x{i}" for i in gens) if gens else "1"
            parts.append(f"{coeff}*{mono}" if coeff != 1 or not gens else mono)
        return "Polynomial(" + " + ".join(parts) + ")"


def _mask_generators(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


class PolyMatrix:
    """Square matrix of Polynomial entries; 1-based entry access."""

    __slots__ = ("rows",)

    def __init__(self, rows: list[list[Polynomial]]):
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, u: int, v: int) -> Polynomial:
        return self.rows[u - 1][v - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def total_terms(self) -> int:
        return sum(p.term_count() for row in self.rows for p in row)

    def mul(self, other: "PolyMatrix", term_budget: int | None = None) -> "PolyMatrix":
        if self.n != other.n:
            raise ValueError("matrix dimensions differ")
        budget = term_budget if term_budget is not None else limits.term_budget()
        n = self.n
        live = 0
        out: list[list[Polynomial]] = []
        for i in range(n):
            out_row: list[Polynomial] = []
            for j in range(n):
                acc: dict[int, int] = {}
                for k in range(n):
                    left = self.rows[i][k]._terms
                    if not left:
                        continue
                    right = other.rows[k][j]._terms
                    if not right:
                        continue
                    for m1, c1 in left.items():
                        for m2, c2 in right.items():
                            if m1 & m2:
                                continue
                            m = m1 | m2
                            acc[m] = acc.get(m, 0) + c1 * c2
                entry = Polynomial(acc)
                live += entry.term_count()
                if live > budget:
                    raise BudgetExceededError("polynomial matrix product", budget)
                out_row.append(entry)
            out.append(out_row)
        return PolyMatrix(out)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self.mul(other)


def matrix_power_nilpotent(m: PolyMatrix, exponent: int, term_budget: int | None = None) -> PolyMatrix:
    """m**exponent with the x*x = 0 reduction applied inside every product.
    Exponent must be >= 1 (the recursion is power(l) = m * power(l-1))."""
    if exponent < 1:
        raise ValueError(f"exponent must be >= 1, got {exponent}")
    result = m
    for _ in range(exponent - 1):
        result = result.mul(m, term_budget)
    return result


def formal_adjacency_edges(g: Graph) -> PolyMatrix:
    """Adjacency matrix with each 1 replaced by the generator of its edge's
    pair slot; entries (u, v) and (v, u) share one generator, matching one
    qubit slot per unordered pair."""
    zero = Polynomial.zero()
    rows = []
    for u in range(1, g.n + 1):
        row = []
        for v in range(1, g.n + 1):
            if u != v and g.has_edge(u, v):
                row.append(Polynomial.generator(slot_of_pair(g.n, u, v)))
            else:
                row.append(zero)
        rows.append(row)
    return PolyMatrix(rows)


class PathVariant(enum.Enum):
    """LITERAL is the destination-vertex observable exactly as defined (it
    counts walks whose non-initial vertices are pairwise distinct, which can
    exceed the path count when the start vertex is revisited). START_GUARDED
    additionally multiplies the start vertex's generator into every term,
    which is the minimal correction making the count equal the path count.
    START_GUARDED is an artifact-introduced variant, not part of the original
    observable definition."""

    LITERAL = "literal"
    START_GUARDED = "guarded"


def vertex_observable_matrix(
    g: Graph, variant: PathVariant = PathVariant.LITERAL, start: int | None = None
) -> PolyMatrix:
    """Matrix with entry (a, b) the generator of the destination vertex b
    whenever {a, b} is an edge, else zero. For START_GUARDED, row `start` is
    additionally multiplied by the start vertex's own generator."""
    if variant is PathVariant.START_GUARDED:
        if start is None:
            raise ValueError("START_GUARDED needs the start vertex")
        g.require_vertex(start)
    zero = Polynomial.zero()
    rows = []
    for a in range(1, g.n + 1):
        row = []
        for b in range(1, g.n + 1):
            if a != b and g.has_edge(a, b):
                p = Polynomial.generator(b - 1)
                if variant is PathVariant.START_GUARDED and a == start:
                    p = p * Polynomial.generator(start - 1)
                row.append(p)
            else:
                row.append(zero)
        rows.append(row)
    return PolyMatrix(rows)


def _row_power_entry(
    m: PolyMatrix, length: int, u: int, v: int, term_budget: int | None
) -> Polynomial:
    """Entry (u, v) of m**length via row-vector products; same value as
    matrix_power_nilpotent(m, length).entry(u, v) at a fraction of the work."""
    budget = term_budget if term_budget is not None else limits.term_budget()
    n = m.n
    row = [m.rows[u - 1][j]._terms for j in range(n)]
    for _ in range(length - 1):
        nxt: list[dict[int, int]] = [dict() for _ in range(n)]
        live = 0
        for k in range(n):
            left = row[k]
            if not left:
                continue
            mat_row = m.rows[k]
            for j in range(n):
                right = mat_row[j]._terms
                if not right:
                    continue
                acc = nxt[j]
                for m1, c1 in left.items():
                    for m2, c2 in right.items():
                        if m1 & m2:
                            continue
                        key = m1 | m2
                        acc[key] = acc.get(key, 0) + c1 * c2
        for acc in nxt:
            live += len(acc)
        if live > budget:
            raise BudgetExceededError("polynomial row product", budget)
        row = nxt
    return Polynomial(row[v - 1])


def trail_count_symbolic(
    g: Graph, length: int, u: int, v: int, term_budget: int | None = None
) -> int:
    """Sum of coefficients of entry (u, v) of the formal adjacency matrix to
    the given power under x*x = 0; equals the trail count."""
    g.require_vertex(u)
    g.require_vertex(v)
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    entry = _row_power_entry(formal_adjacency_edges(g), length, u, v, term_budget)
    return entry.coefficient_sum()


def euler_trail_count_symbolic(
    g: Graph, u: int, v: int, term_budget: int | None = None
) -> int:
    """Trail count at length |E|: trails traversing every edge exactly once.
    For u == v this is the closed Eulerian-circuit count (each direction a
    distinct trail). The edgeless graph counts one empty circuit."""
    g.require_vertex(u)
    g.require_vertex(v)
    m = g.edge_count
    if m == 0:
        return 1 if u == v else 0
    return trail_count_symbolic(g, m, u, v, term_budget)


def path_count_symbolic(
    g: Graph,
    length: int,
    u: int,
    v: int,
    variant: PathVariant = PathVariant.LITERAL,
    term_budget: int | None = None,
) -> int:
    """Sum of coefficients of entry (u, v) of the destination-vertex
    observable power under x*x = 0.

    LITERAL counts walks whose non-initial vertices are pairwise distinct
    (DISTINCT_NON_INITIAL), which exceeds the path count whenever a walk
    revisits the start vertex. START_GUARDED multiplies the start vertex's
    generator into every term before reduction and equals the path count;
    it requires u != v (a closed walk always revisits the start)."""
    g.require_vertex(u)
    g.require_vertex(v)
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    if variant is PathVariant.START_GUARDED:
        if u == v:
            raise ValueError("START_GUARDED counts open paths; u must differ from v")
        m = vertex_observable_matrix(g, PathVariant.START_GUARDED, start=u)
        entry = _row_power_entry(m, length, u, v, term_budget)
        return entry.coefficient_sum()
    m = vertex_observable_matrix(g)
    entry = _row_power_entry(m, length, u, v, term_budget)
    return entry.coefficient_sum()


def guarded_sum_from_literal(entry: Polynomial, start: int) -> int:
    """Path count extracted from a LITERAL power entry: multiplying by the
    start generator kills exactly the terms already containing it, so the
    guarded count is the coefficient sum over terms free of that generator."""
    return entry.without_generator(start - 1).coefficient_sum()


def cycle_count_symbolic(g: Graph, length: int, u: int, term_budget: int | None = None) -> int:
    """Sum of coefficients of the LITERAL observable power's diagonal entry
    (u, u): the number of directed cycles of the given length through u
    (each undirected cycle traversed in two directions). At length n this is
    the directed Hamiltonian count through u."""
    g.require_vertex(u)
    if length < 3:
        raise ValueError(f"cycles need length >= 3, got {length}")
    m = vertex_observable_matrix(g)
    entry = _row_power_entry(m, length, u, u, term_budget)
    return entry.coefficient_sum()
