"""Literal occupation-basis evaluation of the counting observables.

A Register assigns one qubit slot per unordered vertex pair (edge space,
width C(n,2)), per present edge (the economical edge-space option, width
|E|), or per vertex (vertex space, width n). StateVector holds a dense
amplitude array of length 2**width with exact integer amplitudes: every
operator used here maps basis states to 0/1-weighted basis states, so the
whole pipeline is exact, matching the arbitrary-precision counts of the
other engines.

Slot s occupies bit (width-1-s) of a basis index, so the binary rendering of
an index, left to right, is the slot occupation string: the 4-cycle's graph
state renders as "110011".

Matrix powers of the observable matrices are never materialized: an entry of
a power is the sum over walks of the corresponding operator products, so the
evaluators expand walks and abandon any term whose prefix already annihilates
to zero (a repeated slot under normal ordering, or an annihilation on an
empty slot). This pruning changes nothing about the value; it only skips
terms that contribute 0.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

import numpy as np

from . import limits
from .errors import BudgetExceededError, CapacityError
from .graphs import Graph, pair_slots

SlotLabel = object  # (u, v) pair for edge spaces, int vertex for vertex space


class RegisterKind(enum.Enum):
    EDGE_SPACE = "edge-space"
    VERTEX_SPACE = "vertex-space"


@dataclass(frozen=True)
class Register:
    """A named qubit register: ordered slot labels, one qubit per slot."""

    kind: RegisterKind
    slots: tuple

    def __post_init__(self):
        cap = limits.register_cap()
        if self.width > cap:
            raise CapacityError(self.width, cap)

    @property
    def width(self) -> int:
        return len(self.slots)

    @property
    def dimension(self) -> int:
        return 1 << self.width

    def slot_index(self, label) -> int:
        try:
            return _slot_lookup(self)[label]
        except KeyError:
            raise ValueError(f"no slot {label!r} in this register") from None

    def bit(self, slot: int) -> int:
        """Bit position of a slot within a basis index."""
        if not 0 <= slot < self.width:
            raise ValueError(f"slot {slot} out of range 0..{self.width - 1}")
        return self.width - 1 - slot

    @classmethod
    def all_pairs(cls, n: int) -> "Register":
        """Edge space over every unordered pair of distinct vertices."""
        return cls(RegisterKind.EDGE_SPACE, pair_slots(n))

    @classmethod
    def present_edges(cls, g: Graph) -> "Register":
        """Edge space with slots only for actual edges; entries of the
        observable matrices that would reference non-edges are zero from the
        start."""
        return cls(RegisterKind.EDGE_SPACE, g.sorted_edges())

    @classmethod
    def vertices(cls, n: int) -> "Register":
        return cls(RegisterKind.VERTEX_SPACE, tuple(range(1, n + 1)))


@functools.cache
def _slot_lookup(register: Register) -> dict:
    return {label: i for i, label in enumerate(register.slots)}


def basis_label(register: Register, index: int) -> str:
    """Occupation string of a basis index, slot 0 leftmost."""
    return format(index, f"0{register.width}b")


class StateVector:
    """Dense amplitude vector over a register; amplitudes are exact ints."""

    __slots__ = ("register", "amplitudes")

    def __init__(self, register: Register, amplitudes: np.ndarray):
        if amplitudes.shape != (register.dimension,):
            raise ValueError(
                f"amplitude array must have length {register.dimension}, "
                f"got {amplitudes.shape}"
            )
        self.register = register
        self.amplitudes = amplitudes

    @classmethod
    def zero(cls, register: Register) -> "StateVector":
        return cls(register, np.zeros(register.dimension, dtype=object))

    @classmethod
    def basis(cls, register: Register, index: int) -> "StateVector":
        if not 0 <= index < register.dimension:
            raise ValueError(f"basis index {index} out of range")
        amplitudes = np.zeros(register.dimension, dtype=object)
        amplitudes[index] = 1
        return cls(register, amplitudes)

    @classmethod
    def from_occupied(cls, register: Register, occupied_labels) -> "StateVector":
        index = 0
        for label in occupied_labels:
            index |= 1 << register.bit(register.slot_index(label))
        return cls.basis(register, index)

    @classmethod
    def all_ones(cls, register: Register) -> "StateVector":
        return cls.basis(register, register.dimension - 1)

    def basis_index(self) -> int:
        """Index of the single nonzero amplitude; errors if not a basis state."""
        nz = self.nonzero()
        if len(nz) != 1 or nz[0][1] != 1:
            raise ValueError("not a computational basis state")
        return nz[0][0]

    def inner(self, other: "StateVector") -> int:
        if self.register != other.register:
            raise ValueError("states live on different registers")
        return int((self.amplitudes * other.amplitudes).sum())

    def squared_norm(self) -> int:
        return int((self.amplitudes * self.amplitudes).sum())

    def nonzero(self) -> list[tuple[int, int]]:
        return [(int(i), int(a)) for i, a in enumerate(self.amplitudes) if a != 0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, StateVector)
            and self.register == other.register
            and bool(np.array_equal(self.amplitudes, other.amplitudes))
        )

    def to_json_obj(self) -> dict:
        return {
            "width": self.register.width,
            "kind": self.register.kind.value,
            "nonzero": [
                {"index": i, "amplitude": str(a)} for i, a in self.nonzero()
            ],
        }

    def __repr__(self) -> str:
        parts = [
            f"{a}|{basis_label(self.register, i)}>" for i, a in self.nonzero()
        ]
        return " + ".join(parts) if parts else "0"


class LadderKind(enum.Enum):
    ANNIHILATE = "a"
    CREATE = "a+"
    NUMBER = "n"


@dataclass(frozen=True)
class LadderOp:
    """A single-slot ladder operator: a|0>=0, a+|0>=|1>, a|1>=|0>, a+|1>=0,
    and the number operator n=a+a with n|k>=k|k>."""

    kind: LadderKind
    slot: int


def apply_ladder(op: LadderOp, state: StateVector) -> StateVector:
    """Apply a ladder operator to a state, returning a fresh state."""
    width = state.register.width
    if not 0 <= op.slot < width:
        raise ValueError(f"slot {op.slot} out of range 0..{width - 1}")
    bit = state.register.bit(op.slot)
    block = 1 << bit
    src = state.amplitudes.reshape(-1, 2, block)
    out = np.zeros_like(state.amplitudes)
    dst = out.reshape(-1, 2, block)
    if op.kind is LadderKind.ANNIHILATE:
        dst[:, 0, :] = src[:, 1, :]
    elif op.kind is LadderKind.CREATE:
        dst[:, 1, :] = src[:, 0, :]
    elif op.kind is LadderKind.NUMBER:
        dst[:, 1, :] = src[:, 1, :]
    else:
        raise ValueError(f"unknown ladder kind {op.kind!r}")
    return StateVector(state.register, out)


def graph_state(g: Graph, present_edges_only: bool = False) -> StateVector:
    """The basis state marking the graph's edges as occupied slots."""
    register = Register.present_edges(g) if present_edges_only else Register.all_pairs(g.n)
    return StateVector.from_occupied(register, g.sorted_edges())


class MatrixKind(enum.Enum):
    """Which observable matrix a walk term belongs to.

    N_EDGE   number operators on traversed edge slots (trail counting).
    M_VERTEX number operators on destination vertices (path counting).
    D_EDGE   annihilation operators on traversed edge slots.
    F_VERTEX annihilation operators on destination vertices (cycle /
             Hamiltonicity transition amplitudes).
    """

    N_EDGE = "n-edge"
    M_VERTEX = "m-vertex"
    D_EDGE = "d-edge"
    F_VERTEX = "f-vertex"


_NUMBER_KINDS = (MatrixKind.N_EDGE, MatrixKind.M_VERTEX)
_EDGE_KINDS = (MatrixKind.N_EDGE, MatrixKind.D_EDGE)


@dataclass(frozen=True)
class OperatorTerm:
    """Ordered product of ladder operators; ops[0] is the first walk step
    (leftmost factor), and products apply right-to-left to kets."""

    ops: tuple[LadderOp, ...]

    def slots(self) -> tuple[int, ...]:
        return tuple(op.slot for op in self.ops)

    def apply(self, state: StateVector) -> StateVector:
        out = state
        for op in reversed(self.ops):
            out = apply_ladder(op, out)
        return out


def _register_for(g: Graph, matrix_kind: MatrixKind, present_edges_only: bool) -> Register:
    if matrix_kind in _EDGE_KINDS:
        return Register.present_edges(g) if present_edges_only else Register.all_pairs(g.n)
    return Register.vertices(g.n)


def _step_slot(register: Register, matrix_kind: MatrixKind, a: int, b: int) -> int:
    if matrix_kind in _EDGE_KINDS:
        return register.slot_index((min(a, b), max(a, b)))
    return register.slot_index(b)


def expand_walk_terms(
    g: Graph,
    length: int,
    u: int,
    v: int,
    matrix_kind: MatrixKind,
    present_edges_only: bool = False,
    node_budget: int | None = None,
) -> list[tuple[tuple[int, ...], OperatorTerm]]:
    """One (walk, operator term) pair per length-l walk from u to v: the
    term the corresponding matrix-power entry contains for that walk.
    Unpruned and exponential; meant for inspection at desk scale."""
    g.require_vertex(u)
    g.require_vertex(v)
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    register = _register_for(g, matrix_kind, present_edges_only)
    op_kind = LadderKind.NUMBER if matrix_kind in _NUMBER_KINDS else LadderKind.ANNIHILATE
    budget = node_budget if node_budget is not None else limits.node_budget()
    remaining = [budget]
    out: list[tuple[tuple[int, ...], OperatorTerm]] = []
    seq = [u]
    ops: list[LadderOp] = []

    def rec(current: int, depth: int):
        remaining[0] -= 1
        if remaining[0] < 0:
            raise BudgetExceededError("walk-term expansion", budget)
        last = depth + 1 == length
        for w in g.neighbors(current):
            if last and w != v:
                continue
            seq.append(w)
            ops.append(LadderOp(op_kind, _step_slot(register, matrix_kind, current, w)))
            if last:
                out.append((tuple(seq), OperatorTerm(tuple(ops))))
            else:
                rec(w, depth + 1)
            seq.pop()
            ops.pop()

    rec(u, 0)
    return out


def normal_ordered_term_expectation(term: OperatorTerm, state: StateVector) -> int:
    """Expectation of the normally ordered term on a state: zero when any
    slot repeats (a repeated number operator normally orders to a+a+aa = 0),
    otherwise the occupation product, amplitude-squared weighted. Only
    number-operator terms are diagonal, so only those are accepted."""
    for op in term.ops:
        if op.kind is not LadderKind.NUMBER:
            raise ValueError("normal-ordered expectation is defined here for number-operator terms")
    slots = term.slots()
    if len(set(slots)) != len(slots):
        return 0
    total = 0
    for index, amp in state.nonzero():
        if all((index >> state.register.bit(s)) & 1 for s in slots):
            total += amp * amp
    return total


def normal_ordered_expectation(
    g: Graph,
    length: int,
    u: int,
    v: int,
    matrix_kind: MatrixKind,
    present_edges_only: bool = False,
    guard_vertex: int | None = None,
    node_budget: int | None = None,
) -> int:
    """Expectation of the normally ordered matrix-power entry (u, v) on the
    reference state: the graph state for N_EDGE, the all-ones vertex state
    for M_VERTEX. Each expanded walk term contributes 1 when its slots are
    pairwise distinct and all occupied, else 0.

    guard_vertex (M_VERTEX only) prepends a number operator on that vertex's
    slot to every term; with guard_vertex=u the value drops from the
    distinct-non-initial count to the true path count. This guard is an
    artifact extension, not part of the literal observable."""
    g.require_vertex(u)
    g.require_vertex(v)
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    if matrix_kind not in _NUMBER_KINDS:
        raise ValueError("normal-ordered expectation applies to the number-operator matrices")
    if guard_vertex is not None:
        if matrix_kind is not MatrixKind.M_VERTEX:
            raise ValueError("guard_vertex applies to the destination-vertex observable only")
        g.require_vertex(guard_vertex)

    register, reference = _reference_state(g, matrix_kind, present_edges_only)
    budget = node_budget if node_budget is not None else limits.node_budget()
    remaining = [budget]
    used0 = 0
    if guard_vertex is not None:
        gbit = register.bit(register.slot_index(guard_vertex))
        if not (reference >> gbit) & 1:
            return 0
        used0 = 1 << gbit

    total = [0]

    def rec(current: int, depth: int, used: int):
        remaining[0] -= 1
        if remaining[0] < 0:
            raise BudgetExceededError("normal-ordered evaluation", budget)
        last = depth + 1 == length
        for w in g.neighbors(current):
            if last and w != v:
                continue
            bit = register.bit(_step_slot(register, matrix_kind, current, w))
            mask = 1 << bit
            if used & mask:
                continue  # repeated slot: the normally ordered term vanishes
            if not (reference >> bit) & 1:
                continue  # number operator on an empty slot: eigenvalue 0
            if last:
                total[0] += 1
            else:
                rec(w, depth + 1, used | mask)

    rec(u, 0, used0)
    return total[0]


def _reference_state(
    g: Graph, matrix_kind: MatrixKind, present_edges_only: bool
) -> tuple[Register, int]:
    register = _register_for(g, matrix_kind, present_edges_only)
    if matrix_kind in _EDGE_KINDS:
        reference = graph_state(g, present_edges_only).basis_index()
    else:
        reference = register.dimension - 1  # |11...1>
    return register, reference


def normal_ordered_expectation_table(
    g: Graph,
    start: int,
    max_len: int,
    matrix_kind: MatrixKind,
    present_edges_only: bool = False,
    node_budget: int | None = None,
) -> dict[tuple[int, int], int]:
    """All (length <= max_len, end vertex) expectations from one start in a
    single pruned expansion; identical recursion and semantics as the
    per-query evaluator, tallied at every depth."""
    g.require_vertex(start)
    if matrix_kind not in _NUMBER_KINDS:
        raise ValueError("normal-ordered expectation applies to the number-operator matrices")
    register, reference = _reference_state(g, matrix_kind, present_edges_only)
    budget = node_budget if node_budget is not None else limits.node_budget()
    remaining = [budget]
    table: dict[tuple[int, int], int] = {}

    def rec(current: int, depth: int, used: int):
        remaining[0] -= 1
        if remaining[0] < 0:
            raise BudgetExceededError("normal-ordered tally", budget)
        if depth == max_len:
            return
        for w in g.neighbors(current):
            bit = register.bit(_step_slot(register, matrix_kind, current, w))
            mask = 1 << bit
            if used & mask:
                continue
            if not (reference >> bit) & 1:
                continue
            key = (depth + 1, w)
            table[key] = table.get(key, 0) + 1
            rec(w, depth + 1, used | mask)

    rec(start, 0, 0)
    return table


def walk_count_expectation(
    g: Graph,
    length: int,
    u: int,
    v: int,
    present_edges_only: bool = False,
    node_budget: int | None = None,
) -> int:
    """Expectation of the PLAIN (not normally ordered) number-matrix power
    entry on the graph state: every walk term evaluates to its occupation
    product, which is 1 for every walk inside the graph, so this equals the
    walk count. Length 0 follows the identity-power convention."""
    g.require_vertex(u)
    g.require_vertex(v)
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    if length == 0:
        return 1 if u == v else 0
    register, reference = _reference_state(g, MatrixKind.N_EDGE, present_edges_only)
    budget = node_budget if node_budget is not None else limits.node_budget()
    remaining = [budget]
    total = [0]

    def rec(current: int, depth: int):
        remaining[0] -= 1
        if remaining[0] < 0:
            raise BudgetExceededError("plain expectation", budget)
        last = depth + 1 == length
        for w in g.neighbors(current):
            if last and w != v:
                continue
            bit = register.bit(_step_slot(register, MatrixKind.N_EDGE, current, w))
            if not (reference >> bit) & 1:
                continue
            if last:
                total[0] += 1
            else:
                rec(w, depth + 1)

    rec(u, 0)
    return total[0]


def d_matrix_quadratic_form(
    g: Graph,
    length: int,
    u: int,
    v: int,
    present_edges_only: bool = False,
    node_budget: int | None = None,
) -> int:
    """Apply the annihilation-matrix power entry (u, v) to the graph state as
    an actual state evolution and return the squared norm of the result.

    Each surviving walk term annihilates a distinct edge set S and lands on
    the basis state with S cleared, so amplitudes accumulate to t_S per set
    and the value is the sum of t_S**2. That equals the trail count exactly
    when every t_S <= 1; otherwise it exceeds it."""
    g.require_vertex(u)
    g.require_vertex(v)
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    register, reference = _reference_state(g, MatrixKind.D_EDGE, present_edges_only)
    result = StateVector.zero(register)
    amplitudes = result.amplitudes
    budget = node_budget if node_budget is not None else limits.node_budget()
    remaining = [budget]

    def rec(current: int, depth: int, index: int):
        remaining[0] -= 1
        if remaining[0] < 0:
            raise BudgetExceededError("annihilation evolution", budget)
        last = depth + 1 == length
        for w in g.neighbors(current):
            if last and w != v:
                continue
            bit = register.bit(_step_slot(register, MatrixKind.D_EDGE, current, w))
            mask = 1 << bit
            if not index & mask:
                continue  # annihilating an empty slot gives the zero vector
            if last:
                amplitudes[index & ~mask] += 1
            else:
                rec(w, depth + 1, index & ~mask)

    rec(u, 0, reference)
    return result.squared_norm()


def annihilation_form_table(
    g: Graph,
    start: int,
    max_len: int,
    present_edges_only: bool = False,
    node_budget: int | None = None,
) -> dict[tuple[int, int], int]:
    """Squared norms of the annihilation evolution for every (length <=
    max_len, end vertex) from one start; sparse accumulation, same recursion
    as the per-query evaluator."""
    g.require_vertex(start)
    register, reference = _reference_state(g, MatrixKind.D_EDGE, present_edges_only)
    budget = node_budget if node_budget is not None else limits.node_budget()
    remaining = [budget]
    amps: dict[tuple[int, int], dict[int, int]] = {}

    def rec(current: int, depth: int, index: int):
        remaining[0] -= 1
        if remaining[0] < 0:
            raise BudgetExceededError("annihilation tally", budget)
        if depth == max_len:
            return
        for w in g.neighbors(current):
            bit = register.bit(_step_slot(register, MatrixKind.D_EDGE, current, w))
            mask = 1 << bit
            if not index & mask:
                continue
            cleared = index & ~mask
            bucket = amps.setdefault((depth + 1, w), {})
            bucket[cleared] = bucket.get(cleared, 0) + 1
            rec(w, depth + 1, cleared)

    rec(start, 0, reference)
    return {key: sum(a * a for a in bucket.values()) for key, bucket in amps.items()}


def f_matrix_amplitude(g: Graph, length: int, u: int, node_budget: int | None = None) -> int:
    """Amplitude of the all-zeros state after applying the closed-walk
    annihilation terms (destination-vertex slots) to the all-ones vertex
    state. Zero whenever length < n (fewer than n slots get annihilated);
    at length n it equals the number of directed Hamiltonian traversals
    through u."""
    g.require_vertex(u)
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    register = Register.vertices(g.n)
    result = StateVector.zero(register)
    amplitudes = result.amplitudes
    reference = register.dimension - 1
    budget = node_budget if node_budget is not None else limits.node_budget()
    remaining = [budget]

    def rec(current: int, depth: int, index: int):
        remaining[0] -= 1
        if remaining[0] < 0:
            raise BudgetExceededError("transition-amplitude evaluation", budget)
        last = depth + 1 == length
        for w in g.neighbors(current):
            if last and w != u:
                continue
            bit = register.bit(register.slot_index(w))
            mask = 1 << bit
            if not index & mask:
                continue
            if last:
                amplitudes[index & ~mask] += 1
            else:
                rec(w, depth + 1, index & ~mask)

    rec(u, 0, reference)
    return int(amplitudes[0])


def is_hamiltonian(g: Graph, node_budget: int | None = None) -> bool:
    """Whether the graph has a Hamiltonian cycle, decided by the transition
    amplitude at length n from vertex 1 (the value is the same from every
    vertex, since every Hamiltonian cycle passes through every vertex).
    Graphs on fewer than 3 vertices have no cycles at all."""
    if g.n < 3:
        return False
    return f_matrix_amplitude(g, g.n, 1, node_budget) > 0
