"""Count reports: run a query against the engines, time them, compare them.

Counts serialize as decimal strings so downstream JSON consumers never
overflow. JSON emission is canonical (sorted keys, fixed separators), so
parse + re-emit is byte-identical.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import fock, nilpotent, oracle
from .errors import BudgetExceededError, CapacityError
from .graphs import Graph, walk_count
from .nilpotent import PathVariant
from .oracle import WalkClass

# Machine-readable discrepancy codes; downstream tooling asserts on these.
PROP2_LITERAL_OVERCOUNT = "PROP2_LITERAL_OVERCOUNT"
DMATRIX_SQUARED = "DMATRIX_SQUARED"

KINDS = ("walks", "trails", "paths", "euler", "cycles", "hamiltonian")
ENGINES = ("oracle", "symbolic", "fock")


@dataclass
class EngineValue:
    value: int | None = None
    wall_time_ms: float | None = None
    error: str | None = None

    def to_json_obj(self) -> dict:
        if self.error is not None:
            return {"error": self.error}
        return {"value": str(self.value), "wall_time_ms": self.wall_time_ms}


@dataclass
class CountReport:
    graph_id: str
    kind: str
    length: int
    u: int
    v: int
    variant: str | None
    engines: dict[str, EngineValue]
    notes: list[dict] = field(default_factory=list)

    @property
    def agreement(self) -> dict[str, bool]:
        """Pairwise equality of engine values; pairs with an errored engine
        are omitted. Never true when the values differ."""
        names = [e for e in self.engines if self.engines[e].error is None]
        out = {}
        for i, a in enumerate(names):
            for b in names[i + 1 :]:
                out[f"{a}={b}"] = self.engines[a].value == self.engines[b].value
        return out

    def all_agree(self) -> bool:
        return all(self.agreement.values())

    def to_json_obj(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "kind": self.kind,
            "length": self.length,
            "from": self.u,
            "to": self.v,
            "variant": self.variant,
            "engines": {name: ev.to_json_obj() for name, ev in self.engines.items()},
            "agreement": self.agreement,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return canonical_json(self.to_json_obj())

    def to_csv_rows(self) -> list[list[str]]:
        rows = []
        agree = "true" if self.all_agree() else "false"
        note_codes = ";".join(n["code"] for n in self.notes)
        for name, ev in self.engines.items():
            rows.append(
                [
                    self.graph_id,
                    self.kind,
                    str(self.length),
                    str(self.u),
                    str(self.v),
                    self.variant or "",
                    name,
                    "ERROR" if ev.error is not None else str(ev.value),
                    "" if ev.wall_time_ms is None else f"{ev.wall_time_ms}",
                    agree,
                    note_codes,
                ]
            )
        return rows

    def to_text(self) -> str:
        lines = [
            f"graph {self.graph_id}  kind={self.kind}  l={self.length}  "
            f"{self.u} -> {self.v}"
            + (f"  variant={self.variant}" if self.variant else "")
        ]
        for name, ev in self.engines.items():
            if ev.error is not None:
                lines.append(f"  {name:<10} ERROR: {ev.error}")
            else:
                lines.append(f"  {name:<10} {ev.value}  ({ev.wall_time_ms} ms)")
        for key, ok in self.agreement.items():
            lines.append(f"  agree {key}: {'yes' if ok else 'NO'}")
        for note in self.notes:
            lines.append(f"  note {note['code']}: {note['message']}")
        return "\n".join(lines)


CSV_HEADER = [
    "graph_id",
    "kind",
    "length",
    "from",
    "to",
    "variant",
    "engine",
    "value",
    "wall_time_ms",
    "agreement",
    "notes",
]


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": "))


def matrix_to_decimal_rows(matrix) -> list[list[str]]:
    """Arbitrary-precision matrix as JSON-safe rows of decimal strings."""
    return [[str(int(x)) for x in row] for row in matrix]


def _timed(fn) -> EngineValue:
    start = time.perf_counter()
    try:
        value = fn()
    except (CapacityError, BudgetExceededError) as exc:
        return EngineValue(error=str(exc))
    elapsed = (time.perf_counter() - start) * 1000.0
    return EngineValue(value=int(value), wall_time_ms=round(elapsed, 3))


def _oracle_value(g: Graph, kind: str, length: int, u: int, v: int, variant: PathVariant) -> int:
    if kind == "walks":
        return oracle.count_walks(g, length, u, v, WalkClass.WALK)
    if kind == "trails":
        return oracle.count_walks(g, length, u, v, WalkClass.TRAIL)
    if kind == "paths":
        cls = WalkClass.PATH if variant is PathVariant.START_GUARDED else WalkClass.DISTINCT_NON_INITIAL
        return oracle.count_walks(g, length, u, v, cls)
    if kind == "euler":
        return oracle.count_walks(g, g.edge_count, u, v, WalkClass.TRAIL) if g.edge_count else int(u == v)
    if kind == "cycles":
        return oracle.count_walks(g, length, u, u, WalkClass.DISTINCT_NON_INITIAL)
    if kind == "hamiltonian":
        return oracle.count_hamiltonian_cycles_through(g, u, directed=True)
    raise ValueError(f"unknown kind {kind!r}")


def _symbolic_value(g: Graph, kind: str, length: int, u: int, v: int, variant: PathVariant) -> int:
    if kind == "walks":
        # The nilpotent ring is trail-specific; the exact adjacency-matrix
        # power is the algebraic walk counter.
        return walk_count(g, length, u, v)
    if kind == "trails":
        return nilpotent.trail_count_symbolic(g, length, u, v)
    if kind == "paths":
        return nilpotent.path_count_symbolic(g, length, u, v, variant)
    if kind == "euler":
        return nilpotent.euler_trail_count_symbolic(g, u, v)
    if kind == "cycles":
        return nilpotent.cycle_count_symbolic(g, length, u)
    if kind == "hamiltonian":
        return nilpotent.cycle_count_symbolic(g, g.n, u)
    raise ValueError(f"unknown kind {kind!r}")


def _fock_value(g: Graph, kind: str, length: int, u: int, v: int, variant: PathVariant) -> int:
    if kind == "walks":
        return fock.walk_count_expectation(g, length, u, v)
    if kind == "trails":
        return fock.normal_ordered_expectation(g, length, u, v, fock.MatrixKind.N_EDGE)
    if kind == "paths":
        guard = u if variant is PathVariant.START_GUARDED else None
        return fock.normal_ordered_expectation(
            g, length, u, v, fock.MatrixKind.M_VERTEX, guard_vertex=guard
        )
    if kind == "euler":
        if g.edge_count == 0:
            return int(u == v)
        return fock.normal_ordered_expectation(g, g.edge_count, u, v, fock.MatrixKind.N_EDGE)
    if kind == "cycles":
        return fock.normal_ordered_expectation(g, length, u, u, fock.MatrixKind.M_VERTEX)
    if kind == "hamiltonian":
        return fock.f_matrix_amplitude(g, g.n, u)
    raise ValueError(f"unknown kind {kind!r}")


_ENGINE_FNS = {
    "oracle": _oracle_value,
    "symbolic": _symbolic_value,
    "fock": _fock_value,
}


def run_count_query(
    g: Graph,
    graph_id: str,
    kind: str,
    length: int,
    u: int,
    v: int,
    engines=ENGINES,
    variant: PathVariant = PathVariant.LITERAL,
) -> CountReport:
    """Evaluate one counting query on the requested engines and assemble the
    cross-checked report, including characterized-discrepancy notes."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    values: dict[str, EngineValue] = {}
    for name in engines:
        fn = _ENGINE_FNS[name]
        values[name] = _timed(lambda fn=fn: fn(g, kind, length, u, v, variant))

    report = CountReport(
        graph_id=graph_id,
        kind=kind,
        length=length,
        u=u,
        v=v,
        variant=variant.value if kind == "paths" else None,
        engines=values,
    )
    _annotate(report, g, kind, length, u, v, variant)
    return report


def _annotate(report, g, kind, length, u, v, variant) -> None:
    if kind == "paths" and variant is PathVariant.LITERAL and u != v:
        try:
            literal = oracle.count_walks(g, length, u, v, WalkClass.DISTINCT_NON_INITIAL)
            true_paths = oracle.count_walks(g, length, u, v, WalkClass.PATH)
        except BudgetExceededError:
            return
        if literal != true_paths:
            report.notes.append(
                {
                    "code": PROP2_LITERAL_OVERCOUNT,
                    "message": (
                        f"literal destination-vertex observable counts {literal} "
                        f"(distinct-non-initial walks) but the path count is {true_paths}"
                    ),
                }
            )
    if kind in ("trails", "euler"):
        l_eff = g.edge_count if kind == "euler" else length
        if l_eff >= 1:
            try:
                quad = fock.d_matrix_quadratic_form(g, l_eff, u, v)
                trail = oracle.count_walks(g, l_eff, u, v, WalkClass.TRAIL)
            except (CapacityError, BudgetExceededError):
                return
            if quad != trail:
                report.notes.append(
                    {
                        "code": DMATRIX_SQUARED,
                        "message": (
                            f"annihilation quadratic form is {quad} (sum of squared "
                            f"per-edge-set trail counts) but the trail count is {trail}"
                        ),
                    }
                )
