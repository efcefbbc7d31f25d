"""CWR_2 and CWR_3 from traces of weighted adjacency matrices.

This path never enumerates cycles, so it serves as an independent check on
the cycle-based computation for the first two components.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cwr import CwrValue
from .diagram import PlanarDiagram
from .poly import ONE, ZERO, BivarPoly, parse_poly, render_poly
from .tait import ConsolidatedGraph, tait_graphs

__all__ = [
    "WeightedAdjMatrix",
    "OracleMismatch",
    "from_graph",
    "unit_matrix",
    "matmul",
    "trace",
    "cwr2_via_trace",
    "cwr3_via_trace",
    "oracle_pairs",
    "check_against",
]


class OracleMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class WeightedAdjMatrix:
    n: int
    entries: tuple[tuple[BivarPoly, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError("matrix must be n x n")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[str | BivarPoly | int]]) -> "WeightedAdjMatrix":
        def conv(x):
            if isinstance(x, BivarPoly):
                return x
            if isinstance(x, int):
                return BivarPoly.const(x)
            return parse_poly(x)
        return cls(len(rows), tuple(tuple(conv(x) for x in row) for row in rows))

    def render(self) -> str:
        cells = [[render_poly(x) for x in row] for row in self.entries]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def from_graph(g: ConsolidatedGraph, vertex_order: Sequence[int] | None = None) -> WeightedAdjMatrix:
    order = list(g.vertices if vertex_order is None else vertex_order)
    if sorted(order) != sorted(g.vertices):
        raise ValueError("vertex_order must be a permutation of the graph's vertices")
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    rows = [[ZERO] * n for _ in range(n)]
    for u, v, wt in g.edges:
        rows[idx[u]][idx[v]] = wt
        rows[idx[v]][idx[u]] = wt
    return WeightedAdjMatrix(n, tuple(tuple(r) for r in rows))


def unit_matrix(m: WeightedAdjMatrix) -> WeightedAdjMatrix:
    """Same sparsity pattern, every nonzero entry replaced by 1."""
    return WeightedAdjMatrix(m.n, tuple(tuple(ONE if x else ZERO for x in row) for row in m.entries))


def matmul(a: WeightedAdjMatrix, b: WeightedAdjMatrix) -> WeightedAdjMatrix:
    if a.n != b.n:
        raise ValueError("dimension mismatch")
    n = a.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = ZERO
            for k in range(n):
                x, y = a.entries[i][k], b.entries[k][j]
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        rows.append(tuple(row))
    return WeightedAdjMatrix(n, tuple(rows))


def trace(m: WeightedAdjMatrix) -> BivarPoly:
    return sum((m.entries[i][i] for i in range(m.n)), ZERO)


def cwr2_via_trace(b: WeightedAdjMatrix, unit_b: WeightedAdjMatrix | None = None) -> BivarPoly:
    """trace(Ā·A) / 2."""
    if unit_b is None:
        unit_b = unit_matrix(b)
    t = trace(matmul(b, unit_b))
    try:
        return t.exact_div(2)
    except ArithmeticError as exc:
        raise OracleMismatch(f"trace(ĀA) = {render_poly(t)} is not even") from exc


def cwr3_via_trace(b: WeightedAdjMatrix) -> BivarPoly:
    """trace(Ā³) / 6."""
    t = trace(matmul(matmul(b, b), b))
    try:
        return t.exact_div(6)
    except ArithmeticError as exc:
        raise OracleMismatch(f"trace(Ā³) = {render_poly(t)} is not divisible by 6") from exc


def oracle_pairs(d: PlanarDiagram) -> tuple[tuple[BivarPoly, BivarPoly], tuple[BivarPoly, BivarPoly]]:
    """((CB_2, CW_2), (CB_3, CW_3)) by the trace formulas."""
    if not d.crossings:
        return (ZERO, ZERO), (ZERO, ZERO)
    black, white = (from_graph(g) for g in tait_graphs(d))
    return (cwr2_via_trace(black), cwr2_via_trace(white)), (cwr3_via_trace(black), cwr3_via_trace(white))


def check_against(d: PlanarDiagram, value: CwrValue) -> None:
    """Raise OracleMismatch unless ``value`` agrees with the trace formulas at i = 2, 3."""
    two, three = oracle_pairs(d)
    for i, expected in ((2, two), (3, three)):
        if tuple(value[i]) != expected:
            got = tuple(render_poly(p) for p in value[i])
            want = tuple(render_poly(p) for p in expected)
            raise OracleMismatch(f"CWR_{i}: cycles give {got}, traces give {want}")
