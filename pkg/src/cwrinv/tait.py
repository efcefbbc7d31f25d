"""Checkerboard (Tait) graphs of a diagram and their consolidation."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import (
    DiagramError,
    PlanarDiagram,
    check_alternating,
    check_reduced,
    compute_faces,
    crossing_signs,
)
from .poly import ONE, BivarPoly, R, W, render_poly

__all__ = [
    "TaitMultigraph",
    "ConsolidatedGraph",
    "build_tait",
    "consolidate",
    "tait_graphs",
    "export_graph",
]


@dataclass(frozen=True)
class TaitMultigraph:
    color: str
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, BivarPoly], ...]  # one per crossing, in crossing order


@dataclass(frozen=True)
class ConsolidatedGraph:
    color: str
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, BivarPoly], ...]  # u < v, sorted by (u, v)

    def weight(self, u: int, v: int) -> BivarPoly | None:
        a, b = (u, v) if u < v else (v, u)
        for x, y, wt in self.edges:
            if (x, y) == (a, b):
                return wt
        return None

    def adjacency(self) -> dict[int, dict[int, BivarPoly]]:
        adj: dict[int, dict[int, BivarPoly]] = {v: {} for v in self.vertices}
        for u, v, wt in self.edges:
            adj[u][v] = wt
            adj[v][u] = wt
        return adj


def build_tait(d: PlanarDiagram, *, check: bool = True) -> tuple[TaitMultigraph, TaitMultigraph]:
    """Black and white Tait multigraphs, weights w (positive) / r (negative).

    With ``check`` the diagram must be alternating and reduced; a loop in
    either graph is always an error since it marks a nugatory crossing.
    """
    if check:
        if not check_alternating(d):
            raise DiagramError("Tait graphs need an alternating diagram (check_alternating failed)")
        if not check_reduced(d):
            raise DiagramError("Tait graphs need a reduced diagram (check_reduced failed: nugatory crossing)")
    faces = compute_faces(d)
    face_of = {cc: f for f in faces for cc in f.boundary}
    signs = crossing_signs(d)
    by_color: dict[str, list] = {"black": [], "white": []}
    for ci in range(d.n_crossings):
        wt = W if signs[ci] > 0 else R
        for k in (0, 1):
            f, g = face_of[(ci, k)], face_of[(ci, k + 2)]
            if f.color != g.color:
                raise DiagramError(f"opposite corners of crossing {ci} have different colours")
            if f.id == g.id:
                raise DiagramError(f"crossing {ci} is nugatory: face {f.id} meets itself (loop in Tait graph)")
            by_color[f.color].append((min(f.id, g.id), max(f.id, g.id), wt))
    out = []
    for color in ("black", "white"):
        verts = tuple(f.id for f in faces if f.color == color)
        out.append(TaitMultigraph(color, verts, tuple(by_color[color])))
    return out[0], out[1]


def consolidate(g: TaitMultigraph) -> ConsolidatedGraph:
    merged: dict[tuple[int, int], BivarPoly] = {}
    for u, v, wt in g.edges:
        if u == v:
            raise DiagramError(f"loop at vertex {u}: multigraph comes from a non-reduced diagram")
        key = (min(u, v), max(u, v))
        merged[key] = merged.get(key, ONE) * wt
    return ConsolidatedGraph(g.color, g.vertices, tuple((u, v, merged[(u, v)]) for u, v in sorted(merged)))


def tait_graphs(d: PlanarDiagram, *, check: bool = True) -> tuple[ConsolidatedGraph, ConsolidatedGraph]:
    """Consolidated black and white graphs (G_B*, G_W*)."""
    black, white = build_tait(d, check=check)
    return consolidate(black), consolidate(white)


def export_graph(g: ConsolidatedGraph | TaitMultigraph) -> str:
    """Plain-text dump: a ``vertices`` line then one ``u v weight`` line per edge."""
    lines = [f"# {g.color} graph", "vertices " + " ".join(str(v) for v in g.vertices)]
    lines += [f"{u} {v} {render_poly(wt)}" for u, v, wt in g.edges]
    return "\n".join(lines) + "\n"
