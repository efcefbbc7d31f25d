"""The CWR invariant: cycle polynomials of the consolidated Tait graphs."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .diagram import PlanarDiagram
from .poly import (
    ONE,
    ZERO,
    BivarPoly,
    parse_poly,
    partial_eval_deriv,
    render_poly,
    substitute_squares,
    swap_vars,
)
from .tait import ConsolidatedGraph, tait_graphs

__all__ = [
    "CwrValue",
    "CwrConsistencyError",
    "enumerate_cycles",
    "iter_cycles",
    "cycle_sums",
    "cb_cw",
    "compute_cwr",
    "derive_wrp",
    "crossing_number",
    "writhe",
    "mirror_value",
    "cwr_equal",
    "parse_cwr",
    "render_cwr",
]


class CwrConsistencyError(ArithmeticError):
    """The black and white graphs disagree on a quantity both must determine."""


Pair = tuple[BivarPoly, BivarPoly]


@dataclass(frozen=True)
class CwrValue:
    """``pairs[0]`` is (CB_2, CW_2), ``pairs[1]`` is (CB_3, CW_3), and so on.

    Trailing (0, 0) pairs beyond index 2 are dropped on construction, so
    ordinary equality already treats values as zero-padded.
    """

    pairs: tuple[Pair, ...]

    def __post_init__(self):
        pairs = [tuple(p) for p in self.pairs] or [(ZERO, ZERO)]
        while len(pairs) > 1 and not pairs[-1][0] and not pairs[-1][1]:
            pairs.pop()
        object.__setattr__(self, "pairs", tuple(pairs))

    def __getitem__(self, i: int) -> Pair:
        """Pair at cycle length ``i`` (i >= 2); (0, 0) past the stored end."""
        if i < 2:
            raise IndexError("CWR is indexed from 2")
        if i - 2 < len(self.pairs):
            return self.pairs[i - 2]
        return (ZERO, ZERO)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def max_index(self) -> int:
        return len(self.pairs) + 1

    def __add__(self, other: "CwrValue") -> "CwrValue":
        n = max(len(self), len(other))
        return CwrValue(tuple(
            (self[i][0] + other[i][0], self[i][1] + other[i][1]) for i in range(2, n + 2)
        ))

    def __str__(self) -> str:
        return render_cwr(self)


# ------------------------------------------------------------------ cycles

def iter_cycles(g: ConsolidatedGraph, max_length: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every simple cycle (length >= 3) once, as a vertex sequence.

    A cycle is reported from its smallest vertex ``s``, only through vertices
    larger than ``s``, and only in the direction whose second vertex is
    smaller than its last one.
    """
    adj = {v: sorted(nb) for v, nb in g.adjacency().items()}
    limit = len(g.vertices) if max_length is None else min(max_length, len(g.vertices))
    for s in sorted(adj):
        path = [s]
        on_path = {s}

        def extend(v):
            for u in adj[v]:
                if u == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        yield tuple(path)
                elif u > s and u not in on_path and len(path) < limit:
                    path.append(u)
                    on_path.add(u)
                    yield from extend(u)
                    path.pop()
                    on_path.discard(u)

        yield from extend(s)


def _cycle_edges(cyc: Sequence[int]) -> frozenset[tuple[int, int]]:
    n = len(cyc)
    return frozenset((min(cyc[i], cyc[(i + 1) % n]), max(cyc[i], cyc[(i + 1) % n])) for i in range(n))


def enumerate_cycles(g: ConsolidatedGraph, length: int) -> list[frozenset[tuple[int, int]]]:
    """All simple cycles with exactly ``length`` edges, each as its edge set."""
    if length < 3:
        raise ValueError("cycles have length >= 3")
    return [_cycle_edges(c) for c in iter_cycles(g, length) if len(c) == length]


def _cycle_weight(adj, cyc) -> BivarPoly:
    out = ONE
    n = len(cyc)
    for i in range(n):
        out = out * adj[cyc[i]][cyc[(i + 1) % n]]
    return out


def cycle_sums(g: ConsolidatedGraph) -> dict[int, BivarPoly]:
    """{i: CB_i or CW_i} for every i with a nonzero value (one DFS for all lengths)."""
    adj = g.adjacency()
    sums: dict[int, BivarPoly] = {}
    edge_sum = sum((wt for _, _, wt in g.edges), ZERO)
    if edge_sum:
        sums[2] = edge_sum
    for cyc in iter_cycles(g):
        n = len(cyc)
        sums[n] = sums.get(n, ZERO) + _cycle_weight(adj, cyc)
    return {i: p for i, p in sums.items() if p}


def cb_cw(g: ConsolidatedGraph, i: int) -> BivarPoly:
    if i < 2:
        raise ValueError("index starts at 2")
    if i == 2:
        return sum((wt for _, _, wt in g.edges), ZERO)
    adj = g.adjacency()
    return sum((_cycle_weight(adj, c) for c in iter_cycles(g, i) if len(c) == i), ZERO)


def _from_graphs(black: ConsolidatedGraph, white: ConsolidatedGraph) -> CwrValue:
    sb, sw = cycle_sums(black), cycle_sums(white)
    top = max([2, *sb, *sw])
    return CwrValue(tuple((sb.get(i, ZERO), sw.get(i, ZERO)) for i in range(2, top + 1)))


def compute_cwr(d: PlanarDiagram) -> CwrValue:
    """CWR of a reduced, alternating, non-split diagram."""
    if not d.crossings:
        return CwrValue(((ZERO, ZERO),))
    black, white = tait_graphs(d)
    return _from_graphs(black, white)


# ----------------------------------------------------------- derived values

def derive_wrp(v: CwrValue) -> tuple[BivarPoly, BivarPoly]:
    """WRP as an unordered pair, returned with the smaller rendering first."""
    cb2, cw2 = v[2]
    a, b = substitute_squares(cb2), substitute_squares(cw2)
    for cb, cw in v.pairs[1:]:
        a = a + 2 * cb
        b = b + 2 * cw
    return tuple(sorted((a, b), key=lambda p: (render_poly(p), sorted(p.terms.items()))))


def _counts(p: BivarPoly) -> tuple[int, int]:
    for (a, b) in p.terms:
        if a and b:
            raise ValueError(f"{render_poly(p)} has a mixed term; not a reduced alternating CB2/CW2")
    return partial_eval_deriv(p, "w"), partial_eval_deriv(p, "r")


def _cr_wr(v: CwrValue) -> tuple[int, int]:
    cb2, cw2 = v[2]
    bw, br = _counts(cb2)
    ww, wr = _counts(cw2)
    if (bw, br) != (ww, wr):
        raise CwrConsistencyError(
            f"black graph counts {bw}+/{br}- but white graph counts {ww}+/{wr}-"
        )
    return bw + br, bw - br


def crossing_number(v: CwrValue) -> int:
    return _cr_wr(v)[0]


def writhe(v: CwrValue) -> int:
    return _cr_wr(v)[1]


def mirror_value(v: CwrValue) -> CwrValue:
    return CwrValue(tuple((swap_vars(cw), swap_vars(cb)) for cb, cw in v.pairs))


def cwr_equal(a: CwrValue, b: CwrValue) -> bool:
    return a == b


# --------------------------------------------------------------------- text

def render_cwr(v: CwrValue) -> str:
    return "(" + ", ".join(f"({render_poly(cb)}, {render_poly(cw)})" for cb, cw in v.pairs) + ")"


_PAIR_RE = re.compile(r"\(([^()]*)\)")


def parse_cwr(text: str) -> CwrValue:
    """Parse ``((cb2, cw2), (cb3, cw3), ...)``; TeX line breaks and ``$`` are ignored."""
    cleaned = text.replace("\\\\", " ").replace("$", "").strip()
    if not (cleaned.startswith("(") and cleaned.endswith(")")):
        raise ValueError(f"CWR text must be a parenthesised tuple: {text!r}")
    inner = cleaned[1:-1]
    pairs = []
    pos = 0
    for m in _PAIR_RE.finditer(inner):
        gap = inner[pos:m.start()].strip()
        if gap not in ("", ","):
            raise ValueError(f"unexpected text {gap!r} in CWR value {text!r}")
        parts = m.group(1).split(",")
        if len(parts) != 2:
            raise ValueError(f"CWR pair {m.group(0)!r} must have two entries")
        pairs.append((parse_poly(parts[0]), parse_poly(parts[1])))
        pos = m.end()
    if inner[pos:].strip() not in ("", ","):
        raise ValueError(f"trailing text {inner[pos:]!r} in CWR value {text!r}")
    if not pairs:
        raise ValueError(f"empty CWR value {text!r}")
    return CwrValue(tuple(pairs))
