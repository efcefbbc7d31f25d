"""Oriented link diagrams given as PD codes.

A crossing is a 4-tuple of edge labels listed counterclockwise, starting at
the incoming under-strand.  Slots 0 and 2 therefore carry the under-strand
(0 in, 2 out) and slots 1 and 3 the over-strand.

Corner ``k`` of a crossing is the angular sector between slot ``k`` and slot
``k + 1``.  Rotating the over-strand counterclockwise sweeps corners 1 and 3
(the "A" corners of the crossing); corners 0 and 2 are the "B" corners.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "DiagramError",
    "PlanarDiagram",
    "Face",
    "parse_pd",
    "format_pd",
    "check_alternating",
    "check_reduced",
    "compute_faces",
    "crossing_signs",
    "mirror",
    "connected_sum",
    "insert_twists",
    "smooth",
    "canonical_key",
    "UNKNOT",
]

Pos = tuple[int, int]  # (crossing index, slot)

# Which corner parity is shaded.  Fixed by requiring the positive trefoil to
# have a triangle as its black graph, i.e. the black regions are the A regions.
BLACK_CORNER_PARITY = 1


class DiagramError(ValueError):
    """Structural problem with a PD code or a diagram construction."""


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple[tuple[int, int], ...]  # (crossing, corner) incidences, in walk order
    color: str  # "black" | "white"


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    n_components: int = field(default=0)

    def __post_init__(self):
        xs = tuple(tuple(int(v) for v in x) for x in self.crossings)
        for x in xs:
            if len(x) != 4:
                raise DiagramError(f"crossing {x} does not have 4 edge labels")
        object.__setattr__(self, "crossings", xs)
        if not xs:
            n = self.n_components or 1
            if n != 1:
                raise DiagramError("a crossingless diagram with several components is split")
            object.__setattr__(self, "n_components", 1)
            return
        tails, heads, comps = _analyze(xs)
        if self.n_components and self.n_components != len(comps):
            raise DiagramError(
                f"declared {self.n_components} components but strands close into {len(comps)}"
            )
        object.__setattr__(self, "n_components", len(comps))
        _check_connected(xs)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @cached_property
    def _orientation(self):
        if not self.crossings:
            return {}, {}, []
        return _analyze(self.crossings)

    @property
    def edge_orientations(self) -> dict[int, tuple[Pos, Pos]]:
        """label -> (tail position, head position)."""
        tails, heads, _ = self._orientation
        return {lab: (tails[lab], heads[lab]) for lab in sorted(tails)}

    @property
    def components(self) -> list[list[int]]:
        """Edge labels of each component, in traversal order."""
        return [list(c) for c in self._orientation[2]]

    @property
    def labels(self) -> list[int]:
        return sorted({v for x in self.crossings for v in x})

    def __str__(self) -> str:
        return format_pd(self)


UNKNOT = PlanarDiagram(())


# ---------------------------------------------------------------- analysis

def _ends(xs) -> dict[int, list[Pos]]:
    ends: dict[int, list[Pos]] = {}
    for ci, x in enumerate(xs):
        for s, lab in enumerate(x):
            ends.setdefault(lab, []).append((ci, s))
    bad = {lab: len(p) for lab, p in ends.items() if len(p) != 2}
    if bad:
        lab, n = min(bad.items())
        raise DiagramError(f"edge label {lab} appears {n} time(s); every label must appear exactly twice")
    return ends


def _other(ends, lab, pos):
    a, b = ends[lab]
    return b if a == pos else a


def _analyze(xs):
    """Orient every edge and split edges into components.

    Under-strands fix orientation directly (slot 0 is a head, slot 2 a tail);
    over-strands inherit it by following the strand through crossings.  Only a
    component that never passes under falls back to the label numbering.
    """
    ends = _ends(xs)
    head: dict[int, Pos] = {}
    tail: dict[int, Pos] = {}
    queue: deque = deque()

    def set_head(lab, pos):
        if lab in head:
            if head[lab] != pos:
                raise DiagramError(f"edge {lab} is oriented inconsistently (two incoming ends)")
            return
        if pos not in ends[lab]:
            raise DiagramError(f"edge {lab} has no end at {pos}")
        head[lab] = pos
        other = _other(ends, lab, pos)
        if other == pos:
            raise DiagramError(f"edge {lab} starts and ends in the same slot")
        set_tail(lab, other)
        queue.append(lab)

    def set_tail(lab, pos):
        if lab in tail:
            if tail[lab] != pos:
                raise DiagramError(f"edge {lab} is oriented inconsistently (two outgoing ends)")
            return
        tail[lab] = pos
        if lab not in head:
            set_head(lab, _other(ends, lab, pos))
        queue.append(lab)

    for ci, x in enumerate(xs):
        set_head(x[0], (ci, 0))
        set_tail(x[2], (ci, 2))

    def propagate():
        while queue:
            lab = queue.popleft()
            ci, s = head[lab]
            nxt = xs[ci][(s + 2) % 4]
            set_tail(nxt, (ci, (s + 2) % 4))
            ci, s = tail[lab]
            prv = xs[ci][(s + 2) % 4]
            set_head(prv, (ci, (s + 2) % 4))

    propagate()
    for ci, x in enumerate(xs):
        b, d = x[1], x[3]
        if b in head or d in head:
            continue
        # over-only component: labels run consecutively along the orientation
        if d == b + 1:
            set_head(b, (ci, 1))
        elif b == d + 1:
            set_head(d, (ci, 3))
        elif b > d:
            set_head(b, (ci, 1))
        else:
            set_head(d, (ci, 3))
        propagate()

    succ = {}
    for lab, (ci, s) in head.items():
        nxt = xs[ci][(s + 2) % 4]
        if tail[nxt] != (ci, (s + 2) % 4):
            raise DiagramError(f"strand through edge {lab} does not continue consistently")
        succ[lab] = nxt
    comps = []
    seen = set()
    for lab in sorted(succ):
        if lab in seen:
            continue
        comp = []
        cur = lab
        while cur not in seen:
            seen.add(cur)
            comp.append(cur)
            cur = succ[cur]
        if cur != lab:
            raise DiagramError(f"strand starting at edge {lab} does not close up")
        comps.append(tuple(comp))
    return tail, head, comps


def _check_connected(xs):
    parent = list(range(len(xs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for lab, ((c1, _), (c2, _)) in _ends(xs).items():
        parent[find(c1)] = find(c2)
    roots = {find(i) for i in range(len(xs))}
    if len(roots) > 1:
        raise DiagramError(f"diagram is split: projection has {len(roots)} connected pieces")


# ------------------------------------------------------------------ text I/O

_PD_RE = re.compile(r"^\s*(?:PD\s*)?\[(?P<body>.*)\]\s*(?::\s*(?P<ncomp>\d+))?\s*$", re.S)
_X_RE = re.compile(r"(?:X\s*)?[\(\[]\s*([^()\[\]]*?)\s*[\)\]]")


def parse_pd(text: str) -> PlanarDiagram:
    """Parse ``PD[X(a,b,c,d), ...]`` (optionally suffixed ``:n`` for the component count).

    Nested-list input such as ``[[1,5,2,4],[3,1,4,6],[5,3,6,2]]`` is accepted too.
    """
    m = _PD_RE.match(text)
    if not m:
        raise DiagramError(f"not a PD code: {text!r}")
    body = m.group("body").strip()
    crossings = []
    pos = 0
    while pos < len(body):
        chunk = body[pos:]
        stripped = chunk.lstrip(" ,\n\t")
        if not stripped:
            break
        pos += len(chunk) - len(stripped)
        xm = _X_RE.match(body, pos)
        if not xm:
            raise DiagramError(f"malformed crossing near {body[pos:pos + 20]!r}")
        try:
            labels = [int(v) for v in xm.group(1).split(",")]
        except ValueError:
            raise DiagramError(f"non-integer edge label in {xm.group(0)!r}") from None
        if len(labels) != 4 or any(v <= 0 for v in labels):
            raise DiagramError(f"crossing {xm.group(0)!r} needs 4 positive labels")
        crossings.append(tuple(labels))
        pos = xm.end()
    ncomp = int(m.group("ncomp")) if m.group("ncomp") else 0
    return PlanarDiagram(tuple(crossings), ncomp)


def format_pd(d: PlanarDiagram) -> str:
    body = ", ".join("X({},{},{},{})".format(*x) for x in d.crossings)
    suffix = f":{d.n_components}" if d.n_components > 1 else ""
    return f"PD[{body}]{suffix}"


# ------------------------------------------------------------------- checks

def check_alternating(d: PlanarDiagram) -> bool:
    """Every edge joins an under-slot to an over-slot."""
    if not d.crossings:
        return True
    for (_, s1), (_, s2) in _ends(d.crossings).values():
        if s1 % 2 == s2 % 2:
            return False
    return True


def _walk_faces(d: PlanarDiagram) -> list[list[tuple[int, int]]]:
    """Orbits of the face permutation; each face is its list of (crossing, corner)."""
    xs = d.crossings
    ends = _ends(xs)
    seen = set()
    faces = []
    for ci in range(len(xs)):
        for k in range(4):
            if (ci, k) in seen:
                continue
            walk = []
            # corner (c, k) lies between slots k and k + 1; step out through slot k + 1
            c, corner = ci, k
            while (c, corner) not in seen:
                seen.add((c, corner))
                walk.append((c, corner))
                s = (corner + 1) % 4
                cj, sj = _other(ends, xs[c][s], (c, s))
                # arriving through slot sj, the same face continues in corner sj
                c, corner = cj, sj
            if (c, corner) != walk[0]:
                raise DiagramError("face traversal did not close: rotation data corrupted")
            faces.append(walk)
    return faces


def compute_faces(d: PlanarDiagram) -> list[Face]:
    if not d.crossings:
        return [Face(0, (), "black"), Face(1, (), "white")]
    walks = _walk_faces(d)
    n = len(d.crossings)
    if len(walks) != n + 2:
        raise DiagramError(f"{len(walks)} faces for {n} crossings: diagram is not planar")
    face_of = {cc: i for i, w in enumerate(walks) for cc in w}
    # two faces meet along each slot: corners k - 1 and k
    adj: dict[int, set[int]] = {i: set() for i in range(len(walks))}
    for ci in range(n):
        for s in range(4):
            a, b = face_of[(ci, (s - 1) % 4)], face_of[(ci, s)]
            if a == b:
                raise DiagramError(f"edge at crossing {ci} slot {s} has the same face on both sides")
            adj[a].add(b)
            adj[b].add(a)
    color = {face_of[(0, BLACK_CORNER_PARITY)]: 0}
    queue = deque(color)
    while queue:
        f = queue.popleft()
        for g in adj[f]:
            if g not in color:
                color[g] = 1 - color[f]
                queue.append(g)
            elif color[g] == color[f]:
                raise DiagramError("faces do not admit a checkerboard coloring")
    return [Face(i, tuple(w), "black" if color[i] == 0 else "white") for i, w in enumerate(walks)]


def check_reduced(d: PlanarDiagram) -> bool:
    """No crossing sees the same face at two opposite corners."""
    if not d.crossings:
        return True
    face_of = {cc: f.id for f in compute_faces(d) for cc in f.boundary}
    for ci in range(len(d.crossings)):
        if face_of[(ci, 0)] == face_of[(ci, 2)] or face_of[(ci, 1)] == face_of[(ci, 3)]:
            return False
    return True


def crossing_signs(d: PlanarDiagram) -> tuple[int, ...]:
    """+1 / -1 per crossing, right-handed crossings positive.

    The over-strand running from slot 3 to slot 1 (entering at slot 3) makes
    a positive crossing.
    """
    if not d.crossings:
        return ()
    _, heads, _ = d._orientation
    return tuple(1 if heads[x[3]] == (ci, 3) else -1 for ci, x in enumerate(d.crossings))


# ------------------------------------------------------------ constructions

def _renumber(xs: Sequence[Sequence[int]], keep: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Relabel edges 1..2n consecutively along each oriented component.

    Components are ordered by their smallest old label.  When ``keep`` is
    given and fits in its component's range, that label is preserved.
    """
    xs = tuple(tuple(x) for x in xs)
    if not xs:
        return xs
    _, _, comps = _analyze(xs)
    comps = sorted(comps, key=min)
    mapping = {}
    offset = 0
    for comp in comps:
        m = len(comp)
        start = comp.index(min(comp))
        if keep is not None and keep in comp and offset < keep <= offset + m:
            start = (comp.index(keep) - (keep - offset - 1)) % m
        for i in range(m):
            mapping[comp[(start + i) % m]] = offset + i + 1
        offset += m
    return tuple(tuple(mapping[v] for v in x) for x in xs)


def canonical_key(d: PlanarDiagram) -> tuple:
    """Relabeling-invariant key: equal keys iff the PD codes agree up to relabeling."""
    if not d.crossings:
        return (d.n_components,)
    _, heads, comps = d._orientation
    best = None
    for order in itertools.permutations(range(len(comps))):
        for starts in itertools.product(*(range(len(comps[i])) for i in order)):
            mapping = {}
            nxt = 1
            for ci, st in zip(order, starts):
                comp = comps[ci]
                for i in range(len(comp)):
                    mapping[comp[(st + i) % len(comp)]] = nxt
                    nxt += 1
            key = tuple(sorted(tuple(mapping[v] for v in x) for x in d.crossings))
            if best is None or key < best:
                best = key
    return best


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    """Switch every crossing; labels and orientation are kept."""
    if not d.crossings:
        return d
    _, heads, _ = d._orientation
    out = []
    for ci, (a, b, c, e) in enumerate(d.crossings):
        if heads[b] == (ci, 1):
            out.append((b, c, e, a))
        else:
            out.append((e, a, b, c))
    return PlanarDiagram(tuple(out), d.n_components)


def connected_sum(d1: PlanarDiagram, d2: PlanarDiagram) -> PlanarDiagram:
    """Splice the lowest-labelled edge of ``d1`` into ``d2``, keeping alternation.

    In ``d2`` the lowest-labelled edge leaving a slot of the same parity as
    the ``d1`` edge is cut, so the two new edges still join an over-slot to an
    under-slot.
    """
    if not d1.crossings:
        return d2
    if not d2.crossings:
        return d1
    if not (check_alternating(d1) and check_alternating(d2)):
        raise DiagramError("connected_sum expects alternating diagrams")
    shift = max(d1.labels)
    xs2 = [tuple(v + shift for v in x) for x in d2.crossings]
    tails1, heads1, _ = d1._orientation
    tails2 = {lab + shift: (ci, s) for lab, (ci, s) in d2._orientation[0].items()}
    heads2 = {lab + shift: (ci, s) for lab, (ci, s) in d2._orientation[1].items()}

    e1 = min(tails1)
    parity = tails1[e1][1] % 2
    cands = [lab for lab in sorted(tails2) if tails2[lab][1] % 2 == parity]
    if not cands:
        raise DiagramError("no splice site in the second diagram preserves alternation")
    e2 = cands[0]

    xs1 = [list(x) for x in d1.crossings]
    xs2 = [list(x) for x in xs2]
    hc, hs = heads1[e1]
    xs1[hc][hs] = e2
    hc, hs = heads2[e2]
    xs2[hc][hs] = e1
    merged = _renumber(xs1 + xs2)
    return PlanarDiagram(merged, d1.n_components + d2.n_components - 1)


_ANGLES = (45, 135, 225, 315)


def insert_twists(d: PlanarDiagram, site: int, k: int, sign: int | str) -> PlanarDiagram:
    """Lengthen a twist region by ``k`` crossings.

    ``site`` is an edge label; the crossing it enters is extended into a
    twist region by twisting the arm carrying ``site`` with its
    counterclockwise neighbour.  The new bigons therefore take the colour
    of the corner between those two arms.  ``k`` must be even (an odd count
    breaks alternation) and ``sign`` must match the sign of the extended
    crossing.  The edge label ``site`` is preserved, so repeated calls keep
    extending the same region.
    """
    sgn = _sign_value(sign)
    if k < 0:
        raise ValueError("twist count must be non-negative")
    if k == 0:
        return d
    if k % 2:
        raise DiagramError(f"inserting {k} (odd) crossings breaks alternation")
    if not d.crossings:
        raise DiagramError("no crossing to extend in a crossingless diagram")
    tails, heads, _ = d._orientation
    if site not in heads:
        raise DiagramError(f"edge {site} is not in the diagram")
    ci, s = heads[site]
    if crossing_signs(d)[ci] != sgn:
        raise DiagramError(f"crossing entered by edge {site} has the opposite sign; twists would cancel")
    x = d.crossings[ci]
    s1 = (s + 1) % 4
    if x[s] == x[s1]:
        raise DiagramError(f"arms at edge {site} form a loop; site is nugatory")

    ends = _ends(d.crossings)
    far_s = _other(ends, x[s], (ci, s))
    far_s1 = _other(ends, x[s1], (ci, s1))
    # arm s at 45 deg, s+1 at 135 deg; chain grows upward
    a_up = tails[x[s]] == (ci, s)  # strand A leaves c through slot s
    b_up = tails[x[s1]] == (ci, s1)
    a_under = s % 2 == 0  # type of strand A at c

    nxt = max(d.labels) + 1
    new_s, new_s1 = nxt, nxt + 1
    nxt += 2
    # internal edges: between c and y1 keep the original labels
    right = [x[s]]   # right[j]: edge below y_{j+1} on the right side
    left = [x[s1]]
    for _ in range(k - 1):
        right.append(nxt)
        left.append(nxt + 1)
        nxt += 2
    right.append(new_s)
    left.append(new_s1)

    xs = [list(c) for c in d.crossings]
    fc, fs = far_s
    xs[fc][fs] = new_s
    fc, fs = far_s1
    xs[fc][fs] = new_s1

    for j in range(1, k + 1):
        # arms 315/135 carry one strand (type opposite to A at c), 225/45 the other
        diag_up = a_up if j % 2 else b_up  # strand on 315/135 flows upward
        anti_up = b_up if j % 2 else a_up
        arms = {
            315: right[j - 1],
            225: left[j - 1],
            45: right[j],
            135: left[j],
        }
        if a_under:  # A under at c, so 315/135 strand is over at y_j
            under_in = 225 if anti_up else 45
        else:
            under_in = 315 if diag_up else 135
        start = _ANGLES.index(under_in)
        xs.append([arms[_ANGLES[(start + i) % 4]] for i in range(4)])

    new = PlanarDiagram(_renumber(xs, keep=site), d.n_components)
    if not check_alternating(new):
        raise DiagramError("twist insertion broke alternation")
    if any(v != sgn for v in crossing_signs(new)[len(d.crossings):]):
        raise DiagramError("inserted crossings do not carry the requested sign")
    return new


def smooth(d: PlanarDiagram, ci: int) -> PlanarDiagram:
    """Oriented (Seifert) smoothing of crossing ``ci``."""
    xs = d.crossings
    if not 0 <= ci < len(xs):
        raise DiagramError(f"no crossing {ci}")
    _, heads, _ = d._orientation
    x = xs[ci]
    over_in = 1 if heads[x[1]] == (ci, 1) else 3
    over_out = 4 - over_in
    joins = {0: over_out, over_out: 0, over_in: 2, 2: over_in}
    ends = _ends(xs)

    keep = [c for c in range(len(xs)) if c != ci]
    index = {c: i for i, c in enumerate(keep)}
    out = [list(xs[c]) for c in keep]
    visited = set()
    label = 1
    for c in keep:
        for s in range(4):
            if (c, s) in visited:
                continue
            visited.add((c, s))
            pos = _other(ends, xs[c][s], (c, s))
            while pos[0] == ci:
                visited.add(pos)
                jump = (ci, joins[pos[1]])
                visited.add(jump)
                pos = _other(ends, x[jump[1]], jump)
            visited.add(pos)
            out[index[c]][s] = label
            out[index[pos[0]]][pos[1]] = label
            label += 1
    if len(visited) != 4 * len(xs):
        raise DiagramError("smoothing leaves a crossingless circle (split diagram)")
    if not out:
        raise DiagramError("smoothing a one-crossing diagram leaves no crossings")
    return PlanarDiagram(_renumber(out))


def _sign_value(sign) -> int:
    if sign in (1, "+", "positive", "pos"):
        return 1
    if sign in (-1, "-", "negative", "neg"):
        return -1
    raise ValueError(f"unknown sign {sign!r}")
