"""Twist-region families and the recursive relations between their CWR values.

A family is built around one crossing ``c`` of a base diagram:

* member 0 is the oriented smoothing of ``c``;
* member 1 is the base itself;
* member ``2n+1`` extends ``c`` to a twist region of ``2n+1`` crossings.

In the Tait graph of the colour opposite to the twist's bigons the region
consolidates into one edge of weight ``v**(2n+1)`` (``v`` = w or r), which
gives, for every cycle length k,

    C_k(member 2n+1) = v**(2n) * C_k(member 1) + (1 - v**(2n)) * C_k(member 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cwr import CwrValue, compute_cwr
from .diagram import (
    DiagramError,
    PlanarDiagram,
    _sign_value,
    check_alternating,
    check_reduced,
    compute_faces,
    crossing_signs,
    insert_twists,
    smooth,
)
from .poly import ONE, BivarPoly, R, W, render_poly
from .tait import tait_graphs

__all__ = [
    "TwistFamily",
    "RelationCheck",
    "SkeinReport",
    "build_family",
    "verify_relations",
    "verify_chain",
]


@dataclass(frozen=True)
class TwistFamily:
    base: PlanarDiagram
    site: int
    sign: int
    crossing: int  # index of the extended crossing in ``base``
    consolidating_color: str  # graph in which the twist region becomes one edge
    members: dict[int, PlanarDiagram] = field(hash=False)  # twist count -> diagram

    @property
    def n_max(self) -> int:
        return (max(self.members) - 1) // 2

    @property
    def variable(self) -> BivarPoly:
        return W if self.sign > 0 else R

    @property
    def relation(self) -> str:
        if self.consolidating_color == "black" and self.sign < 0:
            return "Wtr"
        if self.consolidating_color == "white" and self.sign > 0:
            return "Btw"
        return "other"


@dataclass(frozen=True)
class RelationCheck:
    n: int
    k: int
    color: str
    lhs: BivarPoly
    rhs: BivarPoly

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class SkeinReport:
    family: TwistFamily
    checks: list[RelationCheck]
    single_edge: dict[int, bool]  # n -> twist region consolidated to v**(2n+1)
    other_color_holds: bool  # whether the relation also happens to hold in the other graph

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks) and all(self.single_edge.values())

    def table(self) -> str:
        f = self.family
        head = (
            f"family: site edge {f.site}, sign {'+' if f.sign > 0 else '-'}, "
            f"relation {f.relation} (consolidates in {f.consolidating_color} graph)"
        )
        rows = [head, f"{'n':>3} {'k':>3}  {'result':6}  lhs", "-" * 60]
        for c in self.checks:
            rows.append(f"{c.n:>3} {c.k:>3}  {'PASS' if c.ok else 'FAIL':6}  {render_poly(c.lhs)}")
            if not c.ok:
                rows.append(f"{'':>9}  expected {render_poly(c.rhs)}")
        for n, good in sorted(self.single_edge.items()):
            rows.append(f"single consolidated edge v^{2 * n + 1} at n={n}: {'PASS' if good else 'FAIL'}")
        rows.append(f"overall: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(rows)


def _validate(d: PlanarDiagram, k: int) -> None:
    if not check_alternating(d):
        raise DiagramError(f"family member with {k} twist crossings is not alternating")
    if not check_reduced(d):
        raise DiagramError(f"family member with {k} twist crossings is not reduced")


def build_family(base: PlanarDiagram, site: int, sign, n_max: int) -> TwistFamily:
    """Family around the crossing entered by edge ``site`` of ``base``."""
    sgn = _sign_value(sign)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    heads = {lab: h for lab, (_, h) in base.edge_orientations.items()}
    if site not in heads:
        raise DiagramError(f"edge {site} is not in the base diagram")
    ci, s = heads[site]
    if crossing_signs(base)[ci] != sgn:
        raise DiagramError(f"crossing at edge {site} is not {'positive' if sgn > 0 else 'negative'}")
    faces = compute_faces(base)
    face_of = {cc: f for f in faces for cc in f.boundary}
    corner_color = face_of[(ci, s)].color
    # the base must hold exactly one crossing of the twist region: no other crossing
    # joins the same two side faces
    sides = {face_of[(ci, (s + 1) % 4)].id, face_of[(ci, (s + 3) % 4)].id}
    for cj in range(base.n_crossings):
        if cj == ci:
            continue
        for k in (0, 1):
            if {face_of[(cj, k)].id, face_of[(cj, k + 2)].id} == sides:
                raise DiagramError(
                    f"crossing at edge {site} already sits in a longer twist region (parallel to crossing {cj})"
                )
    members: dict[int, PlanarDiagram] = {}
    try:
        members[0] = smooth(base, ci)
    except DiagramError as exc:
        raise DiagramError(f"member k=0 (smoothing) invalid: {exc}") from exc
    members[1] = base
    for n in range(1, n_max + 1):
        try:
            members[2 * n + 1] = insert_twists(base, site, 2 * n, sgn)
        except DiagramError as exc:
            raise DiagramError(f"member k={2 * n + 1} invalid: {exc}") from exc
    for k, d in members.items():
        try:
            _validate(d, k)
        except DiagramError as exc:
            raise DiagramError(f"member k={k}: {exc}") from exc
    # bigons take the corner colour; the parallel edges live in the other graph
    color = "white" if corner_color == "black" else "black"
    fam = TwistFamily(base, site, sgn, ci, color, members)
    if fam.relation == "other":
        # the oriented smoothing contracts the twist edge here instead of deleting it
        raise DiagramError(
            f"twist at edge {site} puts {corner_color} bigons on a "
            f"{'positive' if sgn > 0 else 'negative'} crossing; neither Btw nor Wtr"
        )
    return fam


def _component(v: CwrValue, k: int, color: str) -> BivarPoly:
    return v[k][0] if color == "black" else v[k][1]


def _relation_checks(values, fam, color, k_max):
    v = fam.variable
    out = []
    for n in range(0, fam.n_max + 1):
        scale = v ** (2 * n)
        for k in range(2, k_max + 1):
            lhs = _component(values[2 * n + 1], k, color)
            rhs = scale * _component(values[1], k, color) + (ONE - scale) * _component(values[0], k, color)
            out.append(RelationCheck(n, k, color, lhs, rhs))
    return out


def verify_relations(fam: TwistFamily, k_max: int) -> SkeinReport:
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    values = {k: compute_cwr(d) for k, d in fam.members.items()}
    checks = _relation_checks(values, fam, fam.consolidating_color, k_max)
    other = "black" if fam.consolidating_color == "white" else "white"
    other_holds = all(c.ok for c in _relation_checks(values, fam, other, k_max))

    v = fam.variable
    idx = 0 if fam.consolidating_color == "black" else 1
    base_weights = sorted(render_poly(wt) for _, _, wt in tait_graphs(fam.members[1])[idx].edges)
    single = {}
    for n in range(1, fam.n_max + 1):
        weights = sorted(render_poly(wt) for _, _, wt in tait_graphs(fam.members[2 * n + 1])[idx].edges)
        expected = list(base_weights)
        if render_poly(v) in expected:
            expected.remove(render_poly(v))
            expected.append(render_poly(v ** (2 * n + 1)))
            single[n] = sorted(expected) == weights
        else:
            single[n] = False
    return SkeinReport(fam, checks, single, other_holds)


def verify_chain(
    chain: dict[int, CwrValue],
    color: str,
    sign,
    removed: CwrValue,
    k_max: int,
) -> list[RelationCheck]:
    """Check a twist region against its own shorter versions.

    ``chain`` maps the number of crossings in the region to the CWR value of
    that diagram; ``removed`` is the value with the whole region deleted from
    the ``color`` graph.  Each entry must satisfy
    ``C_k(region m+2j) = v**(2j) C_k(region m) + (1 - v**(2j)) C_k(removed)``
    relative to the shortest region ``m`` in the chain.
    """
    v = W if _sign_value(sign) > 0 else R
    m = min(chain)
    out = []
    for count in sorted(chain):
        if count == m:
            continue
        if (count - m) % 2:
            raise ValueError("chain lengths must differ by even counts")
        j = (count - m) // 2
        scale = v ** (2 * j)
        for k in range(2, k_max + 1):
            lhs = _component(chain[count], k, color)
            rhs = scale * _component(chain[m], k, color) + (ONE - scale) * _component(removed, k, color)
            out.append(RelationCheck(j, k, color, lhs, rhs))
    return out
