"""Black-white partitions: canonical construction, validation, lower bound.

A black-white partition splits vertices and edges into black and white sets
subject to four structural properties; the number of black edges is a lower
bound on the strong rainbow connection number. The canonical construction
colors S1/S2 segments, cut vertices, leaves and cut edges black, and S3/S4
segments plus antipodal-to-cut edges white.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .decomposition import BlockKind, Decomposition
from .errors import InvalidPartitionError
from .graph import Graph
from .segments import AntipodalIndex, SegmentCatalog, SegmentClass

PROPERTY_NAMES = (
    "antipodal_parity",
    "black_edge_endpoints",
    "white_vertex_edges",
    "black_edges_one_side",
)


@dataclass(frozen=True)
class BlackWhitePartition:
    v_black: frozenset[int]
    v_white: frozenset[int]
    e_black: frozenset[int]
    e_white: frozenset[int]


@dataclass(frozen=True)
class PropertyCheck:
    name: str
    passed: bool
    witness: tuple | None = None


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[PropertyCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[PropertyCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


def graph_leaves(d: Decomposition) -> frozenset[int]:
    """Degree-1 vertices: non-cut endpoints of cut-edge blocks."""
    cuts = d.cut_vertices
    leaves = set()
    for b in d.blocks:
        if b.kind is BlockKind.CUT_EDGE:
            for v in b.vertices:
                if v not in cuts:
                    leaves.add(v)
    return frozenset(leaves)


def build_canonical_partition(d: Decomposition, cat: SegmentCatalog) -> BlackWhitePartition:
    """The canonical black-white partition from the segment catalog.

    Valid for trees and for odd cacti in which every cycle carries a cut
    vertex (i.e. anything but a bare cycle).
    """
    v_black: set[int] = set()
    v_white: set[int] = set()
    e_black: set[int] = set()
    e_white: set[int] = set()
    seg_edges: set[int] = set()
    for s in cat.segments:
        seg_edges.update(s.edges)
        if s.klass in (SegmentClass.S1, SegmentClass.S2):
            v_black.update(s.vertices)
            e_black.update(s.edges)
        else:
            v_white.update(s.vertices)
            e_white.update(s.edges)
    v_black |= d.cut_vertices
    v_black |= graph_leaves(d)
    e_black |= d.cut_edges
    cycle_edges: set[int] = set()
    for b in d.blocks:
        if b.is_cycle:
            cycle_edges |= b.edges
    e_white |= cycle_edges - seg_edges  # the antipodal-to-cut edges
    return BlackWhitePartition(
        frozenset(v_black), frozenset(v_white), frozenset(e_black), frozenset(e_white)
    )


def _components_without(g: Graph, removed: int) -> list[int]:
    """Component id per vertex of G - removed; the removed vertex gets -1."""
    comp = [-1] * g.vertex_count
    cid = 0
    for s in range(g.vertex_count):
        if s == removed or comp[s] >= 0:
            continue
        comp[s] = cid
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for w, _ in g.adjacency[x]:
                if w != removed and comp[w] < 0:
                    comp[w] = cid
                    queue.append(w)
        cid += 1
    return comp


def validate_partition(
    g: Graph, d: Decomposition, a: AntipodalIndex, p: BlackWhitePartition
) -> ValidationReport:
    """Check the four defining properties against any candidate partition.

    Failures are report entries with a witness element; malformed input (sets
    that do not partition V and E) raises ValueError instead.
    """
    all_v = frozenset(range(g.vertex_count))
    all_e = frozenset(range(g.edge_count))
    if p.v_black | p.v_white != all_v or p.v_black & p.v_white:
        raise ValueError("vertex sets do not partition V(G)")
    if p.e_black | p.e_white != all_e or p.e_black & p.e_white:
        raise ValueError("edge sets do not partition E(G)")

    checks: list[PropertyCheck] = []

    # 1: a cycle edge is black iff its antipodal vertex is white, and vice versa
    witness = None
    for e in sorted(a.opp_vertex):
        w = a.opp_vertex[e]
        if (e in p.e_black) != (w in p.v_white) or (e in p.e_white) != (w in p.v_black):
            witness = (e, w)
            break
    checks.append(PropertyCheck(PROPERTY_NAMES[0], witness is None, witness))

    # 2: both endpoints of a black edge are black
    witness = None
    for e in sorted(p.e_black):
        u, v = g.edges[e]
        if u not in p.v_black or v not in p.v_black:
            witness = (e, u if u not in p.v_black else v)
            break
    checks.append(PropertyCheck(PROPERTY_NAMES[1], witness is None, witness))

    # 3: every edge incident to a white vertex is white
    witness = None
    for v in sorted(p.v_white):
        for _, eid in g.adjacency[v]:
            if eid not in p.e_white:
                witness = (v, eid)
                break
        if witness:
            break
    checks.append(PropertyCheck(PROPERTY_NAMES[2], witness is None, witness))

    # 4: for every white cut vertex, all black edges lie in one component of G - v
    witness = None
    for v in sorted(p.v_white & d.cut_vertices):
        comp = _components_without(g, v)
        target = None
        for e in sorted(p.e_black):
            x, y = g.edges[e]
            if x == v or y == v:
                witness = (v, e)
                break
            c = comp[x]
            if target is None:
                target = c
            elif c != target:
                witness = (v, e)
                break
        if witness:
            break
    checks.append(PropertyCheck(PROPERTY_NAMES[3], witness is None, witness))

    return ValidationReport(tuple(checks))


def lower_bound(p: BlackWhitePartition, report: ValidationReport | None = None) -> int:
    """|E_B|, a lower bound on src(G) for validated partitions."""
    if report is not None and not report.ok:
        first = report.failures()[0]
        raise InvalidPartitionError(first.name, first.witness)
    return len(p.e_black)
