"""Block decomposition: cut vertices, blocks, bridges, block-cut tree.

Blocks are found with an iterative low-link DFS and ordered by the DFS step
at which their first edge is traversed, so downstream iteration orders are
reproducible for a given edge list.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import EdgeId, Graph, VertexId


class BlockKind(Enum):
    CUT_EDGE = "cut_edge"
    CYCLE = "cycle"
    # 2-connected but not a cycle; only appears on inputs that are later rejected
    OTHER = "other"


@dataclass(frozen=True)
class Block:
    """One block of the graph.

    For CYCLE blocks `vertices` is the canonical cyclic traversal (lowest id
    first, moving toward its lower-id neighbor) and `ordered_edges[i]` joins
    `vertices[i]` to `vertices[(i + 1) % length]`.
    """

    index: int
    kind: BlockKind
    vertices: tuple[VertexId, ...]
    edges: frozenset[EdgeId]
    ordered_edges: tuple[EdgeId, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_cycle(self) -> bool:
        return self.kind is BlockKind.CYCLE


@dataclass(frozen=True, eq=False)
class BlockCutTree:
    """Bipartite adjacency between blocks and the cut vertices they contain."""

    block_cuts: tuple[tuple[VertexId, ...], ...]
    cut_blocks: dict[VertexId, tuple[int, ...]]

    @property
    def node_count(self) -> int:
        return len(self.block_cuts) + len(self.cut_blocks)

    @property
    def edge_count(self) -> int:
        return sum(len(cs) for cs in self.block_cuts)

    def block_degree(self, block_index: int) -> int:
        return len(self.block_cuts[block_index])


@dataclass(frozen=True, eq=False)
class Decomposition:
    cut_vertices: frozenset[VertexId]
    blocks: tuple[Block, ...]
    cut_edges: frozenset[EdgeId]
    bct: BlockCutTree
    block_of_edge: tuple[int, ...]

    def cycle_blocks(self) -> tuple[Block, ...]:
        return tuple(b for b in self.blocks if b.is_cycle)


class GraphClass(Enum):
    TREE = "Tree"
    ODD_CYCLE = "OddCycle"
    GENERAL_ODD_CACTUS = "GeneralOddCactus"
    REJECTED = "Rejected"


class RejectionReason(Enum):
    CONTAINS_EVEN_CYCLE = "ContainsEvenCycle"
    NOT_CACTUS = "NotCactus"


@dataclass(frozen=True)
class Classification:
    tag: GraphClass
    cycle_length: int | None = None
    reason: RejectionReason | None = None
    witness_block: int | None = None
    witness_edge: int | None = None

    @property
    def accepted(self) -> bool:
        return self.tag is not GraphClass.REJECTED


def decompose(g: Graph) -> Decomposition:
    """Cut vertices, blocks and block-cut tree of any connected simple graph."""
    n = g.vertex_count
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    ptr = [0] * n
    parent_eid = [-1] * n
    is_cut = [False] * n
    push_seq = [-1] * g.edge_count
    estack: list[int] = []
    comps: list[list[int]] = []
    pushes = 0
    timer = 1
    root_children = 0

    disc[0] = low[0] = 0
    vstack = [0]
    while vstack:
        v = vstack[-1]
        av = adj[v]
        i = ptr[v]
        if i < len(av):
            ptr[v] = i + 1
            w, eid = av[i]
            dw = disc[w]
            if dw < 0:
                parent_eid[w] = eid
                push_seq[eid] = pushes
                pushes += 1
                estack.append(eid)
                disc[w] = low[w] = timer
                timer += 1
                vstack.append(w)
            elif eid != parent_eid[v] and dw < disc[v]:
                push_seq[eid] = pushes
                pushes += 1
                estack.append(eid)
                if dw < low[v]:
                    low[v] = dw
        else:
            vstack.pop()
            if not vstack:
                break
            u = vstack[-1]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                peid = parent_eid[v]
                comp: list[int] = []
                while True:
                    e = estack.pop()
                    comp.append(e)
                    if e == peid:
                        break
                comps.append(comp)
                if u == 0:
                    root_children += 1
                else:
                    is_cut[u] = True
    if root_children > 1:
        is_cut[0] = True

    comps.sort(key=lambda comp: min(push_seq[e] for e in comp))

    edges_arr = g.edges
    blocks: list[Block] = []
    block_of_edge = [-1] * g.edge_count
    cut_edge_ids: list[int] = []
    for bidx, comp in enumerate(comps):
        for e in comp:
            block_of_edge[e] = bidx
        if len(comp) == 1:
            e = comp[0]
            a, b = edges_arr[e]
            blocks.append(Block(bidx, BlockKind.CUT_EDGE, (a, b), frozenset(comp), (e,)))
            cut_edge_ids.append(e)
            continue
        nbrs: dict[int, list[tuple[int, int]]] = {}
        for e in comp:
            a, b = edges_arr[e]
            nbrs.setdefault(a, []).append((b, e))
            nbrs.setdefault(b, []).append((a, e))
        if len(nbrs) == len(comp):
            # a 2-connected block with |V| == |E| is a cycle
            start = min(nbrs)
            (n1, e1), (n2, e2) = nbrs[start]
            step = (n1, e1) if n1 < n2 else (n2, e2)
            verts = [start]
            oedges = [step[1]]
            prev, cur = start, step[0]
            while cur != start:
                verts.append(cur)
                (m1, f1), (m2, f2) = nbrs[cur]
                step = (m1, f1) if m1 != prev else (m2, f2)
                oedges.append(step[1])
                prev, cur = cur, step[0]
            blocks.append(Block(bidx, BlockKind.CYCLE, tuple(verts), frozenset(comp), tuple(oedges)))
        else:
            blocks.append(Block(bidx, BlockKind.OTHER, tuple(sorted(nbrs)), frozenset(comp), ()))

    cut_vertices = frozenset(v for v in range(n) if is_cut[v])
    block_cuts: list[tuple[int, ...]] = []
    cut_blocks: dict[int, list[int]] = {v: [] for v in sorted(cut_vertices)}
    for b in blocks:
        cs = tuple(sorted(v for v in b.vertices if v in cut_vertices))
        block_cuts.append(cs)
        for v in cs:
            cut_blocks[v].append(b.index)
    bct = BlockCutTree(tuple(block_cuts), {v: tuple(bs) for v, bs in cut_blocks.items()})
    return Decomposition(cut_vertices, tuple(blocks), frozenset(cut_edge_ids), bct, tuple(block_of_edge))


def classify(g: Graph, d: Decomposition) -> Classification:
    """Tree / odd cycle / general odd cactus, or a rejection with a witness."""
    for b in d.blocks:
        if b.kind is BlockKind.OTHER:
            return Classification(
                GraphClass.REJECTED,
                reason=RejectionReason.NOT_CACTUS,
                witness_block=b.index,
                witness_edge=min(b.edges),
            )
        if b.is_cycle and b.length % 2 == 0:
            return Classification(
                GraphClass.REJECTED,
                reason=RejectionReason.CONTAINS_EVEN_CYCLE,
                witness_block=b.index,
                witness_edge=min(b.edges),
            )
    if all(b.kind is BlockKind.CUT_EDGE for b in d.blocks):
        return Classification(GraphClass.TREE)
    if len(d.blocks) == 1:
        return Classification(GraphClass.ODD_CYCLE, cycle_length=d.blocks[0].length)
    return Classification(GraphClass.GENERAL_ODD_CACTUS)


def leaf_blocks(d: Decomposition) -> tuple[Block, ...]:
    """Blocks whose block-cut-tree node has degree at most 1."""
    return tuple(b for b in d.blocks if d.bct.block_degree(b.index) <= 1)
