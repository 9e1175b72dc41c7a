"""Independent verification and brute-force ground truth.

`verify_strong_rainbow` checks a coloring from first principles (BFS shortest
paths only); `brute_force_src` finds the true optimum on tiny graphs by
enumerating edge-set partitions, which together validate the closed form and
the coloring algorithm without sharing their machinery.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import PartialColoringError, TooLargeError
from .graph import Graph, Path, all_shortest_paths
from .partition import BlackWhitePartition
from .solver import EdgeColoring


@dataclass(frozen=True)
class RainbowWitness:
    u: int
    v: int
    path: Path
    repeated_color: int


@dataclass(frozen=True)
class VerificationOutcome:
    ok: bool
    witness: RainbowWitness | None = None


@dataclass(frozen=True)
class BruteForceResult:
    src: int
    colorings_checked: int
    coloring: EdgeColoring


def _total_colors(g: Graph, coloring: EdgeColoring) -> tuple[int, ...]:
    colors = coloring.color
    if len(colors) != g.edge_count:
        raise PartialColoringError(
            f"coloring covers {len(colors)} edges, graph has {g.edge_count}"
        )
    for e, c in enumerate(colors):
        if not isinstance(c, int) or c < 1:
            raise PartialColoringError(f"edge {e} has invalid color {c!r}")
    return colors


def _repeated_color(edge_ids, colors) -> int | None:
    seen = set()
    for e in edge_ids:
        c = colors[e]
        if c in seen:
            return c
        seen.add(c)
    return None


def _bfs_parents(g: Graph, source: int) -> tuple[list[int], list[int]]:
    """Parent vertex and parent edge per vertex of the BFS tree from source.

    In a geodetic graph the shortest-path predecessor is unique, so the
    parent chain reproduces the unique shortest path.
    """
    n = g.vertex_count
    par_v = [-1] * n
    par_e = [-1] * n
    par_v[source] = source
    queue = deque([source])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        for w, eid in adj[x]:
            if par_v[w] < 0:
                par_v[w] = x
                par_e[w] = eid
                queue.append(w)
    return par_v, par_e


def _walk_back(par_v, par_e, source: int, target: int) -> Path:
    verts = [target]
    eids = []
    cur = target
    while cur != source:
        eids.append(par_e[cur])
        cur = par_v[cur]
        verts.append(cur)
    verts.reverse()
    eids.reverse()
    return Path(tuple(verts), tuple(eids))


def verify_strong_rainbow(
    g: Graph, coloring: EdgeColoring, geodetic_hint: bool = False
) -> VerificationOutcome:
    """Check that every vertex pair has a rainbow shortest path.

    With `geodetic_hint` the unique shortest path per pair is checked (valid
    for odd cacti); otherwise all shortest paths are enumerated, which is
    exhaustive but meant for small graphs.
    """
    colors = _total_colors(g, coloring)
    n = g.vertex_count
    for u in range(n - 1):
        if geodetic_hint:
            par_v, par_e = _bfs_parents(g, u)
            for v in range(u + 1, n):
                path = _walk_back(par_v, par_e, u, v)
                rep = _repeated_color(path.edges, colors)
                if rep is not None:
                    return VerificationOutcome(False, RainbowWitness(u, v, path, rep))
        else:
            for v in range(u + 1, n):
                paths = all_shortest_paths(g, u, v)
                if all(_repeated_color(p.edges, colors) is not None for p in paths):
                    first = paths[0]
                    rep = _repeated_color(first.edges, colors)
                    return VerificationOutcome(False, RainbowWitness(u, v, first, rep))
    return VerificationOutcome(True, None)


def verify_pairs(g: Graph, coloring: EdgeColoring, pairs) -> VerificationOutcome:
    """Spot-check specific vertex pairs (geodetic graphs).

    Pairs are grouped by source so each source costs one BFS; useful at sizes
    where the full pair enumeration is out of reach.
    """
    colors = _total_colors(g, coloring)
    by_source: dict[int, list[int]] = {}
    for u, v in pairs:
        if u != v:
            by_source.setdefault(u, []).append(v)
    for u in sorted(by_source):
        par_v, par_e = _bfs_parents(g, u)
        for v in by_source[u]:
            path = _walk_back(par_v, par_e, u, v)
            rep = _repeated_color(path.edges, colors)
            if rep is not None:
                return VerificationOutcome(False, RainbowWitness(u, v, path, rep))
    return VerificationOutcome(True, None)


def _bridges_by_deletion(g: Graph) -> list[int]:
    """Edges whose removal disconnects the graph, found by deleting each one.

    Quadratic but obviously correct; only used at brute-force scale.
    """
    bridges = []
    for e, (a, b) in enumerate(g.edges):
        seen = bytearray(g.vertex_count)
        seen[a] = 1
        queue = deque([a])
        while queue:
            x = queue.popleft()
            for w, eid in g.adjacency[x]:
                if eid != e and not seen[w]:
                    seen[w] = 1
                    queue.append(w)
        if not seen[b]:
            bridges.append(e)
    return bridges


def _partition_colorings(m: int, k: int):
    """All partitions of m edges into exactly k color classes.

    Enumerated as restricted growth strings (edge 0 gets color 1; edge i may
    use at most one more than the running maximum) so each partition appears
    once, with color permutations quotiented out.
    """
    a = [0] * m

    def rec(i: int, mx: int):
        if k - 1 - mx > m - i:
            return  # not enough positions left to reach k classes
        if i == m:
            if mx == k - 1:
                yield tuple(c + 1 for c in a)
            return
        hi = min(mx + 1, k - 1)
        for c in range(hi + 1):
            a[i] = c
            yield from rec(i + 1, mx if c <= mx else c)

    if m == 0:
        return
    yield from rec(1, 0)


def brute_force_search(g: Graph, max_edges: int = 9) -> BruteForceResult:
    """Smallest k admitting a strong rainbow k-coloring, by exhaustive search.

    Ascends k from max(1, #bridges) (distinct bridges always need distinct
    colors), testing exactly-k-class partitions; the first success at the
    smallest k is returned along with the number of colorings verified.
    """
    m = g.edge_count
    if m > max_edges:
        raise TooLargeError(m, max_edges)
    n = g.vertex_count
    pair_paths: list[tuple[tuple[int, ...], ...]] = []
    for u in range(n - 1):
        for v in range(u + 1, n):
            paths = all_shortest_paths(g, u, v)
            if len(paths[0].edges) >= 2:
                pair_paths.append(tuple(p.edges for p in paths))
    # most constrained pairs first, so bad colorings fail fast
    pair_paths.sort(key=lambda ps: (-len(ps[0]), ps))

    checked = 0
    lo = max(1, len(_bridges_by_deletion(g)))
    for k in range(lo, m + 1):
        for colors in _partition_colorings(m, k):
            checked += 1
            ok = True
            for paths in pair_paths:
                if not any(len({colors[e] for e in pe}) == len(pe) for pe in paths):
                    ok = False
                    break
            if ok:
                return BruteForceResult(k, checked, EdgeColoring(k, colors))
    raise AssertionError("unreachable: m distinct colors always verify")


def brute_force_src(g: Graph, max_edges: int = 9) -> int:
    return brute_force_search(g, max_edges).src


def check_distinct_black_colors(
    g: Graph, p: BlackWhitePartition, coloring: EdgeColoring
) -> bool:
    """True iff all black edges carry pairwise distinct colors."""
    colors = _total_colors(g, coloring)
    return len({colors[e] for e in p.e_black}) == len(p.e_black)
