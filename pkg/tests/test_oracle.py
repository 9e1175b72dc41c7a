from __future__ import annotations

import pytest
from conftest import c5_plus_pendant_edges, cycle_edges, path_edges

from rainbow_cactus import (
    EdgeColoring,
    brute_force_search,
    brute_force_src,
    build_antipodal_index,
    build_canonical_partition,
    build_graph,
    check_distinct_black_colors,
    decompose,
    enumerate_segments,
    strong_rainbow_coloring,
    verify_pairs,
    verify_strong_rainbow,
)
from rainbow_cactus.errors import PartialColoringError, TooLargeError
from rainbow_cactus.oracle import _partition_colorings


def algorithm_coloring(g):
    d = decompose(g)
    a = build_antipodal_index(d)
    cat = enumerate_segments(d, a)
    return strong_rainbow_coloring(g, d, a, cat).coloring


class TestVerifyStrongRainbow:
    def test_sample_algorithm_coloring_ok(self, sample_cactus):
        c = algorithm_coloring(sample_cactus)
        assert verify_strong_rainbow(sample_cactus, c, geodetic_hint=True).ok
        assert verify_strong_rainbow(sample_cactus, c, geodetic_hint=False).ok

    def test_monochrome_c5_fails_with_witness(self, c5):
        out = verify_strong_rainbow(c5, EdgeColoring(1, (1, 1, 1, 1, 1)))
        assert not out.ok
        w = out.witness
        assert w.repeated_color == 1
        assert w.path.length == 2
        # the witness path really carries the repeated color twice
        colors = [1, 1, 1, 1, 1]
        assert sum(1 for e in w.path.edges if colors[e] == w.repeated_color) == 2

    def test_c5_three_coloring_ok(self, c5):
        d = decompose(c5)
        ordered = d.blocks[0].ordered_edges
        colors = [0] * 5
        for i, e in enumerate(ordered):
            colors[e] = (i % 3) + 1
        out = verify_strong_rainbow(c5, EdgeColoring(3, tuple(colors)))
        assert out.ok

    def test_partial_coloring_rejected(self, c5):
        with pytest.raises(PartialColoringError):
            verify_strong_rainbow(c5, EdgeColoring(1, (1, 1, 1)))
        with pytest.raises(PartialColoringError):
            verify_strong_rainbow(c5, EdgeColoring(1, (1, 1, 1, 1, 0)))

    def test_hint_modes_agree_on_small_cacti(self, sample_cactus, bowtie):
        for g in (sample_cactus, bowtie):
            good = algorithm_coloring(g)
            bad = EdgeColoring(1, tuple(1 for _ in range(g.edge_count)))
            for coloring in (good, bad):
                fast = verify_strong_rainbow(g, coloring, geodetic_hint=True)
                slow = verify_strong_rainbow(g, coloring, geodetic_hint=False)
                assert fast.ok == slow.ok

    def test_corrupted_optimal_coloring_is_caught(self, sample_cactus):
        # merging the two colors inside the cut-vertex-bounded segment breaks
        # the pair whose shortest path crosses that whole segment
        good = algorithm_coloring(sample_cactus)
        colors = list(good.color)
        segment_pair = sorted(e for e, c in enumerate(colors) if c in (4, 5))
        colors = [4 if c == 5 else c for c in colors]
        out = verify_strong_rainbow(sample_cactus, EdgeColoring(7, tuple(colors)))
        assert not out.ok
        assert out.witness.repeated_color == 4
        assert set(out.witness.path.edges) & set(segment_pair)

    def test_non_geodetic_graph_uses_any_path(self):
        # C4 with alternating colors is strongly rainbow connected even though
        # per-pair paths are not unique
        c4 = build_graph(cycle_edges(4))
        out = verify_strong_rainbow(c4, EdgeColoring(2, (1, 2, 1, 2)))
        assert out.ok


class TestVerifyPairs:
    def test_spot_check_matches_full_check(self, sample_cactus):
        g = sample_cactus
        c = algorithm_coloring(g)
        pairs = [(u, v) for u in range(g.vertex_count) for v in range(g.vertex_count) if u != v]
        assert verify_pairs(g, c, pairs).ok

    def test_spot_check_finds_violation(self, c5):
        out = verify_pairs(c5, EdgeColoring(1, (1, 1, 1, 1, 1)), [(0, 2)])
        assert not out.ok
        assert out.witness.u == 0 and out.witness.v == 2


class TestBruteForce:
    def test_baselines(self, triangle, c5, bowtie):
        assert brute_force_src(triangle) == 1
        assert brute_force_src(build_graph(path_edges(3))) == 2
        assert brute_force_src(c5) == 3
        assert brute_force_src(bowtie) == 2

    def test_c5_plus_pendant(self):
        assert brute_force_src(build_graph(c5_plus_pendant_edges())) == 3

    def test_even_cycle_works_too(self):
        assert brute_force_src(build_graph(cycle_edges(4))) == 2
        assert brute_force_src(build_graph(cycle_edges(6))) == 3

    def test_cap_enforced_and_overridable(self, sample_cactus):
        with pytest.raises(TooLargeError):
            brute_force_src(build_graph(cycle_edges(10)))
        assert brute_force_src(build_graph(cycle_edges(7)), max_edges=7) == 4

    def test_result_carries_valid_coloring(self, bowtie):
        res = brute_force_search(bowtie)
        assert res.src == 2
        assert res.colorings_checked >= 1
        assert verify_strong_rainbow(bowtie, res.coloring).ok

    def test_tree_needs_no_search(self):
        g = build_graph(path_edges(8))
        res = brute_force_search(g)
        assert res.src == 7
        # the bridge bound starts the search at k = m, whose only partition
        # is the all-distinct one
        assert res.colorings_checked == 1


class TestPartitionColorings:
    def test_exact_class_counts(self):
        # Stirling numbers S(4, k)
        assert sum(1 for _ in _partition_colorings(4, 1)) == 1
        assert sum(1 for _ in _partition_colorings(4, 2)) == 7
        assert sum(1 for _ in _partition_colorings(4, 3)) == 6
        assert sum(1 for _ in _partition_colorings(4, 4)) == 1

    def test_canonical_form(self):
        for colors in _partition_colorings(5, 3):
            assert colors[0] == 1
            assert max(colors) == 3
            seen_max = 0
            for c in colors:
                assert c <= seen_max + 1
                seen_max = max(seen_max, c)


class TestDistinctBlackColors:
    def pipeline(self, g):
        d = decompose(g)
        a = build_antipodal_index(d)
        cat = enumerate_segments(d, a)
        return d, a, cat

    def test_sample_algorithm_coloring(self, sample_cactus):
        d, a, cat = self.pipeline(sample_cactus)
        p = build_canonical_partition(d, cat)
        res = strong_rainbow_coloring(sample_cactus, d, a, cat)
        assert check_distinct_black_colors(sample_cactus, p, res.coloring)

    def test_every_valid_bowtie_coloring(self, bowtie):
        d, a, cat = self.pipeline(bowtie)
        p = build_canonical_partition(d, cat)
        found = 0
        for colors in _partition_colorings(bowtie.edge_count, 2):
            c = EdgeColoring(2, colors)
            if verify_strong_rainbow(bowtie, c).ok:
                found += 1
                assert check_distinct_black_colors(bowtie, p, c)
        assert found >= 1

    def test_tree_any_valid_coloring_is_bijection(self):
        g = build_graph(path_edges(4))
        d, a, cat = self.pipeline(g)
        p = build_canonical_partition(d, cat)
        res = brute_force_search(g)
        assert check_distinct_black_colors(g, p, res.coloring)
        assert sorted(res.coloring.color) == [1, 2, 3]
