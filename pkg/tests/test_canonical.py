"""Canonical and star-canonical generators, recognizers, and cycles."""

from itertools import combinations

import pytest

from eotile import (
    BadSize,
    NotComplete,
    are_order_isomorphic,
    build_graph,
    induced_subgraph,
)
from eotile.canonical import (
    ALL_STAR_TYPES,
    CANONICAL_ORDER,
    CanonicalType,
    StarFamily,
    StarType,
    canonical_clique,
    canonical_labels,
    classify_star_canonical,
    monotone_hamilton_cycle,
    star_canonical_clique,
    star_labels,
)


def expected_label(kind, n, i, j):
    """Independent restatement of the four standard labelings."""
    return {
        CanonicalType.MIN: 2 * n * i + j - 1,
        CanonicalType.MAX: (2 * n - 1) * j + i,
        CanonicalType.INV_MIN: (2 * n + 1) * i - j,
        CanonicalType.INV_MAX: 2 * n * j - i + n,
    }[kind]


class TestCanonicalClique:
    @pytest.mark.parametrize("kind", CANONICAL_ORDER)
    @pytest.mark.parametrize("n", range(3, 9))
    def test_labels_match_formulas(self, kind, n):
        labels = canonical_labels(kind, n)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                assert labels[(i - 1, j - 1)] == expected_label(kind, n, i, j)

    def test_min4_label_values(self):
        got = sorted(canonical_labels(CanonicalType.MIN, 4).values())
        assert got == [9, 10, 11, 18, 19, 27]

    def test_invmin3_order(self):
        g = canonical_clique(CanonicalType.INV_MIN, 3)
        assert g.pairs_by_rank == ((0, 2), (0, 1), (1, 2))
        assert sorted(canonical_labels(CanonicalType.INV_MIN, 3).values()) == [4, 5, 11]

    def test_invmax3_order(self):
        g = canonical_clique(CanonicalType.INV_MAX, 3)
        assert g.pairs_by_rank == ((0, 1), (1, 2), (0, 2))
        assert sorted(canonical_labels(CanonicalType.INV_MAX, 3).values()) == [14, 19, 20]

    def test_too_small(self):
        with pytest.raises(BadSize):
            canonical_clique(CanonicalType.MIN, 1)

    @pytest.mark.parametrize("kind", CANONICAL_ORDER)
    def test_hereditary_every_subset(self, kind):
        for n in range(3, 8):
            big = canonical_clique(kind, n)
            for size in range(2, n):
                for subset in combinations(range(n), size):
                    small = canonical_clique(kind, size)
                    assert are_order_isomorphic(
                        induced_subgraph(big, subset), small
                    ), (kind, n, subset)


class TestStarCanonicalClique:
    def test_middle_inc_min_interleaving(self):
        kind = StarType(StarFamily.MIDDLE_INC, CanonicalType.MIN)
        labels, x = star_labels(kind, 5)
        assert x == 4
        x_labels = sorted(r for (u, v), r in labels.items() if v == x)
        assert x_labels == [8, 16, 24, 32]
        clique_labels = sorted(r for (u, v), r in labels.items() if v != x)
        assert clique_labels == [9, 10, 11, 18, 19, 27]
        graph, _ = star_canonical_clique(kind, 5)
        n = 4
        # v_{i-1}v_n < xv_i < v_iv_{i+1} for interior i
        for i in range(2, n):
            assert graph.rank_of(i - 2, n - 1) < graph.rank_of(x, i - 1)
            assert graph.rank_of(x, i - 1) < graph.rank_of(i - 1, i)

    def test_smaller_inc_min_is_min_ordering(self):
        kind = StarType(StarFamily.SMALLER_INC, CanonicalType.MIN)
        graph, x = star_canonical_clique(kind, 5)
        cert = are_order_isomorphic(graph, canonical_clique(CanonicalType.MIN, 5))
        assert cert is not None
        assert cert.vertex_map[x] == 0  # the special vertex plays v_1

    def test_larger_dec_min_top_edges(self):
        kind = StarType(StarFamily.LARGER_DEC, CanonicalType.MIN)
        graph, x = star_canonical_clique(kind, 5)
        clique_max = max(
            r for (u, v), r in graph.rank.items() if x not in (u, v)
        )
        x_ranks = {v: graph.rank_of(x, v) for v in range(4)}
        assert all(r > clique_max for r in x_ranks.values())
        assert x_ranks[0] > x_ranks[1] > x_ranks[2] > x_ranks[3]

    def test_too_small(self):
        with pytest.raises(BadSize):
            star_canonical_clique(ALL_STAR_TYPES[0], 2)

    @pytest.mark.parametrize("kind", ALL_STAR_TYPES)
    def test_label_distinctness_up_to_64(self, kind):
        for size in (5, 9, 17, 33, 65):
            labels, _ = star_labels(kind, size)
            values = list(labels.values())
            assert len(set(values)) == len(values), (kind, size)

    @pytest.mark.parametrize("kind", ALL_STAR_TYPES)
    def test_hereditary_star_subsets(self, kind):
        for size in range(4, 8):
            big, x = star_canonical_clique(kind, size)
            others = [v for v in range(size) if v != x]
            for keep in range(2, size - 1):
                for subset in combinations(others, keep):
                    vertices = tuple(sorted((*subset, x)))
                    induced = induced_subgraph(big, vertices)
                    small, small_x = star_canonical_clique(kind, keep + 1)
                    cert = are_order_isomorphic(small, induced)
                    assert cert is not None, (kind, size, vertices)
                    # the special vertex must correspond across the iso
                    assert cert.vertex_map[small_x] == vertices.index(x)


class TestMiddleRemarkChains:
    """The in-between inequalities for middle increasing orderings."""

    @pytest.mark.parametrize("n", range(4, 11))
    def test_min_part(self, n):
        g, x = star_canonical_clique(
            StarType(StarFamily.MIDDLE_INC, CanonicalType.MIN), n + 1
        )
        for i in range(2, n):
            assert g.rank_of(i - 2, n - 1) < g.rank_of(x, i - 1) < g.rank_of(i - 1, i)
        assert g.rank_of(x, 0) < g.rank_of(0, 1)
        assert g.rank_of(n - 2, n - 1) < g.rank_of(x, n - 1)

    @pytest.mark.parametrize("n", range(4, 11))
    def test_max_part(self, n):
        g, x = star_canonical_clique(
            StarType(StarFamily.MIDDLE_INC, CanonicalType.MAX), n + 1
        )
        for i in range(2, n):
            assert g.rank_of(i - 2, i - 1) < g.rank_of(x, i - 1) < g.rank_of(0, i)
        assert g.rank_of(x, 0) < g.rank_of(0, 1)
        assert g.rank_of(n - 2, n - 1) < g.rank_of(x, n - 1)

    @pytest.mark.parametrize("n", range(4, 11))
    def test_inv_min_part(self, n):
        g, x = star_canonical_clique(
            StarType(StarFamily.MIDDLE_INC, CanonicalType.INV_MIN), n + 1
        )
        for i in range(1, n - 1):
            assert g.rank_of(i - 1, i) < g.rank_of(x, i - 1) < g.rank_of(i, n - 1)
        assert (
            g.rank_of(n - 2, n - 1)
            < g.rank_of(x, n - 2)
            < g.rank_of(x, n - 1)
        )

    @pytest.mark.parametrize("n", range(4, 11))
    def test_inv_max_part(self, n):
        g, x = star_canonical_clique(
            StarType(StarFamily.MIDDLE_INC, CanonicalType.INV_MAX), n + 1
        )
        for i in range(3, n + 1):
            assert g.rank_of(0, i - 2) < g.rank_of(x, i - 1) < g.rank_of(i - 2, i - 1)
        assert g.rank_of(x, 0) < g.rank_of(x, 1) < g.rank_of(0, 1)


class TestClassify:
    def test_requires_complete(self):
        with pytest.raises(NotComplete):
            classify_star_canonical(build_graph(3, [(0, 1, 1)]))

    @pytest.mark.parametrize("n", range(3, 9))
    def test_canonical_identifications(self, n):
        expected = {
            CanonicalType.MIN: (StarType(StarFamily.SMALLER_INC, CanonicalType.MIN), 0),
            CanonicalType.MAX: (StarType(StarFamily.LARGER_INC, CanonicalType.MAX), n - 1),
            CanonicalType.INV_MIN: (
                StarType(StarFamily.SMALLER_DEC, CanonicalType.INV_MIN),
                0,
            ),
            CanonicalType.INV_MAX: (
                StarType(StarFamily.LARGER_DEC, CanonicalType.INV_MAX),
                n - 1,
            ),
        }
        for kind, (star, special) in expected.items():
            found = classify_star_canonical(canonical_clique(kind, n))
            assert any(k == star and s == special for k, s, _ in found), (kind, n)

    @pytest.mark.parametrize("kind", ALL_STAR_TYPES)
    def test_generator_round_trip(self, kind):
        for size in (5, 6):
            graph, x = star_canonical_clique(kind, size)
            found = classify_star_canonical(graph)
            assert any(k == kind and s == x for k, s, _ in found), (kind, size)

    def test_generic_ordering_is_not_star_canonical(self):
        # Oracle cross-check: an adversarial K_5 ordering matching no type.
        g = build_graph(
            5,
            [
                (0, 1, 1), (2, 3, 2), (0, 4, 3), (1, 2, 4), (3, 4, 5),
                (0, 2, 6), (1, 4, 7), (0, 3, 8), (2, 4, 9), (1, 3, 10),
            ],
        )
        assert classify_star_canonical(g) == set()


class TestMonotoneHamiltonCycle:
    @pytest.mark.parametrize("kind", ALL_STAR_TYPES)
    @pytest.mark.parametrize("size", (5, 7, 9, 11))
    def test_spanning_and_increasing(self, kind, size):
        cycle = monotone_hamilton_cycle(kind, size)
        graph, _ = star_canonical_clique(kind, size)
        assert sorted(cycle) == list(range(size))
        ranks = [
            graph.rank_of(cycle[i], cycle[(i + 1) % size]) for i in range(size)
        ]
        assert all(r is not None for r in ranks)
        assert all(a < b for a, b in zip(ranks, ranks[1:]))

    def test_known_traversals(self):
        assert monotone_hamilton_cycle(
            StarType(StarFamily.LARGER_DEC, CanonicalType.MIN), 5
        ) == (0, 1, 2, 3, 4)
        assert monotone_hamilton_cycle(
            StarType(StarFamily.SMALLER_INC, CanonicalType.MIN), 5
        ) == (1, 4, 2, 0, 3)
        assert monotone_hamilton_cycle(
            StarType(StarFamily.MIDDLE_INC, CanonicalType.INV_MAX), 5
        ) == (0, 4, 1, 2, 3)

    def test_even_size_rejected(self):
        with pytest.raises(BadSize):
            monotone_hamilton_cycle(ALL_STAR_TYPES[0], 6)
