"""Embedding engine vs brute force, plus the specialized searches."""

from itertools import combinations, permutations

import numpy as np
import pytest

from eotile import (
    BadVertex,
    Embedding,
    MissingEdge,
    StarColor,
    build_graph,
    canonical_clique,
    count_copies,
    count_order_automorphisms,
    find_embedding,
    find_monotone_path,
    find_star_canonical_subclique,
    induced_subgraph,
    iter_embeddings,
    monotone_path_graph,
    monotone_star_subsequence,
    reverse,
    star_canonical_clique,
    star_edge_coloring,
    verify_embedding,
)
from eotile.canonical import CanonicalType, StarFamily, StarType, classify_star_canonical
from eotile.characterize import d_graph, monotone_cycle


def brute_injections(pattern, host):
    """Oracle: every injective map, order checked directly on rank lists."""
    found = []
    fedges = [(u, v) for u, v, _ in pattern.edges]
    for perm in permutations(range(host.n), pattern.n):
        ranks = [host.rank_of(perm[u], perm[v]) for u, v in fedges]
        if None in ranks:
            continue
        if all(a < b for a, b in zip(ranks, ranks[1:])):
            found.append(perm)
    return found


def random_graph(rng, n, m):
    pairs = list(combinations(range(n), 2))
    picked = rng.choice(len(pairs), size=m, replace=False)
    ranks = rng.permutation(m) + 1
    return build_graph(n, [(*pairs[int(i)], int(r)) for i, r in zip(picked, ranks)])


class TestFindEmbedding:
    def test_monotone_p2_into_invmax_k3(self):
        emb = find_embedding(monotone_path_graph(2), canonical_clique(CanonicalType.INV_MAX, 3))
        assert emb is not None
        assert emb.vertex_map == (0, 1, 2)

    def test_monotone_c4_has_no_min_embedding(self):
        assert find_embedding(monotone_cycle(4), canonical_clique(CanonicalType.MIN, 4)) is None

    def test_d4_fails_larger_dec_min(self):
        host, _ = star_canonical_clique(
            StarType(StarFamily.LARGER_DEC, CanonicalType.MIN), 4
        )
        assert find_embedding(d_graph(4), host) is None

    def test_isolated_vertices_fill_unused_hosts(self):
        pattern = build_graph(4, [(0, 1, 1)])  # edge plus two isolated vertices
        host = canonical_clique(CanonicalType.MIN, 4)
        emb = find_embedding(pattern, host)
        assert emb is not None
        assert len(set(emb.vertex_map)) == 4

    def test_pattern_larger_than_host(self):
        assert find_embedding(monotone_path_graph(3), canonical_clique(CanonicalType.MIN, 3)) is None

    def test_brute_force_equivalence_seeded(self):
        rng = np.random.default_rng(2024)
        verified = 0
        for _ in range(200):
            nf = int(rng.integers(2, 5))
            mf_max = nf * (nf - 1) // 2
            mf = int(rng.integers(1, mf_max + 1))
            nh = int(rng.integers(nf, 7))
            mh_max = nh * (nh - 1) // 2
            mh = int(rng.integers(0, mh_max + 1))
            pattern = random_graph(rng, nf, mf)
            host = random_graph(rng, nh, mh)
            oracle = brute_injections(pattern, host)
            emb = find_embedding(pattern, host)
            assert (emb is not None) == bool(oracle)
            if emb is not None:
                assert verify_embedding(pattern, host, emb)
                assert tuple(emb.vertex_map) in oracle
                verified += 1
        assert verified > 20  # the sample must exercise the positive branch


class TestCountCopies:
    def test_monotone_p2_in_min_k3(self):
        assert count_copies(monotone_path_graph(2), canonical_clique(CanonicalType.MIN, 3)) == 3

    def test_k3_in_min_k3(self):
        k3 = canonical_clique(CanonicalType.MIN, 3)
        assert count_copies(k3, k3) == 1

    def test_single_edge_in_clique(self):
        edge = build_graph(2, [(0, 1, 1)])
        for n in (3, 4, 5, 6):
            host = canonical_clique(CanonicalType.MAX, n)
            assert count_copies(edge, host) == n * (n - 1) // 2

    def test_counts_match_brute_force_seeded(self):
        rng = np.random.default_rng(77)
        for _ in range(60):
            nf = int(rng.integers(2, 5))
            mf = int(rng.integers(1, nf * (nf - 1) // 2 + 1))
            nh = int(rng.integers(nf, 7))
            mh = int(rng.integers(0, nh * (nh - 1) // 2 + 1))
            pattern = random_graph(rng, nf, mf)
            host = random_graph(rng, nh, mh)
            injections = len(brute_injections(pattern, host))
            auts = count_order_automorphisms(pattern)
            assert auts == len(brute_injections(pattern, pattern))
            assert count_copies(pattern, host) * auts == injections

    def test_iter_embeddings_all_verify(self):
        host = canonical_clique(CanonicalType.MIN, 5)
        pattern = monotone_path_graph(2)
        seen = set()
        for emb in iter_embeddings(pattern, host):
            assert verify_embedding(pattern, host, emb)
            seen.add(emb.vertex_map)
        assert len(seen) == len(brute_injections(pattern, host))


class TestFindMonotonePath:
    def test_ordinary_path_in_min_k5(self):
        emb = find_monotone_path(canonical_clique(CanonicalType.MIN, 5), 4)
        assert emb is not None
        assert emb.vertex_map == (0, 1, 2, 3, 4)

    def test_two_incident_edges(self):
        star = build_graph(3, [(0, 1, 2), (0, 2, 1)])
        emb = find_monotone_path(star, 2)
        assert emb is not None
        assert verify_embedding(monotone_path_graph(2), star, emb)

    def test_disjoint_edges_have_no_two_path(self):
        g = build_graph(4, [(0, 1, 1), (2, 3, 2)])
        assert find_monotone_path(g, 2) is None

    def test_reversed_path_is_monotone_in_reverse(self):
        rng = np.random.default_rng(5)
        for _ in range(30):
            host = random_graph(rng, 8, 16)
            emb = find_monotone_path(host, 3)
            if emb is None:
                continue
            flipped = Embedding(tuple(reversed(emb.vertex_map)))
            assert verify_embedding(monotone_path_graph(3), reverse(host), flipped)

    def test_rodl_density_sample(self):
        # Above the k(k+1)n/2 edge threshold a path always exists.
        rng = np.random.default_rng(11)
        for _ in range(20):
            host = random_graph(rng, 10, 30)
            emb = find_monotone_path(host, 2)
            assert emb is not None
            assert verify_embedding(monotone_path_graph(2), host, emb)


class TestMonotoneStarSubsequence:
    def test_small_example(self):
        h = build_graph(4, [(3, 0, 5), (3, 1, 1), (3, 2, 3)])
        assert monotone_star_subsequence(h, 3) == (1, 2)

    def test_all_increasing(self):
        h = build_graph(5, [(4, i, i + 1) for i in range(4)])
        assert monotone_star_subsequence(h, 4) == (0, 1, 2, 3)

    def test_isolated_center(self):
        h = build_graph(3, [(0, 1, 1)])
        assert monotone_star_subsequence(h, 2) == ()

    def test_erdos_szekeres_bound_random(self):
        rng = np.random.default_rng(123)
        for _ in range(50):
            ranks = rng.permutation(16) + 1
            h = build_graph(17, [(16, i, int(r)) for i, r in enumerate(ranks)])
            seq = monotone_star_subsequence(h, 16)
            assert len(seq) >= 4  # ceil(sqrt(16))
            got = [h.rank_of(16, v) for v in seq]
            assert all(a < b for a, b in zip(got, got[1:])) or all(
                a > b for a, b in zip(got, got[1:])
            )

    def test_matches_dp_oracle(self):
        def oracle_best(ranks):
            best = 1
            d = len(ranks)
            for direction in (1, -1):
                lis = [1] * d
                for i in range(d):
                    for j in range(i):
                        if (ranks[i] - ranks[j]) * direction > 0:
                            lis[i] = max(lis[i], lis[j] + 1)
                best = max(best, max(lis))
            return best

        rng = np.random.default_rng(9)
        for _ in range(40):
            d = int(rng.integers(1, 12))
            ranks = list(rng.permutation(d) + 1)
            h = build_graph(d + 1, [(d, i, int(r)) for i, r in enumerate(ranks)])
            assert len(monotone_star_subsequence(h, d)) == oracle_best(ranks)


class TestStarEdgeColoring:
    def test_larger_dec_all_big(self):
        g, x = star_canonical_clique(StarType(StarFamily.LARGER_DEC, CanonicalType.MIN), 5)
        for vi, vj in combinations(range(4), 2):
            assert star_edge_coloring(g, x, (vi, vj)) is StarColor.B

    def test_middle_inc_first_pair_mixed(self):
        g, x = star_canonical_clique(StarType(StarFamily.MIDDLE_INC, CanonicalType.MIN), 5)
        assert star_edge_coloring(g, x, (0, 1)) is StarColor.M
        assert g.rank_of(x, 0) < g.rank_of(0, 1) < g.rank_of(x, 1)

    def test_smaller_inc_all_small(self):
        g, x = star_canonical_clique(StarType(StarFamily.SMALLER_INC, CanonicalType.MIN), 5)
        for vi, vj in combinations(range(4), 2):
            assert star_edge_coloring(g, x, (vi, vj)) is StarColor.S

    def test_missing_edge(self):
        g = build_graph(3, [(0, 1, 1), (1, 2, 2)])
        with pytest.raises(MissingEdge):
            star_edge_coloring(g, 0, (1, 2))

    def test_distinct_vertices_required(self):
        g = canonical_clique(CanonicalType.MIN, 3)
        with pytest.raises(BadVertex):
            star_edge_coloring(g, 0, (0, 1))


class TestStarSubcliqueSearch:
    def test_hereditary_host_always_finds(self):
        host, x = star_canonical_clique(StarType(StarFamily.LARGER_INC, CanonicalType.MAX), 6)
        result = find_star_canonical_subclique(host, x, 5)
        assert result is not None
        kind, emb = result
        assert kind == StarType(StarFamily.LARGER_INC, CanonicalType.MAX)
        assert x in emb.image

    def test_small_f_type_may_coincide(self):
        # At f=4 the canonical part is K_3, whose orderings all coincide, so
        # the reported type only has to be witnessed by the classifier.
        host, x = star_canonical_clique(StarType(StarFamily.LARGER_INC, CanonicalType.MAX), 6)
        result = find_star_canonical_subclique(host, x, 4)
        assert result is not None
        kind, emb = result
        induced = induced_subgraph(host, sorted(emb.image))
        position = sorted(emb.image).index(x)
        assert any(
            k == kind and s == position for k, s, _ in classify_star_canonical(induced)
        )

    def test_min_clique_center_is_smaller_inc(self):
        host = canonical_clique(CanonicalType.MIN, 6)
        result = find_star_canonical_subclique(host, 0, 5)
        assert result is not None
        kind, emb = result
        assert kind == StarType(StarFamily.SMALLER_INC, CanonicalType.MIN)
        assert emb.vertex_map == (1, 2, 3, 4, 0)

    def test_adversarial_labels_pinned_by_classifier(self):
        from eotile.canonical import canonical_labels

        lab = canonical_labels(CanonicalType.MIN, 4)
        edges = [(u, v, r * 10) for (u, v), r in lab.items()]
        edges += [(0, 4, 95), (1, 4, 85), (2, 4, 105), (3, 4, 275)]
        host = build_graph(5, edges)
        result = find_star_canonical_subclique(host, 4, 4)
        assert result is not None
        kind, emb = result
        subset = sorted(emb.image)
        induced = induced_subgraph(host, subset)
        assert any(
            k == kind and s == subset.index(4)
            for k, s, _ in classify_star_canonical(induced)
        )
