"""Edge-ordered graphs: the data model and its brute-force oracle substrate.

An edge-ordered graph is a graph whose edges carry a total order, stored
here as dense integer ranks ``1..m``.  Everything downstream (canonical
orderings, embeddings, tilings) is built on the normalized representation
produced by :func:`build_graph`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterator, Optional, Sequence

from .errors import BadVertex, BudgetExceeded, DuplicateEdge, RankCollision

Pair = tuple[int, int]

# m! labelings are enumerated before deduplication; 8 edges is the default cap.
DEFAULT_MAX_LABELINGS = 50_000

# Exact chromatic number search is exponential; refuse silly instances.
DEFAULT_MAX_COLOR_VERTICES = 24


@dataclass(frozen=True)
class EdgeOrderedGraph:
    """Vertices ``0..n-1`` plus edges ``(u, v, rank)`` with ``u < v``.

    Instances are immutable and always normalized: ranks are exactly
    ``1..m`` and the ``edges`` tuple is sorted by rank.  Two labelings that
    induce the same edge order therefore compare equal.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def rank(self) -> dict[Pair, int]:
        return {(u, v): r for u, v, r in self.edges}

    @cached_property
    def pairs_by_rank(self) -> tuple[Pair, ...]:
        return tuple((u, v) for u, v, _ in self.edges)

    @cached_property
    def pair_set(self) -> frozenset[Pair]:
        return frozenset(self.pairs_by_rank)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v, _ in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.pair_set

    def rank_of(self, u: int, v: int) -> Optional[int]:
        if u > v:
            u, v = v, u
        return self.rank.get((u, v))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def min_degree(self) -> int:
        if self.n == 0:
            return 0
        return min(self.degree(v) for v in range(self.n))

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if not self.adjacency[v])

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        body = ",".join(f"{u}-{v}#{r}" for u, v, r in self.edges)
        return f"EdgeOrderedGraph(n={self.n}, [{body}])"


def build_graph(n: int, ranked_edges: Sequence[tuple[int, int, int]]) -> EdgeOrderedGraph:
    """Validate and normalize ``(u, v, label)`` triples into a graph.

    Labels may be arbitrary distinct integers; only their relative order
    matters and they are compressed to ``1..m``.
    """
    if n < 0:
        raise BadVertex(f"vertex count must be nonnegative, got {n}")
    seen_pairs: set[Pair] = set()
    seen_ranks: set[int] = set()
    triples: list[tuple[int, int, int]] = []
    for u, v, label in ranked_edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise BadVertex(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
        if u == v:
            raise BadVertex(f"loop at vertex {u} is not allowed")
        if u > v:
            u, v = v, u
        if (u, v) in seen_pairs:
            raise DuplicateEdge(f"edge ({u},{v}) given twice")
        if label in seen_ranks:
            raise RankCollision(f"label {label} used twice")
        seen_pairs.add((u, v))
        seen_ranks.add(label)
        triples.append((u, v, label))
    triples.sort(key=lambda t: t[2])
    normalized = tuple((u, v, i + 1) for i, (u, v, _) in enumerate(triples))
    return EdgeOrderedGraph(n, normalized)


def reverse(graph: EdgeOrderedGraph) -> EdgeOrderedGraph:
    """Reverse the total order: the rank-``r`` edge gets rank ``m+1-r``."""
    m = graph.m
    flipped = sorted(((u, v, m + 1 - r) for u, v, r in graph.edges), key=lambda t: t[2])
    return EdgeOrderedGraph(graph.n, tuple(flipped))


def induced_subgraph(graph: EdgeOrderedGraph, vertices) -> EdgeOrderedGraph:
    """Induced subgraph on ``vertices``, relabeled ``0..|S|-1`` in vertex order."""
    subset = sorted(set(vertices))
    for v in subset:
        if not (0 <= v < graph.n):
            raise BadVertex(f"vertex {v} not in graph with n={graph.n}")
    index = {v: i for i, v in enumerate(subset)}
    kept = [
        (index[u], index[v], r)
        for u, v, r in graph.edges
        if u in index and v in index
    ]
    return build_graph(len(subset), kept)


@dataclass(frozen=True)
class IsoCertificate:
    """A bijection witnessing order-isomorphism; index = source vertex."""

    vertex_map: tuple[int, ...]

    def apply(self, v: int) -> int:
        return self.vertex_map[v]


def _edge_isomorphisms(first: EdgeOrderedGraph, second: EdgeOrderedGraph) -> Iterator[dict[int, int]]:
    """All partial vertex maps realizing the forced rank-by-rank edge match.

    Because both graphs have the same number of edges and the order must be
    preserved, the rank-``i`` edge of ``first`` can only map to the
    rank-``i`` edge of ``second``; only endpoint orientations branch.
    """
    if first.m != second.m:
        return
    fpairs = first.pairs_by_rank
    spairs = second.pairs_by_rank
    m = first.m

    def extend(i: int, fmap: dict[int, int], used: set[int]) -> Iterator[dict[int, int]]:
        if i == m:
            yield dict(fmap)
            return
        a, b = fpairs[i]
        c, d = spairs[i]
        for x, y in ((c, d), (d, c)):
            if fmap.get(a, x) != x or fmap.get(b, y) != y:
                continue
            added = []
            ok = True
            for src, dst in ((a, x), (b, y)):
                if src not in fmap:
                    if dst in used:
                        ok = False
                        break
                    fmap[src] = dst
                    used.add(dst)
                    added.append((src, dst))
            if ok:
                yield from extend(i + 1, fmap, used)
            for src, dst in added:
                del fmap[src]
                used.discard(dst)

    yield from extend(0, {}, set())


def order_isomorphisms(first: EdgeOrderedGraph, second: EdgeOrderedGraph) -> Iterator[tuple[int, ...]]:
    """Yield all order-isomorphisms as full vertex maps, ascending.

    Isolated vertices of ``first`` are matched to leftover vertices of
    ``second`` in every possible way, so the stream is complete.
    """
    if first.n != second.n or first.m != second.m:
        return
    seen: set[tuple[int, ...]] = set()
    for fmap in _edge_isomorphisms(first, second):
        free_src = [v for v in range(first.n) if v not in fmap]
        free_dst = [v for v in range(second.n) if v not in set(fmap.values())]
        for assignment in permutations(free_dst):
            full = dict(fmap)
            full.update(zip(free_src, assignment))
            cert = tuple(full[v] for v in range(first.n))
            if cert not in seen:
                seen.add(cert)
                yield cert


def are_order_isomorphic(
    first: EdgeOrderedGraph, second: EdgeOrderedGraph
) -> Optional[IsoCertificate]:
    """Lexicographically least order-isomorphism certificate, or None."""
    if first.n != second.n or first.m != second.m:
        return None
    best: Optional[tuple[int, ...]] = None
    for fmap in _edge_isomorphisms(first, second):
        free_src = [v for v in range(first.n) if v not in fmap]
        free_dst = sorted(v for v in range(second.n) if v not in set(fmap.values()))
        full = dict(fmap)
        full.update(zip(free_src, free_dst))
        cert = tuple(full[v] for v in range(first.n))
        if best is None or cert < best:
            best = cert
    return IsoCertificate(best) if best is not None else None


def _min_edge_sequence(graph: EdgeOrderedGraph) -> tuple[Pair, ...]:
    """Lexicographically least relabeled edge sequence over all vertex bijections.

    Candidates are partial relabelings; at each rank only the relabelings
    achieving the minimal next pair survive, which is exactly lexicographic
    minimization with pruning.
    """
    n = graph.n
    seq: list[Pair] = []
    candidates: list[tuple[dict[int, int], set[int]]] = [({}, set())]
    for a, b in graph.pairs_by_rank:
        best_pair: Optional[Pair] = None
        survivors: list[tuple[Pair, dict[int, int], set[int]]] = []
        for vmap, used in candidates:
            options: list[tuple[Pair, list[tuple[int, int]]]] = []
            if a in vmap and b in vmap:
                x, y = vmap[a], vmap[b]
                options.append(((min(x, y), max(x, y)), []))
            elif a in vmap or b in vmap:
                mapped, fresh = (a, b) if a in vmap else (b, a)
                u = vmap[mapped]
                w = next(i for i in range(n) if i not in used)
                options.append(((min(u, w), max(u, w)), [(fresh, w)]))
            else:
                free = [i for i in range(n) if i not in used][:2]
                x0, x1 = free[0], free[1]
                options.append(((x0, x1), [(a, x0), (b, x1)]))
                options.append(((x0, x1), [(a, x1), (b, x0)]))
            for pair, additions in options:
                if best_pair is None or pair < best_pair:
                    best_pair = pair
                    survivors = []
                if pair == best_pair:
                    new_map = dict(vmap)
                    new_used = set(used)
                    for src, dst in additions:
                        new_map[src] = dst
                        new_used.add(dst)
                    survivors.append((pair, new_map, new_used))
        assert best_pair is not None
        seq.append(best_pair)
        candidates = [(vmap, used) for _, vmap, used in survivors]
    return tuple(seq)


@dataclass(frozen=True)
class CanonicalCode:
    """Opaque code: equal codes iff the graphs are order-isomorphic."""

    data: bytes

    def __lt__(self, other: "CanonicalCode") -> bool:
        return self.data < other.data


def canonical_code(graph: EdgeOrderedGraph) -> CanonicalCode:
    seq = _min_edge_sequence(graph)
    body = ";".join(f"{u},{v}" for u, v in seq)
    return CanonicalCode(f"{graph.n}:{body}".encode("ascii"))


def canonical_form(graph: EdgeOrderedGraph) -> EdgeOrderedGraph:
    """The canonical representative of the order-isomorphism class."""
    seq = _min_edge_sequence(graph)
    return build_graph(graph.n, [(u, v, i + 1) for i, (u, v) in enumerate(seq)])


def enumerate_orderings(
    shape: EdgeOrderedGraph, max_labelings: int = DEFAULT_MAX_LABELINGS
) -> Iterator[EdgeOrderedGraph]:
    """One representative per order-isomorphism class of orderings of ``shape``.

    The ranks of ``shape`` are ignored; all ``m!`` labelings are generated
    and deduplicated by canonical code.  Yields in ascending code order.
    """
    m = shape.m
    if math.factorial(m) > max_labelings:
        raise BudgetExceeded(
            f"{m}! = {math.factorial(m)} labelings exceed budget {max_labelings}"
        )
    pairs = sorted(shape.pairs_by_rank)
    classes: dict[bytes, EdgeOrderedGraph] = {}
    for perm in permutations(range(1, m + 1)):
        edges = tuple(
            (u, v, r)
            for (u, v), r in sorted(zip(pairs, perm), key=lambda t: t[1])
        )
        candidate = EdgeOrderedGraph(shape.n, edges)
        code = canonical_code(candidate)
        if code.data not in classes:
            classes[code.data] = canonical_form(candidate)
    for code_bytes in sorted(classes):
        yield classes[code_bytes]


def chromatic_number(
    graph: EdgeOrderedGraph, max_vertices: int = DEFAULT_MAX_COLOR_VERTICES
) -> int:
    """Exact chromatic number of the underlying graph (small n only)."""
    n = graph.n
    if n > max_vertices:
        raise BudgetExceeded(f"exact coloring capped at {max_vertices} vertices")
    if n == 0:
        return 0
    if graph.m == 0:
        return 1
    adj = graph.adjacency
    order = sorted(range(n), key=lambda v: -len(adj[v]))

    # Greedy clique on the degree-sorted order gives a lower bound.
    clique: list[int] = []
    for v in order:
        if all(u in adj[v] for u in clique):
            clique.append(v)
    lower = len(clique)

    def colorable(k: int) -> bool:
        colors: dict[int, int] = {}

        def assign(idx: int, used: int) -> bool:
            if idx == n:
                return True
            v = order[idx]
            limit = min(used + 1, k)
            for c in range(limit):
                if all(colors.get(u) != c for u in adj[v]):
                    colors[v] = c
                    if assign(idx + 1, max(used, c + 1)):
                        return True
                    del colors[v]
            return False

        return assign(0, 0)

    for k in range(lower, n + 1):
        if colorable(k):
            return k
    return n
