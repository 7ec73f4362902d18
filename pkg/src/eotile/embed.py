"""Order-preserving subgraph embedding and its specialized searches.

The engine maps the pattern's edges in rank order, so partial maps are
pruned by how many host ranks remain above the last used one.  Every
public search returns certificates that re-verify with
:func:`verify_embedding`, which is deliberately a plain double loop,
independent of the search code.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterator, Optional

from .canonical import ALL_STAR_TYPES, StarType, star_canonical_clique, star_subclique_matches
from .core import EdgeOrderedGraph, build_graph
from .errors import (
    BadSize,
    BadVertex,
    BudgetExceeded,
    Inconclusive,
    MissingEdge,
    NotComplete,
)


@dataclass(frozen=True)
class Embedding:
    """Injective vertex map; index = pattern vertex, value = host vertex."""

    vertex_map: tuple[int, ...]

    def apply(self, v: int) -> int:
        return self.vertex_map[v]

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.vertex_map)

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.vertex_map))


@dataclass(frozen=True)
class SearchBudget:
    """Node and wall-clock caps for backtracking searches."""

    node_limit: int = 20_000_000
    time_limit: float = 120.0

    def __post_init__(self) -> None:
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = SearchBudget()


@dataclass
class _Meter:
    budget: SearchBudget
    nodes: int = 0
    started: float = field(default_factory=time.monotonic)

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise Inconclusive(f"node budget {self.budget.node_limit} exhausted")
        if self.nodes % 4096 == 0:
            if time.monotonic() - self.started > self.budget.time_limit:
                raise Inconclusive(f"time budget {self.budget.time_limit}s exhausted")


def verify_embedding(pattern: EdgeOrderedGraph, host: EdgeOrderedGraph, emb: Embedding) -> bool:
    """Independent check: injective, edges land on edges, order preserved."""
    vm = emb.vertex_map
    if len(vm) != pattern.n:
        return False
    if len(set(vm)) != len(vm):
        return False
    if any(not (0 <= h < host.n) for h in vm):
        return False
    image_ranks = []
    for u, v, _ in pattern.edges:  # pattern edges ascending by rank
        r = host.rank_of(vm[u], vm[v])
        if r is None:
            return False
        image_ranks.append(r)
    return all(a < b for a, b in zip(image_ranks, image_ranks[1:]))


def _host_incidence(host: EdgeOrderedGraph) -> list[list[int]]:
    """For each vertex, the ascending rank indices of its incident edges."""
    incidence: list[list[int]] = [[] for _ in range(host.n)]
    for idx, (u, v) in enumerate(host.pairs_by_rank):
        incidence[u].append(idx)
        incidence[v].append(idx)
    return incidence


def _embeddings(
    pattern: EdgeOrderedGraph,
    host: EdgeOrderedGraph,
    meter: _Meter,
    fill_isolated: bool,
) -> Iterator[tuple[dict[int, int], set[int]]]:
    """All edge-part embeddings; optionally extended over isolated vertices.

    Yields (vertex map, used host vertices).  With ``fill_isolated`` the
    map is total, isolated pattern vertices taking the smallest unused
    host vertices; otherwise it covers only non-isolated vertices.
    """
    if pattern.n > host.n or pattern.m > host.m:
        return
    fpairs = pattern.pairs_by_rank
    hpairs = host.pairs_by_rank
    mf, mh = len(fpairs), len(hpairs)
    incidence = _host_incidence(host)
    fmap: dict[int, int] = {}
    used: set[int] = set()

    def complete() -> tuple[dict[int, int], set[int]]:
        if not fill_isolated:
            return dict(fmap), set(used)
        full = dict(fmap)
        taken = set(used)
        spare = iter(v for v in range(host.n) if v not in taken)
        for v in range(pattern.n):
            if v not in full:
                nxt = next(spare)
                full[v] = nxt
                taken.add(nxt)
        return full, taken

    def candidates(i: int, floor: int) -> Iterator[int]:
        a, b = fpairs[i]
        ceiling = mh - (mf - i - 1)  # leave room for the remaining pattern edges
        if a in fmap and b in fmap:
            r = host.rank_of(fmap[a], fmap[b])
            if r is not None and floor <= r - 1 < ceiling:
                yield r - 1
            return
        if a in fmap or b in fmap:
            anchor = fmap[a] if a in fmap else fmap[b]
            for idx in incidence[anchor]:
                if floor <= idx < ceiling:
                    yield idx
            return
        yield from range(floor, ceiling)

    def place(i: int, floor: int) -> Iterator[tuple[dict[int, int], set[int]]]:
        meter.tick()
        if i == mf:
            yield complete()
            return
        a, b = fpairs[i]
        for idx in candidates(i, floor):
            c, d = hpairs[idx]
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
                        added.append(src)
                if ok:
                    yield from place(i + 1, idx + 1)
                for src in added:
                    used.discard(fmap.pop(src))

    yield from place(0, 0)


def find_embedding(
    pattern: EdgeOrderedGraph,
    host: EdgeOrderedGraph,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Optional[Embedding]:
    """First order-preserving embedding in deterministic search order.

    Returns None only when the full search space was exhausted; a budget
    overrun raises :class:`Inconclusive` instead.
    """
    meter = _Meter(budget)
    for full, _ in _embeddings(pattern, host, meter, fill_isolated=True):
        emb = Embedding(tuple(full[v] for v in range(pattern.n)))
        assert verify_embedding(pattern, host, emb)
        return emb
    return None


def iter_embeddings(
    pattern: EdgeOrderedGraph,
    host: EdgeOrderedGraph,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Iterator[Embedding]:
    """All embeddings (isolated vertices filled canonically, one way each)."""
    meter = _Meter(budget)
    for full, _ in _embeddings(pattern, host, meter, fill_isolated=True):
        yield Embedding(tuple(full[v] for v in range(pattern.n)))


def count_injections(
    pattern: EdgeOrderedGraph,
    host: EdgeOrderedGraph,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> int:
    """Number of injective order-preserving maps V(pattern) -> V(host)."""
    meter = _Meter(budget)
    isolated = len(pattern.isolated_vertices())
    total = 0
    for _, used in _embeddings(pattern, host, meter, fill_isolated=False):
        total += math.perm(host.n - len(used), isolated)
    return total


def count_order_automorphisms(pattern: EdgeOrderedGraph) -> int:
    """Order-preserving automorphisms; divides the injection count evenly."""
    return count_injections(pattern, pattern)


def count_copies(
    pattern: EdgeOrderedGraph,
    host: EdgeOrderedGraph,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> int:
    """Number of subgraphs of ``host`` order-isomorphic to ``pattern``.

    Copies are subgraphs: embeddings differing by an automorphism of the
    pattern certify the same copy, so the injection count divides evenly.
    Counting cannot return partial answers, so budget overruns surface as
    BudgetExceeded rather than Inconclusive.
    """
    try:
        injections = count_injections(pattern, host, budget)
        auts = count_order_automorphisms(pattern)
    except Inconclusive as exc:
        raise BudgetExceeded(f"copy count over budget: {exc}") from exc
    assert injections % auts == 0
    return injections // auts


def monotone_path_graph(k: int) -> EdgeOrderedGraph:
    """The monotone path with k edges: ranks increase along the traversal."""
    if k < 1:
        raise BadSize(f"monotone path needs k >= 1, got {k}")
    return build_graph(k + 1, [(i, i + 1, i + 1) for i in range(k)])


def _greedy_monotone_path(host: EdgeOrderedGraph, k: int) -> Optional[list[int]]:
    """Cheap first pass: grow from each edge, always taking the smallest
    feasible continuation.  No completeness guarantee; the backtracking
    pass behind it has one."""
    incidence = _host_incidence(host)
    hpairs = host.pairs_by_rank
    for idx, (u, v) in enumerate(hpairs):
        for path in ([u, v], [v, u]):
            last = idx
            walk = list(path)
            while len(walk) <= k:
                head = walk[-1]
                nxt = next(
                    (
                        j
                        for j in incidence[head]
                        if j > last
                        and (hpairs[j][0] if hpairs[j][1] == head else hpairs[j][1])
                        not in walk
                    ),
                    None,
                )
                if nxt is None:
                    break
                last = nxt
                a, b = hpairs[nxt]
                walk.append(a if b == head else b)
            if len(walk) == k + 1:
                return walk
    return None


def find_monotone_path(
    host: EdgeOrderedGraph,
    k: int,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Optional[Embedding]:
    """A monotone path of length k, or None when none exists.

    Greedy pass first, then complete backtracking, so absence of a result
    is a proof.  Dense hosts (at least k(k+1)n/2 edges) always succeed.
    """
    pattern = monotone_path_graph(k)
    walk = _greedy_monotone_path(host, k)
    if walk is not None:
        emb = Embedding(tuple(walk))
        assert verify_embedding(pattern, host, emb)
        return emb
    return find_embedding(pattern, host, budget)


def monotone_star_subsequence(host: EdgeOrderedGraph, x: int) -> tuple[int, ...]:
    """Longest run of neighbors of ``x`` (in vertex order) with monotone ranks.

    Ties between increasing and decreasing go to increasing; within a
    direction the lexicographically smallest neighbor sequence wins.
    """
    if not (0 <= x < host.n):
        raise BadVertex(f"vertex {x} not in graph")
    neighbors = sorted(host.adjacency[x])
    ranks = [host.rank_of(x, v) for v in neighbors]
    d = len(ranks)
    if d == 0:
        return ()

    def longest(greater) -> list[int]:
        # tail[i] = best run length starting at i; rebuild smallest indices.
        tail = [1] * d
        for i in range(d - 2, -1, -1):
            for j in range(i + 1, d):
                if greater(ranks[j], ranks[i]):
                    tail[i] = max(tail[i], 1 + tail[j])
        best = max(tail)
        out: list[int] = []
        prev: Optional[int] = None
        need = best
        for i in range(d):
            if tail[i] == need and (prev is None or greater(ranks[i], ranks[prev])):
                out.append(i)
                prev = i
                need -= 1
                if need == 0:
                    break
        return out

    inc = longest(lambda a, b: a > b)
    dec = longest(lambda a, b: a < b)
    chosen = inc if len(inc) >= len(dec) else dec
    return tuple(neighbors[i] for i in chosen)


class StarColor(Enum):
    """Trichotomy of a pair edge against its two edges to a center vertex."""

    B = "B"
    M = "M"
    S = "S"


def star_edge_coloring(
    host: EdgeOrderedGraph, x: int, pair: tuple[int, int]
) -> StarColor:
    """B if both x-edges are above the pair edge, S if both below, else M."""
    vi, vj = pair
    if len({x, vi, vj}) != 3:
        raise BadVertex("center and pair vertices must be distinct")
    r_pair = host.rank_of(vi, vj)
    r_xi = host.rank_of(x, vi)
    r_xj = host.rank_of(x, vj)
    if r_pair is None or r_xi is None or r_xj is None:
        raise MissingEdge(f"coloring needs edges {x}-{vi}, {x}-{vj}, {vi}-{vj}")
    if r_xi > r_pair and r_xj > r_pair:
        return StarColor.B
    if r_xi < r_pair and r_xj < r_pair:
        return StarColor.S
    return StarColor.M


def find_star_canonical_subclique(
    host: EdgeOrderedGraph,
    x: int,
    f: int,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Optional[tuple[StarType, Embedding]]:
    """Direct search for an f-subset through ``x`` inducing a star-canonical
    ordering; returns its type and the embedding of the generated clique.

    Subsets are scanned in lexicographic order and types in the fixed
    check order, so the result is deterministic.
    """
    if not host.is_complete():
        raise NotComplete("subclique search requires a complete host")
    if not (0 <= x < host.n):
        raise BadVertex(f"vertex {x} not in graph")
    if f < 3 or f > host.n:
        raise BadSize(f"subclique size {f} out of range 3..{host.n}")
    meter = _Meter(budget)
    others = [v for v in range(host.n) if v != x]
    for rest in combinations(others, f - 1):
        meter.tick()
        subset = tuple(sorted((x, *rest)))
        for kind in ALL_STAR_TYPES:
            order = star_subclique_matches(host, subset, x, kind)
            if order is not None:
                emb = Embedding((*order, x))
                generated, _ = star_canonical_clique(kind, f)
                assert verify_embedding(generated, host, emb)
                return kind, emb
    return None
