"""Slow, obviously-correct reference implementations for the test suite.

Nothing in this module shares logic with the library under test. Factor
existence is decided by scanning all 2^m edge subsets, trail existence by
enumerating every alternating walk, and layered walks by taking the full
product of the layer sets. The point is that the two sides can disagree,
and when they do the library is wrong until proven otherwise.
"""

from __future__ import annotations

import random
from itertools import combinations

from kfactor import Graph, KLimitedSubgraph

# ---------------------------------------------------------------------------
# factor-level references


def all_factors(g: Graph, k: int) -> list[tuple[int, ...]]:
    """Every edge-id set whose induced degrees are all exactly k, sorted."""
    hits = []
    for bits in range(1 << g.m):
        deg = [0] * g.n
        for e in range(g.m):
            if bits >> e & 1:
                u, v = g.endpoints[e]
                deg[u] += 1
                deg[v] += 1
        if all(d == k for d in deg):
            hits.append(tuple(e for e in range(g.m) if bits >> e & 1))
    return sorted(hits)


def has_factor(g: Graph, k: int) -> bool:
    return bool(all_factors(g, k))


# ---------------------------------------------------------------------------
# trail-level references


def augmenting_trails(g: Graph, m: KLimitedSubgraph) -> list[tuple[int, ...]]:
    """Every directed augmenting trail for m, as dart tuples.

    Plain depth-first enumeration over dart sequences: first dart blue from
    an unfilled start, strict blue/red alternation, pairwise-distinct
    edges. After each blue dart the walk may stop if the head is unfilled
    (the head equalling the start needs degree(start) < k - 1); it may
    continue, with either parity, only through a filled head.
    """
    k = m.k
    deg = m.deg
    in_m = m.in_m
    found: list[tuple[int, ...]] = []

    def grow(start: int, darts: list[int], used: set[int]) -> None:
        i = len(darts) - 1
        head = g.dart_heads[darts[-1]]
        if i % 2 == 0 and deg[head] < k and (head != start or deg[start] < k - 1):
            found.append(tuple(darts))
        if deg[head] != k:
            return
        want_red = i % 2 == 0
        for d in g.adjacency[head]:
            e = d >> 1
            if e in used or (e in in_m) != want_red:
                continue
            darts.append(d)
            used.add(e)
            grow(start, darts, used)
            darts.pop()
            used.discard(e)

    for start in range(g.n):
        if deg[start] == k:
            continue
        for d in g.adjacency[start]:
            e = d >> 1
            if e in in_m:
                continue
            grow(start, [d], {e})
    return found


def has_augmenting_trail(g: Graph, m: KLimitedSubgraph) -> bool:
    return bool(augmenting_trails(g, m))


# ---------------------------------------------------------------------------
# layered-graph references


def layer_walks(layered) -> list[tuple[int, ...]]:
    """All complete head-to-tail chained walks, one dart per layer."""
    heads = layered.graph.dart_heads
    tails = layered.graph.dart_tails
    walks = [(d,) for d in sorted(layered.layers[0]) if tails[d] == layered.start]
    for layer in layered.layers[1:]:
        step = sorted(layer)
        walks = [w + (d,) for w in walks for d in step if tails[d] == heads[w[-1]]]
        if not walks:
            return []
    return walks


def distinct_layer_walks(layered) -> list[tuple[int, ...]]:
    """Complete walks that never repeat a dart."""
    return [w for w in layer_walks(layered) if len(set(w)) == len(w)]


# ---------------------------------------------------------------------------
# graph builders


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, list(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i + 1) for i in range(leaves)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def bowtie_graph() -> Graph:
    """Two triangles sharing vertex 2."""
    return Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


# ---------------------------------------------------------------------------
# randomized instances


def all_klimited(g: Graph, k: int) -> list[KLimitedSubgraph]:
    """Every k-limited spanning subgraph of g (2^m scan)."""
    out = []
    for bits in range(1 << g.m):
        deg = [0] * g.n
        ok = True
        for e in range(g.m):
            if bits >> e & 1:
                u, v = g.endpoints[e]
                deg[u] += 1
                deg[v] += 1
                if deg[u] > k or deg[v] > k:
                    ok = False
                    break
        if ok:
            edges = [e for e in range(g.m) if bits >> e & 1]
            out.append(KLimitedSubgraph.from_edges(g, k, edges))
    return out


def random_klimited(g: Graph, k: int, rng: random.Random) -> KLimitedSubgraph:
    """Random greedy k-limited subgraph; each admissible edge joins with p=1/2."""
    m = KLimitedSubgraph(g, k)
    order = list(range(g.m))
    rng.shuffle(order)
    picked = []
    deg = [0] * g.n
    for e in order:
        u, v = g.endpoints[e]
        if deg[u] < k and deg[v] < k and rng.random() < 0.5:
            deg[u] += 1
            deg[v] += 1
            picked.append(e)
    return KLimitedSubgraph.from_edges(g, k, picked)


def planted_state(g: Graph, k: int, s: int, rng: random.Random) -> KLimitedSubgraph:
    """Greedy fill that starves vertex s, leaving it short by at least two.

    Every other vertex is driven toward degree k while s is capped at
    k - 2, the shape where a trail from s tends to fold back through an
    odd cycle. Needs k >= 2.
    """
    cap = [k] * g.n
    cap[s] = k - 2
    order = list(range(g.m))
    rng.shuffle(order)
    picked = []
    deg = [0] * g.n
    for e in order:
        u, v = g.endpoints[e]
        if deg[u] < cap[u] and deg[v] < cap[v]:
            deg[u] += 1
            deg[v] += 1
            picked.append(e)
    return KLimitedSubgraph.from_edges(g, k, picked)
