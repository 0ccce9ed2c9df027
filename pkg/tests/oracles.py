"""Slow, obviously-correct reference implementations used only by the tests.

Nothing here imports the search code it checks; graphs are read through
``Graph.n`` / ``Graph.has_edge`` only.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx

from domhad.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from((u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.has_edge(u, v))
    return G


def from_nx(G: nx.Graph) -> Graph:
    nodes = sorted(G.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(pos[u], pos[v]) for u, v in G.edges()])


def connected(g: Graph, s: frozenset) -> bool:
    if not s:
        return False
    start = next(iter(s))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in s:
            if u not in seen and g.has_edge(u, v):
                seen.add(u)
                stack.append(u)
    return seen == set(s)


def connected_sets(g: Graph) -> list[frozenset]:
    out = []
    for r in range(1, g.n + 1):
        for c in itertools.combinations(range(g.n), r):
            s = frozenset(c)
            if connected(g, s):
                out.append(s)
    return out


def naive_hd(g: Graph) -> int:
    """Max length over all ordered sequences of dominating branch sets.

    Only pruning: stop a branch once depth + unused vertices cannot beat the best.
    """
    sets = connected_sets(g)
    best = [0]

    def dominated(t: frozenset, p: frozenset) -> bool:
        return all(any(g.has_edge(v, u) for u in p) for v in t)

    def go(used: frozenset, prev: list, depth: int) -> None:
        best[0] = max(best[0], depth)
        if depth + g.n - len(used) <= best[0]:
            return
        for t in sets:
            if t & used:
                continue
            if all(dominated(t, p) for p in prev):
                go(used | t, prev + [t], depth + 1)

    go(frozenset(), [], 0)
    return best[0]


def naive_has_kt_minor(g: Graph, t: int) -> bool:
    sets = connected_sets(g)

    def touch(a, b):
        return any(g.has_edge(u, v) for u in a for v in b)

    def go(used, prev):
        if len(prev) == t:
            return True
        for s in sets:
            if s & used:
                continue
            if prev and min(s) < min(prev[-1]):
                continue
            if all(touch(s, p) for p in prev) and go(used | s, prev + [s]):
                return True
        return False

    return go(frozenset(), [])


def brute_matching(g: Graph) -> int:
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.has_edge(u, v)]
    best = 0

    def go(i, used, size):
        nonlocal best
        best = max(best, size)
        if size + (len(edges) - i) <= best:
            return
        for j in range(i, len(edges)):
            u, v = edges[j]
            if u not in used and v not in used:
                go(j + 1, used | {u, v}, size + 1)

    go(0, frozenset(), 0)
    return best


def brute_chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n - 1):
            col = (0,) + col
            if all(col[u] != col[v] for u in range(g.n) for v in range(u + 1, g.n) if g.has_edge(u, v)):
                return k
    return g.n


def brute_clique(g: Graph) -> int:
    for r in range(g.n, 0, -1):
        for c in itertools.combinations(range(g.n), r):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(c, 2)):
                return r
    return 0


def brute_alpha(g: Graph) -> int:
    for r in range(g.n, 0, -1):
        for c in itertools.combinations(range(g.n), r):
            if not any(g.has_edge(u, v) for u, v in itertools.combinations(c, 2)):
                return r
    return 0


def naive_find_induced(g: Graph, h: Graph) -> bool:
    for img in itertools.permutations(range(g.n), h.n):
        if all(h.has_edge(u, v) == g.has_edge(img[u], img[v]) for u, v in itertools.combinations(range(h.n), 2)):
            return True
    return False


def seagulls(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for b in range(g.n):
        for a, c in itertools.combinations(range(g.n), 2):
            if b not in (a, c) and g.has_edge(a, b) and g.has_edge(b, c) and not g.has_edge(a, c):
                out.append((a, b, c))
    return out


def brute_seagull_packing(g: Graph) -> int:
    gulls = seagulls(g)
    best = 0

    def go(i, used, size):
        nonlocal best
        best = max(best, size)
        if size + (g.n - len(used)) // 3 <= best:
            return
        for j in range(i, len(gulls)):
            s = set(gulls[j])
            if not s & used:
                go(j + 1, used | s, size + 1)

    go(0, frozenset(), 0)
    return best


def brute_min_capacity2(g: Graph) -> int:
    """Twice the minimum capacity over all non-empty cliques."""
    best = None
    for r in range(1, g.n + 1):
        for c in itertools.combinations(range(g.n), r):
            if not all(g.has_edge(u, v) for u, v in itertools.combinations(c, 2)):
                continue
            star = 0
            for v in range(g.n):
                if v in c:
                    continue
                k = sum(g.has_edge(v, u) for u in c)
                if 0 < k < len(c):
                    star += 1
            val = g.n + star - len(c)
            best = val if best is None else min(best, val)
    return best


def brute_connectivity(g: Graph) -> int:
    n = g.n
    if n <= 1:
        return 0
    for k in range(0, n - 1):
        for cut in itertools.combinations(range(n), k):
            rest = frozenset(range(n)) - set(cut)
            if len(rest) >= 2 and not connected(g, rest):
                return k
    return n - 1


@lru_cache(maxsize=None)
def atlas(n: int) -> tuple[Graph, ...]:
    """All graphs on n <= 7 vertices up to isomorphism, from the networkx atlas."""
    return tuple(from_nx(G) for G in nx.graph_atlas_g() if G.number_of_nodes() == n)


def alpha_le_2_ref(g: Graph) -> bool:
    return not any(
        not g.has_edge(a, b) and not g.has_edge(a, c) and not g.has_edge(b, c)
        for a, b, c in itertools.combinations(range(g.n), 3)
    )


@lru_cache(maxsize=None)
def reference_alpha2(n: int) -> tuple[Graph, ...]:
    """alpha <= 2 graphs on n vertices, independent of the package's generator.

    n <= 7 filters the atlas; n = 8 extends the n = 7 list by one vertex in
    every way and deduplicates with networkx isomorphism tests.
    """
    if n <= 7:
        return tuple(g for g in atlas(n) if alpha_le_2_ref(g))
    if n != 8:
        raise ValueError("reference enumeration only up to n = 8")
    buckets: dict[str, list[nx.Graph]] = {}
    out = []
    for g in reference_alpha2(7):
        for nb in range(1 << 7):
            edges = [(u, v) for u in range(7) for v in range(u + 1, 7) if g.has_edge(u, v)]
            edges += [(u, 7) for u in range(7) if nb >> u & 1]
            h = Graph.from_edges(8, edges)
            if not alpha_le_2_ref(h):
                continue
            H = to_nx(h)
            key = nx.weisfeiler_lehman_graph_hash(H)
            bucket = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(H, other) for other in bucket):
                continue
            bucket.append(H)
            out.append(h)
    return tuple(out)
