"""Induced subgraph containment and H-freeness."""

from __future__ import annotations

from typing import Iterable

from .catalog import catalog
from .graph import Graph


def pattern_order(h: Graph) -> list[int]:
    """Static processing order: highest degree first, least index on ties."""
    return sorted(range(h.n), key=lambda u: (-h.degree(u), u))


def find_induced(g: Graph, h: Graph) -> dict[int, int] | None:
    """Injective map V(H) -> V(G) preserving adjacency and non-adjacency, or None.

    Pattern vertices are placed in :func:`pattern_order` and host candidates
    are tried in increasing order, so the witness returned is the
    lexicographically least image sequence taken in that order.
    """
    if h.n > g.n:
        return None
    if h.n == 0:
        return {}
    order = pattern_order(h)
    gdeg = g.degrees()
    gnon = [g.n - 1 - d for d in gdeg]
    hdeg = [h.degree(u) for u in order]
    hnon = [h.n - 1 - d for d in hdeg]
    # for each position, earlier positions adjacent / non-adjacent in H
    earlier_adj = []
    earlier_non = []
    for i, u in enumerate(order):
        earlier_adj.append([j for j in range(i) if h.has_edge(u, order[j])])
        earlier_non.append([j for j in range(i) if not h.has_edge(u, order[j])])
    # host candidates admissible by degree alone
    base = []
    for i in range(h.n):
        m = 0
        for x in range(g.n):
            if gdeg[x] >= hdeg[i] and gnon[x] >= hnon[i]:
                m |= 1 << x
        base.append(m)

    img = [0] * h.n
    allv = g.vertices

    def go(i: int, used: int) -> bool:
        if i == h.n:
            return True
        cand = base[i] & ~used
        for j in earlier_adj[i]:
            cand &= g.adj[img[j]]
        for j in earlier_non[i]:
            cand &= allv & ~g.adj[img[j]]
        while cand:
            low = cand & -cand
            x = low.bit_length() - 1
            img[i] = x
            if go(i + 1, used | low):
                return True
            cand ^= low
        return False

    if not go(0, 0):
        return None
    return {order[i]: img[i] for i in range(h.n)}


def contains_induced(g: Graph, h: Graph) -> bool:
    return find_induced(g, h) is not None


def is_free(g: Graph, names: Iterable[str]) -> dict[str, bool]:
    """name -> True when ``g`` has no induced copy of the catalog graph ``name``."""
    out = {}
    for name in names:
        out[name] = find_induced(g, catalog(name)) is None
    return out
