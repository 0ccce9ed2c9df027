"""Isomorph-free generation of triangle-free graphs by canonical augmentation.

A child on n+1 vertices is a parent on n vertices plus a new vertex joined to
an independent set S of the parent (so no triangle appears). Two rules make
every isomorphism class appear exactly once:

* per parent, only the least S (as a mask) of each Aut(parent)-orbit is used;
* a child is kept only if its new vertex lies in the automorphism orbit of
  the canonically chosen deletion vertex: among vertices minimizing
  (degree, sum of neighbor degrees), the one with the largest canonical index.

The first rule plus the degree part of the second are checked before any
canonical labeling is computed, which keeps most children cheap to reject.
"""

from __future__ import annotations

from typing import Iterator

from .bitset import iter_bits
from .canon import canonical_labeling
from .graph import Graph

# internal generation is supported to this order; beyond it takes hours
MAX_GENERATED_N = 12
STRETCH_N = 13


class _Node:
    __slots__ = ("adj", "gens")

    def __init__(self, adj: tuple[int, ...], gens: list[list[int]] | None = None):
        self.adj = adj
        self.gens = gens

    def generators(self) -> list[list[int]]:
        if self.gens is None:
            self.gens = canonical_labeling(Graph(len(self.adj), self.adj)).generators
        return self.gens


def _apply(perm: list[int], mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= 1 << perm[v]
    return out


def _is_orbit_min(mask: int, gens: list[list[int]]) -> bool:
    if not gens:
        return True
    seen = {mask}
    stack = [mask]
    while stack:
        m = stack.pop()
        for g in gens:
            img = _apply(g, m)
            if img < mask:
                return False
            if img not in seen:
                seen.add(img)
                stack.append(img)
    return True


def _independent_sets(adj: tuple[int, ...], cap: int) -> Iterator[int]:
    """Independent sets of size <= cap in increasing-vertex DFS order."""
    n = len(adj)

    def go(start: int, cur: int, size: int, blocked: int) -> Iterator[int]:
        yield cur
        if size == cap:
            return
        for v in range(start, n):
            if not blocked >> v & 1:
                yield from go(v + 1, cur | 1 << v, size + 1, blocked | adj[v])

    yield from go(0, 0, 0, 0)


def _vertex_key(adj: list[int] | tuple[int, ...], deg: list[int], v: int) -> tuple[int, int]:
    return deg[v], sum(deg[u] for u in iter_bits(adj[v]))


def _children(parent: _Node) -> Iterator[_Node]:
    adj = parent.adj
    n = len(adj)
    deg = [row.bit_count() for row in adj]
    mindeg = min(deg) if deg else 0
    for s in _independent_sets(adj, mindeg + 1):
        k = s.bit_count()
        # new vertex must have minimum degree in the child
        if any(deg[v] + (s >> v & 1) < k for v in range(n)):
            continue
        if not _is_orbit_min(s, parent.generators()):
            continue
        cadj = [row | ((s >> v & 1) << n) for v, row in enumerate(adj)]
        cadj.append(s)
        cdeg = deg[:] + [k]
        for v in iter_bits(s):
            cdeg[v] += 1
        keys = [_vertex_key(cadj, cdeg, v) for v in range(n + 1)]
        best = min(keys)
        if keys[n] != best:
            continue
        cands = [v for v in range(n + 1) if keys[v] == best]
        ctuple = tuple(cadj)
        if len(cands) == 1:
            yield _Node(ctuple)
            continue
        res = canonical_labeling(Graph(n + 1, ctuple))
        perm = res.perm
        w = max(cands, key=lambda v: perm[v])
        if res.orbits[w] == res.orbits[n]:
            yield _Node(ctuple, res.generators)


_LEVELS: dict[int, list[_Node]] = {1: [_Node((0,), [])]}


def _level(n: int) -> list[_Node]:
    if n not in _LEVELS:
        parents = _level(n - 1)
        _LEVELS[n] = [c for p in parents for c in _children(p)]
    return _LEVELS[n]


def triangle_free_graphs(n: int, allow_stretch: bool = False) -> Iterator[Graph]:
    """Every triangle-free graph on ``n`` vertices once up to isomorphism, in a fixed order."""
    limit = STRETCH_N if allow_stretch else MAX_GENERATED_N
    if not 1 <= n <= limit:
        raise ValueError(f"triangle-free generation supports 1 <= n <= {limit}, got {n}")
    if n == 1:
        yield Graph(1, (0,))
        return
    # the last level is streamed, not stored
    for p in _level(n - 1):
        for c in _children(p):
            yield Graph(n, c.adj)


def triangle_free_count(n: int) -> int:
    return sum(1 for _ in triangle_free_graphs(n))
