"""Canonical labeling by colour refinement plus individualization search.

The search tree is the usual one: refine to an equitable ordered partition,
individualize each vertex of a target cell in turn, recurse until the
partition is discrete. The canonical leaf is the one whose relabeled
adjacency is lexicographically greatest. Automorphisms found by matching
leaves prune the tree two ways: jump back to the divergence level, and skip
target-cell vertices in the orbit of one already explored under the
pointwise stabilizer of the current prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bitset import iter_bits
from .graph import Graph

Cells = list[list[int]]


def refine(adj: Sequence[int], cells: Cells) -> Cells:
    """Coarsest equitable refinement; cell order is isomorphism invariant."""
    n = len(adj)
    while len(cells) < n:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new: Cells = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new.append(c)
            else:
                for sig in sorted(groups):
                    new.append(groups[sig])
        if len(new) == len(cells):
            return cells
        cells = new
    return cells


def _individualize(cells: Cells, i: int, v: int) -> Cells:
    rest = [u for u in cells[i] if u != v]
    return cells[:i] + [[v], rest] + cells[i + 1:]


def _code(adj: Sequence[int], lab: list[int]) -> tuple[int, ...]:
    pos = [0] * len(lab)
    for i, v in enumerate(lab):
        pos[v] = i
    rows = []
    for v in lab:
        r = 0
        for u in iter_bits(adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def orbits_of(n: int, generators: Sequence[Sequence[int]]) -> list[int]:
    """``orbit[v]`` = least vertex in the orbit of ``v``."""
    uf = _UnionFind(n)
    for g in generators:
        for v in range(n):
            uf.union(v, g[v])
    return [uf.find(v) for v in range(n)]


@dataclass
class CanonResult:
    lab: list[int]  # canonical position -> original vertex
    generators: list[list[int]]  # automorphisms as vertex maps
    orbits: list[int]

    @property
    def perm(self) -> list[int]:
        """Original vertex -> canonical position."""
        p = [0] * len(self.lab)
        for i, v in enumerate(self.lab):
            p[v] = i
        return p


class _Search:
    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.n = len(adj)
        self.first_lab: list[int] | None = None
        self.first_code: tuple[int, ...] | None = None
        self.first_seq: list[int] = []
        self.best_lab: list[int] | None = None
        self.best_code: tuple[int, ...] | None = None
        self.best_seq: list[int] = []
        self.generators: list[list[int]] = []

    def _automorphism(self, lab: list[int], other: list[int]) -> list[int]:
        g = [0] * self.n
        for a, b in zip(lab, other):
            g[a] = b
        return g

    @staticmethod
    def _common(a: list[int], b: list[int]) -> int:
        k = 0
        for x, y in zip(a, b):
            if x != y:
                break
            k += 1
        return k

    def leaf(self, cells: Cells, seq: list[int]) -> int:
        """Process a discrete partition; return the level to resume at."""
        lab = [c[0] for c in cells]
        code = _code(self.adj, lab)
        if self.first_code is None:
            self.first_lab, self.first_code, self.first_seq = lab, code, list(seq)
            self.best_lab, self.best_code, self.best_seq = lab, code, list(seq)
            return len(seq)
        if code == self.first_code:
            self.generators.append(self._automorphism(lab, self.first_lab))
            return self._common(seq, self.first_seq)
        if code == self.best_code:
            self.generators.append(self._automorphism(lab, self.best_lab))
            return self._common(seq, self.best_seq)
        if code > self.best_code:
            self.best_lab, self.best_code, self.best_seq = lab, code, list(seq)
        return len(seq)

    def run(self, cells: Cells, seq: list[int]) -> int:
        cells = refine(self.adj, cells)
        depth = len(seq)
        if len(cells) == self.n:
            return self.leaf(cells, seq)
        # first smallest non-singleton cell
        target = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: len(cells[i]))
        tried: list[int] = []
        for v in sorted(cells[target]):
            if tried:
                stab = [g for g in self.generators if all(g[u] == u for u in seq)]
                if stab:
                    orb = orbits_of(self.n, stab)
                    if any(orb[v] == orb[u] for u in tried):
                        continue
            tried.append(v)
            back = self.run(_individualize(cells, target, v), seq + [v])
            if back < depth:
                return back
        return depth


def canonical_labeling(g: Graph, cells: Cells | None = None) -> CanonResult:
    """Canonical labeling of ``g``, optionally respecting an ordered vertex colouring."""
    if g.n == 0:
        return CanonResult([], [], [])
    start = [list(c) for c in cells] if cells is not None else [list(range(g.n))]
    s = _Search(g.adj)
    s.run(start, [])
    assert s.best_lab is not None
    return CanonResult(s.best_lab, s.generators, orbits_of(g.n, s.generators))


def canonical_form(g: Graph) -> Graph:
    res = canonical_labeling(g)
    return g.relabel(res.perm) if g.n else g


def canonical_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Hashable key equal for two graphs iff they are isomorphic."""
    return (g.n, canonical_form(g).adj)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)
