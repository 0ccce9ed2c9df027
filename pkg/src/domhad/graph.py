"""Immutable simple graphs on at most 64 vertices, stored as neighbor bitmasks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .bitset import bits_of, full, iter_bits, lowest

MAX_VERTICES = 64


class GraphSizeError(ValueError):
    """Raised when a graph would exceed the 64-vertex limit."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbors of ``v``. Equality and hashing
    depend on ``n`` and ``adj`` only; ``label`` is cosmetic.
    """

    n: int
    adj: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphSizeError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        allowed = full(self.n)
        for v, row in enumerate(self.adj):
            if row & ~allowed:
                raise ValueError(f"vertex {v} has neighbors outside [0, {self.n})")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], label: str = "") -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise GraphSizeError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), label)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    # --- queries -------------------------------------------------------

    @property
    def vertices(self) -> int:
        """Mask of all vertices."""
        return full(self.n)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield u, v

    def neighborhood(self, mask: int) -> int:
        """Vertices with at least one neighbor in ``mask``."""
        out = 0
        for v in iter_bits(mask):
            out |= self.adj[v]
        return out

    def is_clique(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in iter_bits(mask))

    def is_connected_set(self, mask: int) -> bool:
        """Whether ``mask`` is non-empty and induces a connected subgraph."""
        if not mask:
            return False
        return self.reach(lowest(mask), mask) == mask

    def reach(self, start: int, within: int) -> int:
        """Vertices of ``within`` reachable from ``start`` inside ``within``."""
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    # --- derived graphs ------------------------------------------------

    def induced(self, mask: int) -> tuple["Graph", list[int]]:
        """Subgraph induced on ``mask`` plus the list mapping new -> old indices."""
        old = bits_of(mask)
        pos = {v: i for i, v in enumerate(old)}
        adj = []
        for v in old:
            row = 0
            for u in iter_bits(self.adj[v] & mask):
                row |= 1 << pos[u]
            adj.append(row)
        return Graph(len(old), tuple(adj)), old

    def delete(self, v: int) -> "Graph":
        return self.induced(self.vertices & ~(1 << v))[0]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph where old vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.n, tuple(adj))

    def with_label(self, label: str) -> "Graph":
        return Graph(self.n, self.adj, label)

    def __repr__(self) -> str:
        tag = f" {self.label!r}" if self.label else ""
        return f"<Graph{tag} n={self.n} m={self.m}>"


def complement(g: Graph) -> Graph:
    allowed = g.vertices
    adj = tuple(allowed & ~row & ~(1 << v) for v, row in enumerate(g.adj))
    return Graph(g.n, adj)


def _disjoint(g: Graph, h: Graph, cross: bool) -> Graph:
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphSizeError(f"composition has {n} vertices, limit is {MAX_VERTICES}")
    lo, hi = g.vertices, h.vertices << g.n
    adj = [row | (hi if cross else 0) for row in g.adj]
    adj += [(row << g.n) | (lo if cross else 0) for row in h.adj]
    return Graph(n, tuple(adj))


def join(*graphs: Graph) -> Graph:
    """Disjoint union plus every edge between different arguments."""
    out = Graph.empty(0)
    for h in graphs:
        out = _disjoint(out, h, cross=True)
    return out


def union(*graphs: Graph) -> Graph:
    out = Graph.empty(0)
    for h in graphs:
        out = _disjoint(out, h, cross=False)
    return out


def copies(k: int, g: Graph) -> Graph:
    if k < 0:
        raise ValueError("copy count must be non-negative")
    return union(*([g] * k))


def subdivide_once(g: Graph) -> Graph:
    """Replace every edge uv by a path u-s-v through a fresh vertex s.

    Fresh vertices are numbered ``n, n+1, ...`` in edge order.
    """
    edges = list(g.edges())
    n = g.n + len(edges)
    if n > MAX_VERTICES:
        raise GraphSizeError(f"subdivision has {n} vertices, limit is {MAX_VERTICES}")
    new_edges = []
    for i, (u, v) in enumerate(edges):
        s = g.n + i
        new_edges += [(u, s), (s, v)]
    return Graph.from_edges(n, new_edges)


def build(op: str, *args: Graph, k: int | None = None) -> Graph:
    """Dispatch ``join | union | copies | subdivide_once`` by name."""
    if op == "join":
        return join(*args)
    if op == "union":
        return union(*args)
    if op == "copies":
        if k is None or len(args) != 1:
            raise ValueError("copies needs k and exactly one graph")
        return copies(k, args[0])
    if op == "subdivide_once":
        if len(args) != 1:
            raise ValueError("subdivide_once takes exactly one graph")
        return subdivide_once(args[0])
    raise ValueError(f"unknown build op {op!r}")


def components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by least vertex."""
    out = []
    left = g.vertices
    while left:
        comp = g.reach(lowest(left), left)
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    # n = 0 counts as connected
    return len(components(g)) <= 1


def _local_connectivity(g: Graph, s: int, t: int) -> int:
    """Max number of internally disjoint s-t paths (s, t non-adjacent).

    Unit-capacity max-flow on the vertex-split digraph: v_in = 2v, v_out = 2v+1.
    """
    cap: dict[tuple[int, int], int] = {}
    nbrs: dict[int, list[int]] = {i: [] for i in range(2 * g.n)}

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            nbrs[a].append(b)
            nbrs[b].append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    big = g.n
    for v in range(g.n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in nbrs[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Vertex connectivity; ``n - 1`` for complete graphs, 0 when disconnected."""
    n = g.n
    if n <= 1:
        return 0
    if not is_connected(g):
        return 0
    best = n - 1
    for s in range(n):
        non = g.vertices & ~g.adj[s] & ~((1 << (s + 1)) - 1)
        for t in iter_bits(non):
            best = min(best, _local_connectivity(g, s, t))
    return best
