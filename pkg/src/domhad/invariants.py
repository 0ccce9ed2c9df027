"""Exact graph invariants: independence, clique and chromatic numbers, matchings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bitset import bits_of, iter_bits
from .graph import Graph, complement

# exact colouring of graphs that are not alpha <= 2 is a test oracle, not a workhorse
CHI_EXACT_LIMIT = 16


class ChromaticLimitError(ValueError):
    pass


# --- cliques ----------------------------------------------------------------


def degeneracy_order(adj: Sequence[int], within: int) -> list[int]:
    """Repeatedly remove a minimum-degree vertex (least index on ties)."""
    left = within
    order = []
    while left:
        best, bd = -1, 1 << 30
        for v in iter_bits(left):
            d = (adj[v] & left).bit_count()
            if d < bd:
                best, bd = v, d
        order.append(best)
        left &= ~(1 << best)
    return order


def _color_sort(adj: Sequence[int], order: list[int], p: int) -> tuple[list[int], list[int]]:
    """Greedy colouring of ``p`` following ``order``; returns vertices by class and bounds."""
    verts, bounds = [], []
    left = p
    color = 0
    while left:
        color += 1
        avail = left
        for v in order:
            if avail >> v & 1:
                verts.append(v)
                bounds.append(color)
                avail &= ~adj[v] & ~(1 << v)
                left &= ~(1 << v)
    return verts, bounds


def max_clique(g: Graph, within: int | None = None, lower: int = 0) -> int:
    """A maximum clique of ``g[within]`` as a mask.

    Branch and bound with greedy-colouring bounds over a degeneracy ordering
    (last-removed vertices first). With ``lower`` set, only cliques strictly
    larger than ``lower`` are searched for and 0 is returned if none exists.
    """
    adj = g.adj
    if within is None:
        within = g.vertices
    order = degeneracy_order(adj, within)[::-1]
    best = [0, lower]  # mask, size

    def expand(r: int, rsize: int, p: int) -> None:
        verts, bounds = _color_sort(adj, order, p)
        for i in range(len(verts) - 1, -1, -1):
            if rsize + bounds[i] <= best[1]:
                return
            v = verts[i]
            bit = 1 << v
            newp = p & adj[v]
            if newp:
                expand(r | bit, rsize + 1, newp)
            elif rsize + 1 > best[1]:
                best[0], best[1] = r | bit, rsize + 1
            p &= ~bit

    if within:
        expand(0, 0, within)
    return best[0]


def clique_number(g: Graph) -> tuple[int, int]:
    """(omega, witness mask)."""
    w = max_clique(g)
    return w.bit_count(), w


def independence_number(g: Graph) -> tuple[int, int]:
    """(alpha, witness mask)."""
    w = max_clique(complement(g))
    return w.bit_count(), w


def alpha_le_2(g: Graph) -> bool:
    """True iff no three pairwise non-adjacent vertices (complement is triangle-free)."""
    allv = g.vertices
    for u in range(g.n):
        non_u = allv & ~g.adj[u] & ~((1 << (u + 1)) - 1)
        for v in iter_bits(non_u):
            if non_u & ~g.adj[v] & ~(1 << v):
                return False
    return True


def min_degree(g: Graph) -> int:
    return min(g.degrees(), default=0)


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


# --- matching ---------------------------------------------------------------


def max_matching(g: Graph) -> list[tuple[int, int]]:
    """Maximum matching of a general graph by Edmonds' blossom contraction, O(n^3).

    Returns matched pairs ``(u, v)`` with ``u < v`` sorted by ``u``.
    """
    n = g.n
    nbrs = [bits_of(row) for row in g.adj]
    match = [-1] * n

    # greedy warm start
    for v in range(n):
        if match[v] == -1:
            for u in nbrs[v]:
                if match[u] == -1:
                    match[u], match[v] = v, u
                    break

    def find_path(root: int) -> bool:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = [root]
        qi = 0

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # augment along the alternating path ending at `to`
                        while to != -1:
                            pv = parent[to]
                            nxt = match[pv]
                            match[to], match[pv] = pv, to
                            to = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_path(v)
    return [(v, match[v]) for v in range(n) if match[v] > v]


def matching_number(g: Graph) -> int:
    return len(max_matching(g))


# --- colouring --------------------------------------------------------------


def _k_colorable(g: Graph, k: int) -> list[int] | None:
    """Colour classes (masks) of a proper k-colouring, or None. DSATUR-ordered backtracking."""
    n = g.n
    adj = g.adj
    classes = [0] * k
    colour = [-1] * n

    def pick() -> int:
        best, key = -1, (-1, -1)
        for v in range(n):
            if colour[v] != -1:
                continue
            sat = sum(1 for c in classes if c & adj[v])
            kv = (sat, adj[v].bit_count())
            if kv > key:
                best, key = v, kv
        return best

    def go(done: int) -> bool:
        if done == n:
            return True
        v = pick()
        opened = False
        for c in range(k):
            if classes[c] & adj[v]:
                continue
            if not classes[c]:
                if opened:
                    break
                opened = True
            classes[c] |= 1 << v
            colour[v] = c
            if go(done + 1):
                return True
            classes[c] &= ~(1 << v)
            colour[v] = -1
        return False

    return list(classes) if go(0) else None


def chromatic_number_exact(g: Graph) -> int:
    """Exact chromatic number by iterative deepening from the clique bound."""
    if g.n > CHI_EXACT_LIMIT:
        raise ChromaticLimitError(
            f"exact colouring is limited to {CHI_EXACT_LIMIT} vertices unless alpha <= 2 (n={g.n})"
        )
    if g.n == 0:
        return 0
    k = max(1, clique_number(g)[0])
    while _k_colorable(g, k) is None:
        k += 1
    return k


def chromatic_number(g: Graph) -> int:
    """Exact chi. For alpha <= 2 colour classes have size <= 2, so chi = n - mu(complement)."""
    if alpha_le_2(g):
        return g.n - matching_number(complement(g))
    return chromatic_number_exact(g)


@dataclass(frozen=True)
class InvariantBundle:
    n: int
    m: int
    alpha: int
    omega: int
    omega_witness: list[int]
    chi: int
    delta: int
    Delta: int
    anti_mu: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "alpha": self.alpha,
            "omega": self.omega,
            "omega_witness": self.omega_witness,
            "chi": self.chi,
            "delta": self.delta,
            "Delta": self.Delta,
            "anti_mu": self.anti_mu,
        }


def invariant_bundle(g: Graph) -> InvariantBundle:
    omega, w = clique_number(g)
    return InvariantBundle(
        n=g.n,
        m=g.m,
        alpha=independence_number(g)[0],
        omega=omega,
        omega_witness=bits_of(w),
        chi=chromatic_number(g),
        delta=min_degree(g),
        Delta=max_degree(g),
        anti_mu=matching_number(complement(g)),
    )
