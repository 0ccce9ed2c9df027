"""Certificate builders that follow the constructive steps of the proofs.

Builders work on vertex masks inside the host graph so that intermediate
certificates never need re-indexing. Every certificate returned has been
through :func:`~domhad.minors.check_certificate`; a failure there is an
internal error, not a result. Each certificate carries a provenance tag
naming the step that produced it (``exact-fallback`` when a proof step did
not apply verbatim and the exact search was used instead).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .bitset import bits_of, iter_bits, lowest
from .graph import Graph, components, join
from .invariants import alpha_le_2, max_clique
from .minors import (
    DEFAULT_BUDGET,
    DominatingSearch,
    MinorCertificate,
    check_certificate,
    clique_certificate,
    verify_dominating,
)
from .seagull import PreconditionError, Seagull, max_disjoint_seagulls


def ceil_half(n: int) -> int:
    return (n + 1) // 2


@dataclass(frozen=True)
class DominatingEdge:
    x: int
    y: int


def find_dominating_edge(g: Graph, within: int | None = None) -> DominatingEdge | None:
    """Least edge xy (x < y) of ``g[within]`` whose ends dominate the rest of ``within``."""
    if within is None:
        within = g.vertices
    adj = g.adj
    for x in iter_bits(within):
        for y in iter_bits(adj[x] & within & ~((1 << (x + 1)) - 1)):
            rest = within & ~(1 << x) & ~(1 << y)
            if not rest & ~(adj[x] | adj[y]):
                return DominatingEdge(x, y)
    return None


# --- composition steps -------------------------------------------------------


def compose_join(g1: Graph, cert_a: MinorCertificate, g2: Graph, cert_b: MinorCertificate) -> tuple[Graph, MinorCertificate]:
    """Concatenate certificates of ``g1`` and ``g2`` into one on the join ``g1 + g2``.

    ``g2``'s vertices are shifted by ``g1.n``; all cross edges make every
    B-set dominated by every A-set.
    """
    for name, g, c in (("first", g1, cert_a), ("second", g2, cert_b)):
        res = verify_dominating(g, c)
        if not res:
            raise PreconditionError(f"{name} certificate invalid: {res.message}")
    host = join(g1, g2)
    shifted = tuple(m << g1.n for m in cert_b.branch_sets)
    return host, check_certificate(host, MinorCertificate(cert_a.branch_sets + shifted, "join"))


def assemble_clique_plus_seagulls(g: Graph, clique: int, pack: Sequence[Seagull],
                                  within: int | None = None) -> MinorCertificate:
    """Seagulls as leading branch sets, then the clique's vertices as singletons.

    With alpha <= 2 the two ends of a seagull are non-adjacent, so every other
    vertex sees one of them; hence each seagull dominates everything after it.
    """
    if within is None:
        within = g.vertices
    if not alpha_le_2(g.induced(within)[0]):
        raise PreconditionError("alpha(G) <= 2 required")
    if clique & ~within or not g.is_clique(clique):
        raise PreconditionError(f"{bits_of(clique)} is not a clique of the host")
    used = clique
    for s in pack:
        if not s.is_valid(g):
            raise PreconditionError(f"{s.as_list()} is not a seagull")
        if s.mask & ~within:
            raise PreconditionError(f"seagull {s.as_list()} leaves the host")
        if s.mask & used:
            raise PreconditionError(f"seagull {s.as_list()} overlaps the clique or an earlier seagull")
        used |= s.mask
    sets = tuple(s.mask for s in pack) + tuple(1 << v for v in iter_bits(clique))
    return check_certificate(g, MinorCertificate(sets, "clique+seagulls"))


# --- omega builder -----------------------------------------------------------


def _exact(g: Graph, within: int, t: int, budget: int) -> MinorCertificate | None:
    sets = DominatingSearch(g, budget).search(within, t)
    if sets is None:
        return None
    return MinorCertificate(tuple(sets), "exact-fallback")


def omega_hypothesis(g: Graph) -> bool:
    if not alpha_le_2(g):
        return False
    return 2 * max_clique(g).bit_count() >= ceil_half(g.n) + 1


def _omega_rec(g: Graph, r: int, budget: int) -> MinorCertificate:
    n = r.bit_count()
    h = ceil_half(n)
    a = max_clique(g, r)
    omega = a.bit_count()
    if omega >= h:
        return clique_certificate(a, "clique")
    if n % 2 == 0:
        # any vertex off a maximum clique keeps omega and ceil(n/2)
        x = lowest(r & ~a)
        inner = _omega_rec(g, r & ~(1 << x), budget)
        return MinorCertificate(inner.branch_sets, "even-reduction/" + inner.provenance)

    ell = h - omega
    rest = r & ~a
    comps = [c for c in components(g.induced(rest)[0])]
    if len(comps) > 1:
        # two anticomplete cliques B1, B2; split A by which side each vertex is complete to
        old = bits_of(rest)
        b1 = sum(1 << old[v] for v in iter_bits(comps[0]))
        b2 = rest & ~b1
        a1 = 0
        for v in iter_bits(a):
            if not b1 & ~g.adj[v]:
                a1 |= 1 << v
        for k in (a1 | b1, (a & ~a1) | b2):
            if k.bit_count() >= h and g.is_clique(k):
                return clique_certificate(k, "two-clique-partition")
    elif rest and all(g.adj[v] & rest for v in iter_bits(a)):
        pack = max_disjoint_seagulls(g, within=rest, target=ell)
        if len(pack) >= ell:
            return assemble_clique_plus_seagulls(g, a, pack[:ell], within=r)
        if ell == 1:
            # the whole connected remainder is one branch set seen by all of A
            sets = (rest,) + tuple(1 << v for v in iter_bits(a))
            return MinorCertificate(sets, "remainder+clique")
    elif g.is_clique(rest) and rest.bit_count() >= h:
        return clique_certificate(rest, "two-clique-partition")

    cert = _exact(g, r, h, budget)
    if cert is None:
        raise AssertionError("no dominating minor of order ceil(n/2) although the hypothesis holds")
    return cert


def build_omega_certificate(g: Graph, budget: int = DEFAULT_BUDGET) -> MinorCertificate:
    """Order >= ceil(n/2) for alpha <= 2 graphs with 2*omega >= ceil(n/2) + 1.

    Odd n: take a maximum clique A; the rest is connected, and ceil(n/2) - omega
    disjoint seagulls in it together with A's vertices give the minor (a
    single remaining set suffices when one set is missing). Even n: drop a
    vertex off A and recurse.
    """
    if not alpha_le_2(g):
        raise PreconditionError("alpha(G) <= 2 required")
    if not 2 * max_clique(g).bit_count() >= ceil_half(g.n) + 1:
        raise PreconditionError("2*omega(G) >= ceil(n/2) + 1 required")
    return check_certificate(g, _omega_rec(g, g.vertices, budget))


# --- peeling dominating edges --------------------------------------------------

BaseSolver = Callable[[Graph, int], MinorCertificate]


def exact_base(g: Graph, within: int) -> MinorCertificate:
    """Best certificate of ``g[within]`` by exact search (h_d of the subgraph)."""
    s = DominatingSearch(g)
    best = clique_certificate(max_clique(g, within), "clique")
    t = best.order + 1
    while t <= within.bit_count():
        sets = s.search(within, t)
        if sets is None:
            break
        best = MinorCertificate(tuple(sets), "exact-search")
        t += 1
    return best


def omega_base(g: Graph, within: int) -> MinorCertificate:
    """Omega builder where its hypothesis holds, exact search otherwise."""
    sub, old = g.induced(within)
    if sub.n and omega_hypothesis(sub):
        return build_omega_certificate(sub).mapped(old)
    return exact_base(g, within)


def peel_dominating_edges(g: Graph, base_solver: BaseSolver = exact_base) -> MinorCertificate:
    """Lead with dominating edges, hand the remainder to ``base_solver``.

    At each stage the builder keeps whichever is larger: the base solver on
    the current remainder, or one more peeled edge followed by the best
    certificate for what is left.
    """

    def rec(r: int) -> MinorCertificate:
        base = base_solver(g, r) if r else MinorCertificate((), "empty")
        e = find_dominating_edge(g, r)
        if e is None:
            return base
        pair = (1 << e.x) | (1 << e.y)
        tail = rec(r & ~pair)
        peeled = MinorCertificate((pair,) + tail.branch_sets, "peel/" + tail.provenance)
        return peeled if peeled.order > base.order else base

    return check_certificate(g, rec(g.vertices))


# --- minimum degree >= n - 3 -------------------------------------------------


def _mindeg_rec(g: Graph, r: int) -> list[int]:
    if not r:
        return []
    adj = g.adj
    non = {v: r & ~adj[v] & ~(1 << v) for v in iter_bits(r)}
    # a stable set of size 3 is a triangle of the complement, complete to the rest
    for v in iter_bits(r):
        if non[v].bit_count() == 2:
            u, w = bits_of(non[v])
            if not g.has_edge(u, w):
                s = (1 << v) | (1 << u) | (1 << w)
                return [1 << lowest(s)] + _mindeg_rec(g, r & ~s)
    for x in iter_bits(r):
        if non[x].bit_count() <= 1:
            return [1 << x] + _mindeg_rec(g, r & adj[x])
    # complement is 2-regular on r
    cycles = []
    left = r
    while left:
        start = lowest(left)
        order = [start]
        prev, cur = -1, start
        nxt = min(bits_of(non[start]))
        while nxt != start:
            prev, cur = cur, nxt
            order.append(cur)
            nxt = next(u for u in bits_of(non[cur]) if u != prev)
        cycles.append(order)
        for v in order:
            left &= ~(1 << v)
    odd = [c for c in cycles if len(c) % 2 == 1]
    if not odd:
        clique = 0
        for c in cycles:
            for v in c[::2]:
                clique |= 1 << v
        return [1 << v for v in iter_bits(clique)]
    c = odd[0]  # v_1 .. v_{2k+1}, k >= 2 since triangles were handled
    head = (1 << c[0]) | (1 << c[2]) | (1 << c[-1])
    singles = [1 << c[i] for i in range(1, len(c) - 1, 2)]
    cmask = 0
    for v in c:
        cmask |= 1 << v
    return [head] + singles + _mindeg_rec(g, r & ~cmask)


def build_mindeg_certificate(g: Graph) -> MinorCertificate:
    """Order >= chi(G) for graphs whose complement has maximum degree <= 2."""
    if g.n and min(g.degrees()) < g.n - 3:
        raise PreconditionError("minimum degree >= n - 3 required")
    return check_certificate(g, MinorCertificate(tuple(_mindeg_rec(g, g.vertices)), "mindeg-proof"))


# --- induced cycle locators ------------------------------------------------------


def find_induced_c5_through(g: Graph, x: int) -> tuple[int, ...] | None:
    """Lexicographically least cyclic sequence (x, a, b, c, d) inducing C_5, or None."""
    adj = g.adj
    bx = 1 << x
    for a in iter_bits(adj[x]):
        for b in iter_bits(adj[a] & ~adj[x] & ~bx):
            for c in iter_bits(adj[b] & ~adj[x] & ~adj[a] & ~bx & ~(1 << a)):
                for d in iter_bits(adj[c] & adj[x] & ~adj[a] & ~adj[b] & ~(1 << a) & ~(1 << b)):
                    return (x, a, b, c, d)
    return None


def find_induced_c4_through(g: Graph, x: int) -> tuple[int, ...] | None:
    """Lexicographically least cyclic sequence (x, a, b, c) inducing C_4, or None."""
    adj = g.adj
    bx = 1 << x
    for a in iter_bits(adj[x]):
        for b in iter_bits(adj[a] & ~adj[x] & ~bx):
            for c in iter_bits(adj[b] & adj[x] & ~adj[a] & ~(1 << a)):
                return (x, a, b, c)
    return None


def c5_guarantee_applies(g: Graph, x: int) -> bool:
    """Hypotheses under which an induced C_5 through ``x`` must exist."""
    return (
        alpha_le_2(g)
        and max_clique(g).bit_count() < ceil_half(g.n)
        and find_dominating_edge(g) is None
        and g.degree(x) < g.n - 1
    )


def c4_guarantee_applies(g: Graph, x: int) -> bool:
    return alpha_le_2(g) and 2 * max_clique(g).bit_count() <= ceil_half(g.n) and g.degree(x) < g.n - 1
