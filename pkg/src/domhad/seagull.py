"""Seagulls (induced P_3s), disjoint packings, clique capacity and the
four-condition packing characterization for graphs with alpha <= 2.

Capacities are half-integers; they are carried doubled (``2 * capacity``)
so all arithmetic stays in integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bitset import bits_of, iter_bits
from .canon import canonical_key
from .catalog import catalog
from .graph import Graph, complement, vertex_connectivity
from .invariants import alpha_le_2, max_matching

CAPACITY_LIMIT = 16


class CapacityLimitError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class CharacterizationDiscrepancy(AssertionError):
    """Conditions and packing disagree on an instance the characterization covers."""


@dataclass(frozen=True, order=True)
class Seagull:
    a: int  # end
    b: int  # center
    c: int  # end, a < c

    @property
    def mask(self) -> int:
        return (1 << self.a) | (1 << self.b) | (1 << self.c)

    def is_valid(self, g: Graph) -> bool:
        return (
            len({self.a, self.b, self.c}) == 3
            and g.has_edge(self.a, self.b)
            and g.has_edge(self.b, self.c)
            and not g.has_edge(self.a, self.c)
        )

    def as_list(self) -> list[int]:
        return [self.a, self.b, self.c]


def seagulls(g: Graph, within: int | None = None) -> list[Seagull]:
    """All seagulls of ``g[within]``, sorted."""
    if within is None:
        within = g.vertices
    out = []
    for b in iter_bits(within):
        nb = bits_of(g.adj[b] & within)
        for i, a in enumerate(nb):
            for c in nb[i + 1:]:
                if not g.has_edge(a, c):
                    out.append(Seagull(a, b, c))
    out.sort()
    return out


def max_disjoint_seagulls(g: Graph, within: int | None = None, target: int | None = None) -> list[Seagull]:
    """A maximum family of vertex-disjoint seagulls in ``g[within]``.

    Branches on the least unused vertex: leave it out, or cover it by each
    seagull through it. With ``target`` set, stops as soon as that many are found.
    """
    if within is None:
        within = g.vertices
    gulls = seagulls(g, within)
    through: dict[int, list[Seagull]] = {v: [] for v in iter_bits(within)}
    for s in gulls:
        for v in (s.a, s.b, s.c):
            through[v].append(s)
    best: list[list[Seagull]] = [[]]
    goal = target if target is not None else len(through) // 3

    def go(free: int, chosen: list[Seagull]) -> bool:
        if len(chosen) > len(best[0]):
            best[0] = list(chosen)
            if len(chosen) >= goal:
                return True
        if len(chosen) + free.bit_count() // 3 <= len(best[0]):
            return False
        if not free:
            return False
        v = (free & -free).bit_length() - 1
        for s in through[v]:
            if s.mask & free == s.mask:
                chosen.append(s)
                if go(free & ~s.mask, chosen):
                    return True
                chosen.pop()
        return go(free & ~(1 << v), chosen)

    go(within, [])
    return sorted(best[0])


@dataclass(frozen=True)
class CliqueCapacity:
    clique: int
    boundary: int  # vertices outside the clique neither complete nor anticomplete to it
    capacity2: int  # 2 * capacity = n + |boundary| - |clique|

    @property
    def capacity(self) -> float:
        return self.capacity2 / 2


def boundary_of(g: Graph, clique: int) -> int:
    size = clique.bit_count()
    out = 0
    for v in iter_bits(g.vertices & ~clique):
        k = (g.adj[v] & clique).bit_count()
        if 0 < k < size:
            out |= 1 << v
    return out


def capacity_of(g: Graph, clique: int) -> CliqueCapacity:
    star = boundary_of(g, clique)
    return CliqueCapacity(clique, star, g.n + star.bit_count() - clique.bit_count())


def min_clique_capacity(g: Graph) -> CliqueCapacity:
    """Minimum capacity over all non-empty cliques, with an attaining clique.

    Capacity is not monotone along clique extension, so all cliques are
    visited; a branch is cut when even absorbing every common neighbor could
    not beat the best (boundary vertices of a clique stay boundary vertices
    of any larger clique).
    """
    if g.n == 0:
        raise ValueError("graph has no cliques")
    if g.n > CAPACITY_LIMIT:
        raise CapacityLimitError(f"capacity minimization is limited to {CAPACITY_LIMIT} vertices (n={g.n})")
    n = g.n
    adj = g.adj
    best: list[CliqueCapacity | None] = [None]

    def go(k: int, cand: int) -> None:
        cap = capacity_of(g, k)
        if best[0] is None or cap.capacity2 < best[0].capacity2:
            best[0] = cap
        if n + cap.boundary.bit_count() - k.bit_count() - cand.bit_count() >= best[0].capacity2:
            return
        c = cand
        while c:
            low = c & -c
            c ^= low
            v = low.bit_length() - 1
            go(k | low, c & adj[v])

    for v in range(n):
        go(1 << v, adj[v] & ~((1 << (v + 1)) - 1))
    assert best[0] is not None
    return best[0]


@lru_cache(maxsize=1)
def _w5_key() -> tuple:
    return canonical_key(catalog("W_5"))


def is_w5(g: Graph) -> bool:
    return g.n == 6 and g.m == 10 and canonical_key(g) == _w5_key()


@dataclass(frozen=True)
class FeasibilityReport:
    ell: int
    n: int
    alpha_le_2: bool
    cond_size: bool
    connectivity: int
    cond_conn: bool
    min_capacity: CliqueCapacity | None
    cond_capacity: bool
    antimatching: list[tuple[int, int]]
    cond_antimatching: bool
    exception_flag: bool

    @property
    def all_hold(self) -> bool:
        return self.cond_size and self.cond_conn and self.cond_capacity and self.cond_antimatching

    def to_json(self) -> dict:
        cap = self.min_capacity
        return {
            "ell": self.ell,
            "n": self.n,
            "alpha_le_2": self.alpha_le_2,
            "cond_size": self.cond_size,
            "connectivity": self.connectivity,
            "cond_conn": self.cond_conn,
            "min_capacity": None if cap is None else cap.capacity,
            "min_capacity_clique": None if cap is None else bits_of(cap.clique),
            "min_capacity_boundary": None if cap is None else bits_of(cap.boundary),
            "cond_capacity": self.cond_capacity,
            "antimatching": [list(e) for e in self.antimatching],
            "cond_antimatching": self.cond_antimatching,
            "exception_flag": self.exception_flag,
            "all_hold": self.all_hold,
        }


def feasibility(g: Graph, ell: int) -> FeasibilityReport:
    """Evaluate the four packing conditions for ``ell`` disjoint seagulls."""
    if ell < 0:
        raise ValueError("ell must be non-negative")
    kappa = vertex_connectivity(g)
    # ell-connected: more than ell vertices and no cut of size < ell
    cond_conn = ell == 0 or (g.n > ell and kappa >= ell)
    cap = min_clique_capacity(g) if g.n else None
    cond_cap = cap is None or cap.capacity2 >= 2 * ell
    anti = max_matching(complement(g))
    return FeasibilityReport(
        ell=ell,
        n=g.n,
        alpha_le_2=alpha_le_2(g),
        cond_size=g.n >= 3 * ell,
        connectivity=kappa,
        cond_conn=cond_conn,
        min_capacity=cap,
        cond_capacity=cond_cap,
        antimatching=anti,
        cond_antimatching=len(anti) >= ell,
        exception_flag=ell == 2 and is_w5(g),
    )


@dataclass(frozen=True)
class CrosscheckResult:
    ell: int
    conditions_hold: bool
    packing_exists: bool
    packing: list[Seagull]

    @property
    def tight(self) -> bool:
        """Conditions hold and the best packing has exactly ``ell`` seagulls."""
        return self.conditions_hold and len(self.packing) == self.ell


def crosscheck_characterization(g: Graph, ell: int) -> CrosscheckResult:
    """Compare the four conditions against an exact packing.

    Raises PreconditionError off the covered domain (alpha > 2, or W_5 with
    ell = 2) and CharacterizationDiscrepancy if the two sides disagree.
    """
    if not alpha_le_2(g):
        raise PreconditionError("characterization needs alpha(G) <= 2")
    if ell == 2 and is_w5(g):
        raise PreconditionError("excluded pair: G is W_5 and ell = 2")
    rep = feasibility(g, ell)
    pack = max_disjoint_seagulls(g)
    res = CrosscheckResult(ell, rep.all_hold, len(pack) >= ell, pack)
    if res.conditions_hold != res.packing_exists:
        raise CharacterizationDiscrepancy(
            f"ell={ell}: conditions {'hold' if rep.all_hold else 'fail'} but max packing is {len(pack)}"
        )
    return res
