"""Dominating clique minors: certificates, verification and exact search.

A dominating K_t minor is a sequence T_1..T_t of disjoint non-empty connected
vertex sets such that every vertex of a later set has a neighbor in each
earlier set. Writing ``A`` for the vertices still allowed for later sets, the
choice of T_1 shrinks ``A`` to ``(A - T_1) & N(T_1)``; the remaining problem
depends on ``A`` alone. The exact search below is a DFS over that state with
a negative memo keyed by ``A``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .bitset import bits_of, iter_bits, lowest, mask_of
from .graph import Graph
from .invariants import max_clique

DEFAULT_BUDGET = 2_000_000


class BudgetExhausted(RuntimeError):
    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"search budget exhausted after {nodes} node expansions")


@dataclass(frozen=True)
class MinorCertificate:
    """Ordered branch sets (vertex masks) of a dominating clique minor."""

    branch_sets: tuple[int, ...]
    provenance: str = field(default="", compare=False)

    @classmethod
    def from_lists(cls, sets: Sequence[Sequence[int]], provenance: str = "") -> "MinorCertificate":
        return cls(tuple(mask_of(s) for s in sets), provenance)

    @property
    def order(self) -> int:
        return len(self.branch_sets)

    def as_lists(self) -> list[list[int]]:
        return [bits_of(m) for m in self.branch_sets]

    def support(self) -> int:
        out = 0
        for m in self.branch_sets:
            out |= m
        return out

    def mapped(self, old_of_new: Sequence[int], provenance: str | None = None) -> "MinorCertificate":
        """Re-index from a subgraph's numbering back to its host."""
        sets = tuple(mask_of(old_of_new[v] for v in iter_bits(m)) for m in self.branch_sets)
        return MinorCertificate(sets, self.provenance if provenance is None else provenance)

    def then(self, other: "MinorCertificate", provenance: str | None = None) -> "MinorCertificate":
        return MinorCertificate(self.branch_sets + other.branch_sets,
                                self.provenance if provenance is None else provenance)

    def __repr__(self) -> str:
        tag = f", {self.provenance!r}" if self.provenance else ""
        return f"MinorCertificate({self.as_lists()}{tag})"


@dataclass(frozen=True)
class Verification:
    ok: bool
    clause: str = ""  # overlap | empty | disconnected | undominated
    message: str = ""
    i: int | None = None  # 1-based index of the dominating set
    j: int | None = None  # 1-based index of the offending set
    v: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_dominating(g: Graph, cert: MinorCertificate | Sequence[Sequence[int]]) -> Verification:
    """Check every certificate invariant in ``g``; report the first violated clause.

    Raises IndexError when a branch set names a vertex outside ``g``.
    """
    if not isinstance(cert, MinorCertificate):
        for s in cert:
            for v in s:
                if not 0 <= v < g.n:
                    raise IndexError(f"vertex {v} out of range for n={g.n}")
        cert = MinorCertificate.from_lists(cert)
    sets = cert.branch_sets
    for m in sets:
        if m >> g.n:
            raise IndexError(f"branch set {bits_of(m)} out of range for n={g.n}")
    seen = 0
    for j, m in enumerate(sets, 1):
        if not m:
            return Verification(False, "empty", f"T_{j} is empty", j=j)
        if m & seen:
            v = lowest(m & seen)
            return Verification(False, "overlap", f"vertex {v} of T_{j} lies in an earlier set", j=j, v=v)
        seen |= m
        if not g.is_connected_set(m):
            return Verification(False, "disconnected", f"T_{j} does not induce a connected subgraph", j=j)
    for j, m in enumerate(sets, 1):
        for i in range(1, j):
            dom = g.neighborhood(sets[i - 1])
            bad = m & ~dom
            if bad:
                v = lowest(bad)
                return Verification(False, "undominated", f"vertex {v} undominated by T_{i} (vertex lies in T_{j})",
                                    i=i, j=j, v=v)
    return Verification(True)


def check_certificate(g: Graph, cert: MinorCertificate) -> MinorCertificate:
    """Return ``cert`` unchanged, or raise AssertionError if it fails verification."""
    res = verify_dominating(g, cert)
    if not res:
        raise AssertionError(f"internal error: invalid certificate {cert}: {res.message}")
    return cert


def clique_certificate(clique: int, provenance: str = "clique") -> MinorCertificate:
    return MinorCertificate(tuple(1 << v for v in iter_bits(clique)), provenance)


# --- exact search -------------------------------------------------------------


def connected_subsets(adj: Sequence[int], within: int) -> Iterator[int]:
    """Every connected non-empty subset of ``within`` exactly once (keyed by least vertex)."""

    def grow(t: int, cand: int, excl: int) -> Iterator[int]:
        yield t
        c = cand
        while c:
            low = c & -c
            c ^= low
            excl |= low
            v = low.bit_length() - 1
            yield from grow(t | low, (c | adj[v]) & within & ~t & ~excl, excl)

    below = 0
    for r in iter_bits(within):
        bit = 1 << r
        below |= bit
        yield from grow(bit, adj[r] & within & ~below, below)


class DominatingSearch:
    """Decision search for dominating clique minors on one graph.

    The negative memo maps an allowed-set mask to the least number of further
    branch sets known to be impossible inside it; it persists across calls so
    ``hd`` can raise its target without redoing work.
    """

    def __init__(self, g: Graph, budget: int = DEFAULT_BUDGET):
        self.g = g
        self.adj = g.adj
        self.budget = budget
        self.nodes = 0
        self.fail: dict[int, int] = {}
        self._clique: dict[int, int] = {}
        self._options: dict[int, list[tuple[int, int]]] = {}

    def _max_clique(self, a: int) -> int:
        c = self._clique.get(a)
        if c is None:
            c = max_clique(self.g, a)
            self._clique[a] = c
        return c

    def _upper(self, a: int) -> int:
        """Cheap bound on the number of branch sets that fit in ``a``."""
        size = a.bit_count()
        if size <= 1:
            return size
        adj = self.adj
        maxdeg = 0
        edges2 = 0
        for v in iter_bits(a):
            d = (adj[v] & a).bit_count()
            edges2 += d
            if d > maxdeg:
                maxdeg = d
        # the last set needs a neighbor in each earlier one; any K_k minor needs C(k,2) edges
        ub = min(size, maxdeg + 1)
        while ub * (ub - 1) > edges2:
            ub -= 1
        return ub

    def _minimal(self, t: int, a: int) -> bool:
        """False if a vertex can be dropped from ``t`` without shrinking the next allowed set."""
        if t & (t - 1) == 0:
            return True
        adj = self.adj
        rest_out = a & ~t
        for u in iter_bits(t):
            rest = t & ~(1 << u)
            if not self.g.is_connected_set(rest):
                continue
            cover = 0
            for w in iter_bits(rest):
                cover |= adj[w]
            if not (adj[u] & rest_out & ~cover):
                return False
        return True

    def options(self, a: int) -> list[tuple[int, int]]:
        """Candidate first sets inside ``a`` as (set, next allowed set), best first."""
        opts = self._options.get(a)
        if opts is not None:
            return opts
        adj = self.adj
        scored = []
        for t in connected_subsets(adj, a):
            if not self._minimal(t, a):
                continue
            dom = 0
            for v in iter_bits(t):
                dom |= adj[v]
            nxt = a & ~t & dom
            scored.append((-nxt.bit_count(), t.bit_count(), bits_of(t), t, nxt))
        scored.sort()
        opts = [(s[3], s[4]) for s in scored]
        self._options[a] = opts
        return opts

    def search(self, a: int, k: int) -> list[int] | None:
        """Branch sets T_1..T_k inside ``a`` forming a dominating K_k minor, or None."""
        if k <= 0:
            return []
        if a.bit_count() < k:
            return None
        if self.fail.get(a, k + 1) <= k:
            return None
        if k == 1:
            return [a & -a]
        if self._upper(a) < k:
            self.fail[a] = k
            return None
        c = self._max_clique(a)
        if c.bit_count() >= k:
            return [1 << v for v in bits_of(c)[:k]]
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(self.nodes)
        for t, nxt in self.options(a):
            if nxt.bit_count() < k - 1:
                continue
            rest = self.search(nxt, k - 1)
            if rest is not None:
                return [t] + rest
        prev = self.fail.get(a)
        if prev is None or k < prev:
            self.fail[a] = k
        return None


# negative answers keyed by (canonical key, t); lives for the process only
_NEGATIVE_CACHE: set[tuple] = set()


def _canon_key(g: Graph) -> tuple:
    from .canon import canonical_key

    return canonical_key(g)


def has_dominating_kt(g: Graph, t: int, budget: int = DEFAULT_BUDGET,
                      search: DominatingSearch | None = None) -> MinorCertificate | None:
    """A certificate of order exactly ``t``, or None after a completed search.

    Raises BudgetExhausted when the node budget runs out first.
    """
    if t <= 0:
        raise ValueError("t must be positive")
    if t > g.n:
        return None
    key = None
    if g.n <= 16:
        key = (_canon_key(g), t)
        if key in _NEGATIVE_CACHE:
            return None
    s = search or DominatingSearch(g, budget)
    sets = s.search(g.vertices, t)
    if sets is None:
        if key is not None:
            _NEGATIVE_CACHE.add(key)
        return None
    return check_certificate(g, MinorCertificate(tuple(sets), "exact-search"))


@dataclass(frozen=True)
class HdResult:
    value: int | None  # None when the budget ran out
    certificate: MinorCertificate
    lower: int
    upper: int
    nodes: int
    seconds: float

    @property
    def complete(self) -> bool:
        return self.value is not None


def hd(g: Graph, budget: int = DEFAULT_BUDGET) -> HdResult:
    """Dominating Hadwiger number with a certificate; h_d(K_1) = 1, h_d(empty graph) = 0."""
    start = time.perf_counter()
    if g.n == 0:
        return HdResult(0, MinorCertificate(()), 0, 0, 0, 0.0)
    s = DominatingSearch(g, budget)
    best = clique_certificate(max_clique(g))
    upper = s._upper(g.vertices)
    t = best.order + 1
    while t <= upper:
        try:
            sets = s.search(g.vertices, t)
        except BudgetExhausted:
            return HdResult(None, best, best.order, upper, s.nodes, time.perf_counter() - start)
        if sets is None:
            break
        best = check_certificate(g, MinorCertificate(tuple(sets), "exact-search"))
        t += 1
    return HdResult(best.order, best, best.order, best.order, s.nodes, time.perf_counter() - start)


# --- ordinary clique minors -----------------------------------------------------


def has_kt_minor(g: Graph, t: int) -> bool:
    """Order-free K_t minor test: t disjoint connected sets, pairwise adjacent.

    Sets are generated in increasing order of their least vertex, so vertices
    below the latest least vertex that are still unused are dead.
    """
    if t <= 0:
        raise ValueError("t must be positive")
    if t > g.n:
        return False
    adj = g.adj

    def go(avail: int, touch: list[int], need: int) -> bool:
        if need == 0:
            return True
        if avail.bit_count() < need:
            return False
        for dom in touch:
            if not dom & avail:
                return False
        for r in iter_bits(avail):
            above = avail & ~((1 << r) - 1)
            if above.bit_count() < need:
                return False
            for s in connected_subsets(adj, above):
                if lowest(s) != r:
                    break
                if any(not (s & dom) for dom in touch):
                    continue
                dom_s = 0
                for v in iter_bits(s):
                    dom_s |= adj[v]
                if go(above & ~s & ~(1 << r), touch + [dom_s], need - 1):
                    return True
        return False

    return go(g.vertices, [], t)
