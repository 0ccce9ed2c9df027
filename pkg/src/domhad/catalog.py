"""Named graphs with a frozen vertex numbering.

Atoms (``k`` is a positive integer):

    K_k         complete graph on 0..k-1
    K_k_minus   K_k without edge 0-1           (alias K_k^-)
    K_k_less    K_k without edges 0-1 and 0-2  (alias K_k^<)
    C_k         cycle 0-1-...-(k-1)-0, k >= 3
    P_k         path 0-1-...-(k-1)
    W_k         hub 0 joined to the cycle 1-2-...-k-1, k >= 3
    W_k_minus   W_k without edge 0-1           (alias W_k^-)
    W_k_less    W_k without edges 0-1 and 0-2  (alias W_k^<)
    hammer      triangle 0,1,2 with pendant path 0-3-4
    kite        0-1, then 1,2,3,4 form K_4 minus the edge 1-4
    fig2_a/b/c  the three 8-vertex graphs of the x, y, z, w construction,
                vertices numbered as drawn (top row 0,1,2; bottom row 3,4,5;
                middle 6,7)
    petersen    outer cycle 0..4, spokes i-(i+5), inner pentagram i+5 ~ (i+2)%5+5

Compound names combine atoms: ``A+B`` is the join, ``A∪B`` (or ``A|B``) the
disjoint union, ``kA`` is k disjoint copies, and parentheses group. Operators
share one precedence level and associate left. The first operand always
keeps the low vertex numbers, e.g. ``2K_1+P_4`` has the two isolated
vertices 0, 1 and the path on 2-3-4-5.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .graph import Graph, copies, join, union

# named in the main theorem's forbidden list, in the order written there
MAIN_THEOREM_H = (
    "W_4_minus",
    "W_4",
    "2K_1+P_4",
    "K_2+2K_2",
    "K_2+(K_1∪K_3)",
    "W_5_less",
    "W_5_minus",
    "W_5",
    "K_7_less",
    "K_7_minus",
    "K_7",
    "K_1+(K_1∪K_5)",
)

ALPHA2_FOUR = ("2K_2", "K_1∪K_3", "P_4", "K_1+(K_1∪K_2)", "C_4", "K_4_minus", "K_4")
ALPHA2_FIVE = (
    "K_1∪K_4",
    "K_2∪K_3",
    "K_1+(K_1∪K_3)",
    "hammer",
    "kite",
    "C_5",
    "K_1+2K_2",
    "K_1+P_4",
    "W_4_less",
    "W_4_minus",
    "W_4",
    "K_5_less",
    "K_5_minus",
    "K_5",
)

MANIFEST_NAMES = (
    ("K_7", "K_7_minus", "K_7_less", "C_5", "C_7", "P_4", "W_5", "W_5_minus", "W_5_less")
    + ("hammer", "kite", "fig2_a", "fig2_b", "fig2_c", "petersen")
    + tuple(dict.fromkeys(MAIN_THEOREM_H + ALPHA2_FOUR + ALPHA2_FIVE))
)


class UnknownGraphName(KeyError):
    pass


def _edges_complete(k: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(k) for j in range(i + 1, k)]


def complete(k: int) -> Graph:
    return Graph.from_edges(k, _edges_complete(k))


def cycle(k: int) -> Graph:
    if k < 3:
        raise UnknownGraphName(f"C_{k}: cycles need at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    if k < 1:
        raise UnknownGraphName(f"P_{k}: paths need at least 1 vertex")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def wheel(k: int) -> Graph:
    return join(complete(1), cycle(k))


def _drop(g: Graph, *edges: tuple[int, int]) -> Graph:
    keep = set(g.edges()) - {tuple(sorted(e)) for e in edges}
    return Graph.from_edges(g.n, sorted(keep))


_FIG2_BASE = [
    (0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (2, 5),
    (0, 6), (1, 6), (3, 6), (4, 6), (1, 7), (2, 7), (4, 7), (5, 7),
    (0, 2), (3, 5),
]

_FIXED = {
    "hammer": (5, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)]),
    "kite": (5, [(0, 1), (1, 2), (2, 4), (4, 3), (3, 1), (2, 3)]),
    "fig2_a": (8, _FIG2_BASE),
    "fig2_b": (8, _FIG2_BASE + [(2, 3)]),
    "fig2_c": (8, _FIG2_BASE + [(2, 3), (0, 5)]),
    "petersen": (
        10,
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(i + 5, (i + 2) % 5 + 5) for i in range(5)],
    ),
}

_ATOM = re.compile(r"^(K|C|P|W)_(\d+)(_minus|_less|\^-|\^<)?$")


def _atom(name: str) -> Graph:
    if name in _FIXED:
        n, edges = _FIXED[name]
        return Graph.from_edges(n, edges)
    m = _ATOM.match(name)
    if not m:
        raise UnknownGraphName(name)
    kind, k, mod = m.group(1), int(m.group(2)), m.group(3)
    if kind == "K":
        if k < 1:
            raise UnknownGraphName(name)
        g = complete(k)
        if mod in ("_minus", "^-"):
            return _drop(g, (0, 1)) if k >= 2 else _bad(name)
        if mod in ("_less", "^<"):
            return _drop(g, (0, 1), (0, 2)) if k >= 3 else _bad(name)
        return g
    if mod:
        if kind != "W":
            raise UnknownGraphName(name)
        g = wheel(k)
        if mod in ("_minus", "^-"):
            return _drop(g, (0, 1))
        return _drop(g, (0, 1), (0, 2))
    return {"C": cycle, "P": path, "W": wheel}[kind](k)


def _bad(name: str) -> Graph:
    raise UnknownGraphName(name)


_TOKEN = re.compile(r"\s*(?:(\d+)(?=[A-Za-z(])|([A-Za-z][A-Za-z0-9_]*(?:\^[-<])?)|([+∪|()]))")


def _tokenize(text: str) -> list[str]:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise UnknownGraphName(f"cannot parse {text!r} at position {pos}")
        out.append(next(g for g in m.groups() if g is not None))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise UnknownGraphName(f"unexpected end of {self.text!r}")
        self.i += 1
        return tok

    def expr(self) -> Graph:
        g = self.term()
        while self.peek() in ("+", "∪", "|"):
            op = self.take()
            h = self.term()
            g = join(g, h) if op == "+" else union(g, h)
        return g

    def term(self) -> Graph:
        tok = self.take()
        if tok.isdigit():
            return copies(int(tok), self.term())
        if tok == "(":
            g = self.expr()
            if self.take() != ")":
                raise UnknownGraphName(f"unbalanced parentheses in {self.text!r}")
            return g
        return _atom(tok)

    def parse(self) -> Graph:
        g = self.expr()
        if self.peek() is not None:
            raise UnknownGraphName(f"trailing input in {self.text!r}")
        return g


@lru_cache(maxsize=None)
def catalog(name: str) -> Graph:
    """Resolve a catalog name (atom or compound expression) to a labeled Graph."""
    return _Parser(name).parse().with_label(name)


def manifest() -> dict[str, str]:
    """name -> graph6 for the documented names."""
    from .graph6 import to_graph6

    return {name: to_graph6(catalog(name)) for name in MANIFEST_NAMES}
