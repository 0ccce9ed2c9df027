"""graph6 encoding and decoding (graphs up to 64 vertices)."""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph


class Graph6Error(ValueError):
    """Malformed graph6 record. ``offset`` is the byte position of the problem."""

    def __init__(self, kind: str, offset: int, detail: str):
        self.kind = kind
        self.offset = offset
        super().__init__(f"{kind} at byte {offset}: {detail}")


def _check_byte(c: int, i: int) -> int:
    if not 63 <= c <= 126:
        raise Graph6Error("bad-byte", i, f"byte {c!r} outside graph6 range 63..126")
    return c - 63


def from_graph6(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6Error("malformed-header", 0, "empty record")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("out-of-range", 0, "8-byte size header implies n > 258047")
        if len(data) < 4:
            raise Graph6Error("malformed-header", len(data), "truncated 4-byte size header")
        n = 0
        for i in range(1, 4):
            n = (n << 6) | _check_byte(data[i], i)
        pos = 4
    else:
        n = _check_byte(data[0], 0)
        pos = 1
    if n > MAX_VERTICES:
        raise Graph6Error("out-of-range", 0, f"n = {n} exceeds {MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error("truncated", len(data), f"expected {nbytes} data bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error("trailing-garbage", pos + nbytes, f"{len(body) - nbytes} extra bytes")

    vals = [_check_byte(c, pos + i) for i, c in enumerate(body)]
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if vals[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    # padding bits must be zero
    pad = nbytes * 6 - nbits
    if nbytes and vals[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero-padding", pos + nbytes - 1, "padding bits set")
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    n = g.n
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    else:
        out += bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    acc = 0
    k = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            k += 1
            if k == 6:
                out.append(acc + 63)
                acc = k = 0
    if k:
        out.append((acc << (6 - k)) + 63)
    return out.decode("ascii")
