"""graph6 encoding (orders up to 62 use the single-byte size prefix)."""

from __future__ import annotations

from .errors import MalformedGraph6, OrderOutOfRange
from .graph import MAX_ORDER, Graph, from_edges

_HEADER = ">>graph6<<"


def _pairs(n: int):
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def graph6_encode(g: Graph) -> str:
    n = g.order
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _pairs(n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = chunk << 1 | b
        out.append(chr(chunk + 63))
    return "".join(out)


def graph6_decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.strip()
    if text.startswith(_HEADER):
        text = text[len(_HEADER):]
    if not text:
        raise MalformedGraph6("empty graph6 string")
    codes = [ord(c) for c in text]
    if any(not 63 <= c <= 126 for c in codes):
        raise MalformedGraph6(f"byte out of range 63..126 in {text!r}")
    if codes[0] == 126:
        # multi-byte size prefix: only ever needed for n >= 63
        raise OrderOutOfRange(f"graph6 order exceeds {MAX_ORDER}")
    n = codes[0] - 63
    if n > MAX_ORDER:
        raise OrderOutOfRange(f"graph6 order {n} exceeds {MAX_ORDER}")
    payload = codes[1:]
    nbits = n * (n - 1) // 2
    if len(payload) != -(-nbits // 6):
        raise MalformedGraph6(
            f"order {n} needs {-(-nbits // 6)} payload bytes, got {len(payload)}"
        )
    bits = []
    for c in payload:
        v = c - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6("non-zero padding bits")
    edges = [p for p, b in zip(_pairs(n), bits) if b]
    return from_edges(n, edges)


def read_graph6_lines(lines) -> list[Graph]:
    return [graph6_decode(line) for line in lines if line.strip()]
