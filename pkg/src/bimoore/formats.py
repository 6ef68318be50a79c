"""graph6, plain biadjacency text and DOT serialisation.

graph6 stores the full ``n1 + n2`` vertex graph with side-1 vertices numbered
first.  The side split travels in a comment line written just before the
graph6 line::

    # bipartite 6 8 provenance=g-prime base=8
    Mhc...

Without that line the split is recovered by 2-colouring, which only works
when the colour classes are the contiguous blocks ``0..n1-1`` and
``n1..n-1``.
"""

from __future__ import annotations

import re
from pathlib import Path

from .core import BipartiteGraph
from .errors import Graph6Error

_HEADER = b">>graph6<<"


# -- graph6 --------------------------------------------------------------------


def _encode_size(n):
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> sh) & 63) + 63 for sh in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> sh) & 63) + 63 for sh in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def encode_graph6(g: BipartiteGraph) -> bytes:
    """graph6 bytes (no header, no newline) of the full graph, side 1 first."""
    n, n1 = g.order, g.n1
    nbr = g.neighbor_masks()
    bits = []
    for j in range(1, n):
        mj = nbr[j]
        for i in range(j):
            bits.append((mj >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = bytearray()
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        body.append(v + 63)
    return _encode_size(n) + bytes(body)


def _decode_size(data, pos):
    def byte(k):
        if k >= len(data):
            raise Graph6Error("truncated size field", k)
        c = data[k]
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside the printable graph6 range", k)
        return c - 63

    first = byte(pos)
    if first < 63:
        return first, pos + 1
    if byte(pos + 1) < 63:
        n = 0
        for k in range(pos + 1, pos + 4):
            n = (n << 6) | byte(k)
        return n, pos + 4
    n = 0
    for k in range(pos + 2, pos + 8):
        n = (n << 6) | byte(k)
    return n, pos + 8


def decode_graph6_adjacency(data: bytes):
    """Decode a graph6 line into ``(n, neighbour masks)``."""
    data = data.strip()
    pos = len(_HEADER) if data.startswith(_HEADER) else 0
    n, pos = _decode_size(data, pos)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} adjacency bytes for n={n}, found {len(body)}",
                          pos + min(len(body), need))
    nbr = [0] * n
    i, j = 0, 1
    k = 0
    for off, c in enumerate(body):
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside the printable graph6 range", pos + off)
        v = c - 63
        for sh in range(5, -1, -1):
            bit = (v >> sh) & 1
            if k < nbits:
                if bit:
                    nbr[i] |= 1 << j
                    nbr[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise Graph6Error("nonzero padding bit", pos + off)
            k += 1
    return n, nbr


def _split_from_colouring(n, nbr):
    colour = [-1] * n
    for root in range(n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            m = nbr[u]
            while m:
                low = m & -m
                w = low.bit_length() - 1
                m ^= low
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    raise Graph6Error(f"graph is not bipartite (edge {u}-{w})", 0)
    n1 = colour.count(0)
    if colour != [0] * n1 + [1] * (n - n1):
        raise Graph6Error("colour classes are not contiguous; a '# bipartite n1 n2' line is required", 0)
    return n1


def decode_graph6(data: bytes, n1=None) -> BipartiteGraph:
    """Inverse of :func:`encode_graph6`.

    ``data`` may start with a ``# bipartite n1 n2`` comment line, which then
    fixes the split; ``n1`` given explicitly wins over both.
    """
    if isinstance(data, str):
        data = data.encode("ascii")
    lines = [ln for ln in data.splitlines() if ln.strip()]
    meta = {}
    payload = None
    for ln in lines:
        if ln.startswith(b"#"):
            meta = parse_meta(ln.decode("ascii", "replace"))
        else:
            payload = ln
            break
    if payload is None:
        raise Graph6Error("no graph6 line found", 0)
    n, nbr = decode_graph6_adjacency(payload)
    if n1 is None:
        n1 = meta.get("n1")
    if n1 is None:
        n1 = _split_from_colouring(n, nbr)
    if meta.get("n2") is not None and meta["n1"] + meta["n2"] != n:
        raise Graph6Error(f"header says {meta['n1']}+{meta['n2']} vertices, graph6 has {n}", 0)
    side1 = (1 << n1) - 1
    rows = []
    for i in range(n1):
        if nbr[i] & side1:
            raise Graph6Error(f"edge inside side 1 at vertex {i}", 0)
        rows.append(nbr[i] >> n1)
    for j in range(n1, n):
        if nbr[j] >> n1:
            raise Graph6Error(f"edge inside side 2 at vertex {j}", 0)
    return BipartiteGraph(n1, n - n1, tuple(rows))


# -- metadata lines ------------------------------------------------------------

_META = re.compile(r"^#\s*bipartite\s+(\d+)\s+(\d+)(.*)$")


def format_meta(g: BipartiteGraph, **extra):
    parts = [f"# bipartite {g.n1} {g.n2}"]
    parts += [f"{k}={v}" for k, v in extra.items() if v is not None]
    return " ".join(parts)


def parse_meta(line: str):
    m = _META.match(line.strip())
    if not m:
        return {}
    out = {"n1": int(m.group(1)), "n2": int(m.group(2))}
    for tok in m.group(3).split():
        if "=" in tok:
            k, v = tok.split("=", 1)
            out[k] = v
    return out


# -- plain biadjacency text ----------------------------------------------------


def to_text(g: BipartiteGraph) -> str:
    lines = [f"{g.n1} {g.n2}"]
    for x in g.rows:
        lines.append("".join("1" if (x >> j) & 1 else "0" for j in range(g.n2)))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> BipartiteGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty biadjacency text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'n1 n2'")
    n1, n2 = int(head[0]), int(head[1])
    body = lines[1:]
    if len(body) != n1:
        raise ValueError(f"expected {n1} rows, found {len(body)}")
    rows = []
    for i, ln in enumerate(body):
        if len(ln) != n2 or set(ln) - {"0", "1"}:
            raise ValueError(f"row {i} must be {n2} characters from {{0,1}}")
        rows.append(sum(1 << j for j, ch in enumerate(ln) if ch == "1"))
    return BipartiteGraph(n1, n2, tuple(rows))


# -- DOT -----------------------------------------------------------------------


def to_dot(g: BipartiteGraph, name="G") -> str:
    out = [f"graph {name} {{"]
    for i in range(g.n1):
        out.append(f'  a{i} [shape=box, label="{g.vertex_label(i)}"];')
    for j in range(g.n2):
        out.append(f'  b{j} [shape=circle, label="{g.vertex_label(g.n1 + j)}"];')
    for i, j in g.edges():
        out.append(f"  a{i} -- b{j};")
    out.append("}")
    return "\n".join(out) + "\n"


# -- files ---------------------------------------------------------------------


def dumps(g: BipartiteGraph, fmt="graph6", **meta) -> str:
    if fmt == "graph6":
        return format_meta(g, **meta) + "\n" + encode_graph6(g).decode("ascii") + "\n"
    if fmt == "text":
        return to_text(g)
    if fmt == "dot":
        return to_dot(g)
    raise ValueError(f"unknown format {fmt!r}")


def loads(text: str):
    """Parse one graph from graph6 (with optional metadata line) or biadjacency text.

    Returns ``(graph, metadata dict)``.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    meta = {}
    for ln in lines:
        if ln.startswith("#"):
            meta.update(parse_meta(ln))
    content = [ln for ln in lines if not ln.startswith("#")]
    if not content:
        raise ValueError("no graph found")
    if re.fullmatch(r"\d+\s+\d+", content[0]):
        return from_text(text), meta
    head = "\n".join(ln for ln in lines if ln.startswith("#") and parse_meta(ln))
    return decode_graph6((head + "\n" + content[0]).encode("ascii")), meta


def loads_many(text: str):
    """All graphs of a multi-graph graph6 stream, each optionally preceded by a metadata line."""
    out = []
    meta = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        if ln.startswith("#"):
            meta = parse_meta(ln)
            continue
        n1 = meta.get("n1")
        out.append((decode_graph6(ln.encode("ascii"), n1=n1), meta))
        meta = {}
    return out


def read_graph(path):
    return loads(Path(path).read_text())


def write_graph(path, g: BipartiteGraph, fmt="graph6", **meta):
    Path(path).write_text(dumps(g, fmt, **meta))
