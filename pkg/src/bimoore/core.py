"""Bipartite graphs stored as biadjacency bit-rows, plus metric computations.

A :class:`BipartiteGraph` keeps one Python ``int`` per side-1 vertex; bit ``j``
of ``rows[i]`` is set iff side-1 vertex ``i`` is adjacent to side-2 vertex
``j``.  Full-graph vertex numbering puts side 1 first: vertex ``i`` is row
``i`` and vertex ``n1 + j`` is column ``j``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

INFINITE = math.inf


@dataclass(frozen=True)
class BipartiteGraph:
    n1: int
    n2: int
    rows: tuple
    labels1: Optional[tuple] = field(default=None, compare=False, repr=False)
    labels2: Optional[tuple] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.n1 < 0 or self.n2 < 0 or self.n1 + self.n2 < 2:
            raise ValueError("a bipartite graph needs n1, n2 >= 0 and n1 + n2 >= 2")
        rows = tuple(int(x) for x in self.rows)
        if len(rows) != self.n1:
            raise ValueError(f"expected {self.n1} rows, got {len(rows)}")
        full = (1 << self.n2) - 1
        for i, x in enumerate(rows):
            if x < 0 or x & ~full:
                raise ValueError(f"row {i} has bits outside the {self.n2} columns")
        object.__setattr__(self, "rows", rows)
        for name, size in (("labels1", self.n1), ("labels2", self.n2)):
            lab = getattr(self, name)
            if lab is not None:
                lab = tuple(lab)
                if len(lab) != size:
                    raise ValueError(f"{name} must have {size} entries")
                object.__setattr__(self, name, lab)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_edges(cls, n1, n2, edges: Iterable, labels1=None, labels2=None):
        """Build from ``(i, j)`` pairs with ``i`` a side-1 and ``j`` a side-2 index."""
        rows = [0] * n1
        for i, j in edges:
            if not (0 <= i < n1 and 0 <= j < n2):
                raise ValueError(f"edge {(i, j)} out of range")
            rows[i] |= 1 << j
        return cls(n1, n2, tuple(rows), labels1, labels2)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]], n2=None):
        n1 = len(matrix)
        if n2 is None:
            n2 = len(matrix[0]) if n1 else 0
        rows = []
        for line in matrix:
            if len(line) != n2:
                raise ValueError("ragged biadjacency matrix")
            rows.append(sum(1 << j for j, b in enumerate(line) if b))
        return cls(n1, n2, tuple(rows))

    # -- views ----------------------------------------------------------------

    @property
    def order(self):
        return self.n1 + self.n2

    @property
    def size(self):
        return sum(x.bit_count() for x in self.rows)

    def columns(self):
        cols = [0] * self.n2
        for i, x in enumerate(self.rows):
            while x:
                low = x & -x
                cols[low.bit_length() - 1] |= 1 << i
                x ^= low
        return tuple(cols)

    def edges(self):
        out = []
        for i, x in enumerate(self.rows):
            j = 0
            while x:
                if x & 1:
                    out.append((i, j))
                x >>= 1
                j += 1
        return out

    def matrix(self):
        return [[(x >> j) & 1 for j in range(self.n2)] for x in self.rows]

    def adjacency_matrix(self):
        n, n1 = self.order, self.n1
        a = [[0] * n for _ in range(n)]
        for i, j in self.edges():
            a[i][n1 + j] = a[n1 + j][i] = 1
        return a

    def neighbor_masks(self):
        """Neighbourhoods as bitmasks over the full vertex numbering."""
        n1 = self.n1
        masks = [x << n1 for x in self.rows]
        masks.extend(self.columns())
        return masks

    def transpose(self):
        """Swap the roles of the two sides."""
        return BipartiteGraph(self.n2, self.n1, self.columns(), self.labels2, self.labels1)

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]):
        """Relabel: old row ``i`` becomes ``row_perm[i]``, old column ``j`` becomes ``col_perm[j]``."""
        rows = [0] * self.n1
        for i, x in enumerate(self.rows):
            y = 0
            j = 0
            while x:
                if x & 1:
                    y |= 1 << col_perm[j]
                x >>= 1
                j += 1
            rows[row_perm[i]] = y
        return BipartiteGraph(self.n1, self.n2, tuple(rows))

    def vertex_label(self, v):
        if v < self.n1:
            return self.labels1[v] if self.labels1 else f"a{v}"
        j = v - self.n1
        return self.labels2[j] if self.labels2 else f"b{j}"


@dataclass(frozen=True)
class GraphMetrics:
    degrees1: tuple
    degrees2: tuple
    diameter: float
    girth: float
    connected: bool


def degrees(g: BipartiteGraph):
    """Side-1 and side-2 degree lists (index order, i.e. multisets with positions kept)."""
    d1 = tuple(x.bit_count() for x in g.rows)
    d2 = tuple(c.bit_count() for c in g.columns())
    return d1, d2


def is_biregular(g: BipartiteGraph):
    """Return ``(r, s)`` if every side-1 vertex has degree r and every side-2 vertex degree s."""
    d1, d2 = degrees(g)
    if not d1 or not d2:
        return None
    if len(set(d1)) != 1 or len(set(d2)) != 1:
        return None
    r, s = d1[0], d2[0]
    assert r * g.n1 == s * g.n2
    return r, s


def eccentricities(g: BipartiteGraph, bound=None):
    """Per-vertex eccentricities by bitset breadth-first search.

    With ``bound`` set, the search stops as soon as some eccentricity exceeds it
    and the partial list is returned (its maximum is then ``> bound``).
    """
    nbr = g.neighbor_masks()
    n = len(nbr)
    full = (1 << n) - 1
    ecc = []
    for v in range(n):
        seen = frontier = 1 << v
        e = 0
        while seen != full:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= nbr[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            if not nxt:
                e = INFINITE
                break
            seen |= nxt
            frontier = nxt
            e += 1
            if bound is not None and e > bound:
                break
        ecc.append(e)
        if bound is not None and e > bound:
            break
    return ecc


def diameter(g: BipartiteGraph):
    return max(eccentricities(g))


def has_diameter(g: BipartiteGraph, d):
    """True iff the diameter is exactly ``d``; exits early once it exceeds ``d``."""
    ecc = eccentricities(g, bound=d)
    return max(ecc) == d


def is_connected(g: BipartiteGraph):
    nbr = g.neighbor_masks()
    full = (1 << len(nbr)) - 1
    seen = frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= nbr[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def girth(g: BipartiteGraph):
    """Length of a shortest cycle, or INFINITE for forests."""
    nbr = g.neighbor_masks()
    n = len(nbr)
    adj = [[u for u in range(n) if (m >> u) & 1] for m in nbr]
    best = INFINITE
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def metrics(g: BipartiteGraph):
    d1, d2 = degrees(g)
    diam = diameter(g)
    return GraphMetrics(
        degrees1=tuple(sorted(d1)),
        degrees2=tuple(sorted(d2)),
        diameter=diam,
        girth=girth(g),
        connected=diam != INFINITE,
    )


def degree_multiset(g: BipartiteGraph):
    d1, d2 = degrees(g)
    return Counter(d1), Counter(d2)


# -- canonical form ------------------------------------------------------------


def _row_key(row, cells):
    return tuple((row & c).bit_count() for c in cells)


def canonical_form(g: BipartiteGraph):
    """Lexicographically largest biadjacency matrix over row and column permutations.

    The matrix is read row by row, each row left to right.  Sides are never
    swapped.  Rows are fixed one at a time: the column order seen so far is an
    ordered partition into cells, and a candidate row contributes the vector of
    its intersection sizes with the cells (ones packed to the left in each
    cell).  Only candidates attaining the largest such vector are branched on;
    identical rows are branched on once.
    """
    n1, n2 = g.n1, g.n2
    rows = g.rows
    best = None  # list of row keys along the best path

    def refine(cells, row):
        out = []
        for c in cells:
            a, b = c & row, c & ~row
            if a:
                out.append(a)
            if b:
                out.append(b)
        return out

    def search(level, cells, used, keys):
        nonlocal best
        if level == n1:
            if best is None or keys > best:
                best = list(keys)
            return
        top = None
        cand = []
        seen_rows = set()
        for u in range(n1):
            if (used >> u) & 1:
                continue
            k = _row_key(rows[u], cells)
            if top is None or k > top:
                top, cand, seen_rows = k, [u], {rows[u]}
            elif k == top and rows[u] not in seen_rows:
                cand.append(u)
                seen_rows.add(rows[u])
        keys.append(top)
        if best is None or keys >= best[: level + 1]:
            for u in cand:
                search(level + 1, refine(cells, rows[u]), used | (1 << u), keys)
                if best[: level + 1] > keys:
                    break
        keys.pop()

    search(0, [(1 << n2) - 1] if n2 else [], 0, [])
    return _rows_from_keys(n1, n2, best)


def _rows_from_keys(n1, n2, keys):
    """Reconstruct the canonical matrix from per-level cell-intersection keys."""
    cells = [(0, n2)] if n2 else []  # (start, length) of each cell in column order
    out = []
    for key in keys:
        x = 0
        new_cells = []
        for (start, length), k in zip(cells, key):
            for j in range(start, start + k):
                x |= 1 << j
            if k:
                new_cells.append((start, k))
            if length - k:
                new_cells.append((start + k, length - k))
        out.append(x)
        cells = new_cells
    return BipartiteGraph(n1, n2, tuple(out))


def is_isomorphic(g: BipartiteGraph, h: BipartiteGraph):
    """Side-preserving isomorphism test through canonical forms."""
    if (g.n1, g.n2) != (h.n1, h.n2):
        return False
    if degree_multiset(g) != degree_multiset(h):
        return False
    return canonical_form(g) == canonical_form(h)
