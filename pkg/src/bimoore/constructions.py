"""Builders for the graph families: seeds, incidence geometries and transforms."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from . import core
from .bounds import Params, defect
from .core import BipartiteGraph
from .errors import (BadMultiplicity, NeedsInput, NotRegular, ParamMismatch,
                     TooSmall, UnsupportedOrder, UnsupportedResidue)
from .fields import field as gf_field
from .fields import projective_points

PLANE_ORDERS = (2, 3, 4, 5, 7, 8, 9)
QUADRANGLE_ORDERS = (2, 3, 4, 5)


# -- seeds ---------------------------------------------------------------------


def complete_bipartite(a, b):
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite needs a, b >= 1")
    return BipartiteGraph(a, b, ((1 << b) - 1,) * a)


def even_cycle(length):
    """The cycle ``C_length`` with alternating sides; ``length`` must be even and >= 4.

    Vertices are labelled ``u1, 2, u3, 4, ...`` around the cycle, so C6 has
    sides ``{u1, u3, u5}`` and ``{2, 4, 6}``.
    """
    if length % 2 or length < 4:
        raise ValueError("even_cycle needs an even length >= 4")
    t = length // 2
    edges = []
    for i in range(t):
        edges.append((i, i))               # u_{2i+1} - (2i+2)
        edges.append(((i + 1) % t, i))     # (2i+2) - u_{2i+3}
    labels1 = tuple(f"u{2 * i + 1}" for i in range(t))
    labels2 = tuple(str(2 * i + 2) for i in range(t))
    return BipartiteGraph.from_edges(t, t, edges, labels1, labels2)


# -- incidence geometries ------------------------------------------------------


def projective_plane(q):
    """Point-line incidence graph of PG(2, q); side 1 = points, side 2 = lines."""
    if q not in PLANE_ORDERS:
        raise UnsupportedOrder(f"projective_plane supports q in {PLANE_ORDERS}, got {q}")
    f = gf_field(q)
    pts = projective_points(f, 3)
    lines = pts  # a line is the kernel of a dual vector
    edges = [(i, j) for i, p in enumerate(pts) for j, l in enumerate(lines) if f.dot(p, l) == 0]
    return BipartiteGraph.from_edges(
        len(pts), len(lines), edges,
        tuple("P" + "".join(map(str, p)) for p in pts),
        tuple("L" + "".join(map(str, l)) for l in lines),
    )


def _symplectic_form(f, x, y):
    a = f.sub(f.mul[x[0]][y[1]], f.mul[x[1]][y[0]])
    b = f.sub(f.mul[x[2]][y[3]], f.mul[x[3]][y[2]])
    return f.add[a][b]


def symplectic_quadrangle(q):
    """Incidence graph of W(q): all points of PG(3, q) and the totally isotropic lines
    of the alternating form ``x0 y1 - x1 y0 + x2 y3 - x3 y2``."""
    if q not in QUADRANGLE_ORDERS:
        raise UnsupportedOrder(f"symplectic_quadrangle supports q in {QUADRANGLE_ORDERS}, got {q}")
    f = gf_field(q)
    pts = projective_points(f, 4)
    index = {p: i for i, p in enumerate(pts)}
    lines = set()
    for i, a in enumerate(pts):
        for j in range(i + 1, len(pts)):
            b = pts[j]
            if _symplectic_form(f, a, b) != 0:
                continue
            members = {index[b]}
            for lam in range(f.q):
                members.add(index[f.normalize(f.vadd(a, f.scale(lam, b)))])
            lines.add(tuple(sorted(members)))
    lines = sorted(lines)
    edges = [(i, j) for j, line in enumerate(lines) for i in line]
    return BipartiteGraph.from_edges(
        len(pts), len(lines), edges,
        tuple("P" + "".join(map(str, p)) for p in pts),
        tuple("L" + ".".join(map(str, line)) for line in lines),
    )


def bipartite_moore_order(r, n):
    """Order of an r-regular bipartite Moore graph of diameter n."""
    return 2 * sum((r - 1) ** i for i in range(n))


def verify_moore_polygon(g: BipartiteGraph, r, n):
    """Check ``g`` is the incidence graph of a generalized n-gon of order (r-1, r-1)."""
    problems = []
    if core.is_biregular(g) != (r, r):
        problems.append(f"not {r}-regular")
    if g.order != bipartite_moore_order(r, n):
        problems.append(f"order {g.order} != {bipartite_moore_order(r, n)}")
    if not problems:
        if core.diameter(g) != n:
            problems.append(f"diameter is not {n}")
        elif core.girth(g) != 2 * n:
            problems.append(f"girth is not {2 * n}")
    if problems:
        raise ParamMismatch(f"supplied graph is not an [{r};{n}]-Moore bipartite graph: "
                            + ", ".join(problems))
    return True


# -- transforms ----------------------------------------------------------------


def subdivide_edges(n, edges, labels=None):
    """Subdivision of an arbitrary simple graph on ``n`` vertices.

    Side 1 keeps the old vertices, side 2 has one vertex per edge (in the
    given edge order).
    """
    rows = [0] * n
    new_labels = []
    for e, (u, v) in enumerate(edges):
        rows[u] |= 1 << e
        rows[v] |= 1 << e
        if labels:
            new_labels.append(f"x[{labels[u]},{labels[v]}]")
        else:
            new_labels.append(f"x{u}_{v}")
    return BipartiteGraph(n, len(edges), tuple(rows),
                          tuple(labels) if labels else None, tuple(new_labels))


def subdivision(g: BipartiteGraph):
    """S(G): a new degree-2 vertex on every edge of a regular bipartite graph."""
    d1, d2 = core.degrees(g)
    if len(set(d1 + d2)) != 1:
        raise NotRegular("subdivision expects a regular graph")
    edges = [(i, g.n1 + j) for i, j in g.edges()]
    labels = [g.vertex_label(v) for v in range(g.order)]
    return subdivide_edges(g.order, edges, labels)


def k_tuple(g: BipartiteGraph, side=1, k=2, doubled_first=True):
    """Replace each vertex of ``side`` by ``k`` clones with the same neighbourhood.

    Clone ``c`` of vertex ``u`` gets index ``c * n_side + u``, so the first
    block is the original graph.  The cloned side becomes side 1 of the result
    unless ``doubled_first`` is false.
    """
    if k < 2:
        raise BadMultiplicity(f"k-tuple needs k >= 2, got {k}")
    if side not in (1, 2):
        raise ValueError("side must be 1 or 2")
    base = g if side == 1 else g.transpose()
    labels = tuple(base.vertex_label(u) + "'" * c for c in range(k) for u in range(base.n1))
    out = BipartiteGraph(k * base.n1, base.n2, base.rows * k, labels,
                         tuple(base.vertex_label(base.n1 + j) for j in range(base.n2)))
    return out if doubled_first else out.transpose()


def semi_double(g: BipartiteGraph, side=1, doubled_first=True):
    return k_tuple(g, side, 2, doubled_first)


# -- the numeric diameter-3 family ----------------------------------------------


def g_6n(n):
    """G_{6+n}: side 1 = (0,j), j in Z_6; side 2 = (1,i), i in Z_n;
    (1,i) ~ (0,j) iff j = i, i+1 or i+3 (mod 6)."""
    if n < 6:
        raise TooSmall(f"G_(6+n) needs n >= 6, got {n}")
    edges = [(j, i) for i in range(n) for j in range(6) if (j - i) % 6 in (0, 1, 3)]
    return BipartiteGraph.from_edges(
        6, n, edges,
        tuple(f"(0,{j})" for j in range(6)),
        tuple(f"(1,{i})" for i in range(n)),
    )


def g_prime_r(r):
    """G'_r: G_{6+2r} with the edge (0,3)~(1,0) moved to (0,5)~(1,0)."""
    if r < 5 or r % 3 != 2:
        raise UnsupportedResidue(f"G'_r needs r >= 5 and r = 2 (mod 3), got r={r}")
    g = g_6n(2 * r)
    rows = list(g.rows)
    assert rows[3] & 1 and not rows[5] & 1
    rows[3] &= ~1
    rows[5] |= 1
    return BipartiteGraph(6, 2 * r, tuple(rows), g.labels1, g.labels2)


# -- families built from generalized polygons -----------------------------------


def _polygon(r, n, moore_graph):
    q = r - 1
    if n == 3:
        return projective_plane(q)
    if n == 4:
        return symplectic_quadrangle(q)
    if n in (6, 8):
        if moore_graph is None:
            raise NeedsInput(f"an [{r};{n}]-Moore bipartite graph must be supplied for n={n}")
        verify_moore_polygon(moore_graph, r, n)
        return moore_graph
    raise ValueError(f"unsupported polygon size n={n}")


def family_r_2r(r, d, moore_graph=None, doubled_first=True):
    """Semi-double of the [r;d]-Moore bipartite graph: degrees (r, 2r), diameter d."""
    if r < 3:
        raise ValueError("family_r_2r needs r >= 3")
    if d not in (3, 4, 6):
        raise ValueError("family_r_2r covers d in {3, 4, 6}")
    return semi_double(_polygon(r, d, moore_graph), side=2, doubled_first=doubled_first)


def printed_order_r_2r(r, d):
    """The closed-form orders as published for the [r,2r;d] family (d=4 disagrees with the count)."""
    return {
        3: 3 * r**2 - 3 * r + 3,
        4: 3 * r**3 - 6 * r**2 + 10 * r,
        6: 2 * r**5 - 8 * r**4 + 14 * r**3 - 12 * r**2 + 6 * r,
    }[d]


def counted_order_r_2r(r, d):
    """Order of the semi-double counted from the polygon sizes (3 times one side)."""
    return 3 * bipartite_moore_order(r, d) // 2


def moore_r2(r, m, moore_graph=None):
    """Subdivision of the [r;m]-Moore bipartite graph: an [r,2;2m]-bimoore graph."""
    if m not in (3, 4, 6):
        raise ValueError("moore_r2 covers m in {3, 4, 6}")
    return subdivision(_polygon(r, m, moore_graph))


def moore_r2_order(r, m):
    return (r + 2) * ((r - 1) ** m - 1) // (r - 2)


NAMED = {
    "heawood": lambda: projective_plane(2),
    "fano": lambda: projective_plane(2),
    "tutte-coxeter": lambda: symplectic_quadrangle(2),
    "k33": lambda: complete_bipartite(3, 3),
    "c6": lambda: even_cycle(6),
}


def named(name):
    try:
        return NAMED[name]()
    except KeyError:
        raise ValueError(f"unknown graph {name!r}; known: {', '.join(sorted(NAMED))}") from None


# -- recipes -------------------------------------------------------------------


@dataclass(frozen=True)
class Expected:
    order: int
    degrees: tuple            # (side-1 degree, side-2 degree)
    diameter: int
    girth: Optional[int] = None
    params: Optional[tuple] = None  # (r, s, d) for the defect check
    defect: Optional[int] = None


@dataclass
class ConstructionRecipe:
    name: str
    params: tuple
    build: Callable[[], BipartiteGraph] = field(repr=False)
    expected: Expected = None

    def check(self, graph=None):
        """Mismatches between the built graph and the expected parameters (empty = pass)."""
        g = self.build() if graph is None else graph
        e = self.expected
        bad = []
        if g.order != e.order:
            bad.append(f"order {g.order} != {e.order}")
        rs = core.is_biregular(g)
        if rs != tuple(e.degrees):
            bad.append(f"degrees {rs} != {tuple(e.degrees)}")
        diam = core.diameter(g)
        if diam != e.diameter:
            bad.append(f"diameter {diam} != {e.diameter}")
        if e.girth is not None:
            gi = core.girth(g)
            if gi != e.girth:
                bad.append(f"girth {gi} != {e.girth}")
        if e.defect is not None and not bad:
            dd = defect(g, Params(*e.params))
            if dd != e.defect:
                bad.append(f"defect {dd} != {e.defect}")
        return bad


def standard_recipes():
    out = []
    for r in range(3, 11):
        out.append(ConstructionRecipe(
            "subdivision-complete", (r,), lambda r=r: subdivision(complete_bipartite(r, r)),
            Expected(r * r + 2 * r, (r, 2), 4, 8, (r, 2, 4), 0)))
    for r in (3, 4, 5, 6, 8, 9, 10):
        out.append(ConstructionRecipe(
            "moore-r2", (r, 3), lambda r=r: moore_r2(r, 3),
            Expected(moore_r2_order(r, 3), (r, 2), 6, 12, (r, 2, 6), 0)))
    out.append(ConstructionRecipe(
        "moore-r2", (3, 4), lambda: moore_r2(3, 4),
        Expected(75, (3, 2), 8, 16, (3, 2, 8), 0)))
    for r in (5, 8, 11, 14):
        out.append(ConstructionRecipe(
            "g-prime", (r,), lambda r=r: g_prime_r(r),
            Expected(2 * r + 6, (r, 3), 3, 4, (r, 3, 3), 0)))
    out.append(ConstructionRecipe(
        "semi-double", ("heawood",), lambda: semi_double(projective_plane(2), side=2),
        Expected(21, (3, 6), 3, 4, (6, 3, 3), 0)))
    out.append(ConstructionRecipe(
        "family-r-2r", (3, 4), lambda: family_r_2r(3, 4),
        Expected(45, (3, 6), 4, 4, (6, 3, 4), 54)))
    out.append(ConstructionRecipe(
        "family-r-2r", (4, 3), lambda: family_r_2r(4, 3),
        Expected(39, (4, 8), 3, 4, (8, 4, 3), 3)))
    for q in PLANE_ORDERS:
        out.append(ConstructionRecipe(
            "projective-plane", (q,), lambda q=q: projective_plane(q),
            Expected(2 * (q * q + q + 1), (q + 1, q + 1), 3, 6, (q + 1, q + 1, 3), 0)))
    for q in QUADRANGLE_ORDERS:
        out.append(ConstructionRecipe(
            "symplectic-quadrangle", (q,), lambda q=q: symplectic_quadrangle(q),
            Expected(2 * (q + 1) * (q * q + 1), (q + 1, q + 1), 4, 8, (q + 1, q + 1, 4), 0)))
    for t in (2, 3, 5):
        out.append(ConstructionRecipe(
            "k-tuple", ("c6", t), lambda t=t: k_tuple(even_cycle(6), 1, t),
            Expected(3 * t + 3, (2, 2 * t), 3, 4, (2 * t, 2, 3), 0)))
    return out
