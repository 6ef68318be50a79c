"""Exact characteristic polynomials and the spectral identities for S(G) and G^{kV1}.

Nothing here touches floating point: spectra involving sqrt(2), sqrt(k), ...
are compared through integer polynomial identities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import core
from .core import BipartiteGraph
from .errors import BadMultiplicity, BadSpectralSymmetry, NotRegular, TooLarge

MAX_VERTICES = 256


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[i]`` multiplies ``x**i``."""

    coeffs: tuple

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c) if c else (0,))

    @classmethod
    def x_power(cls, k):
        return cls((0,) * k + (1,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs != (0,) else -1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(n)))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(other * a for a in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k):
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def compose(self, inner: "IntPolynomial"):
        """``self(inner(x))`` by Horner's scheme."""
        acc = IntPolynomial((0,))
        for a in reversed(self.coeffs):
            acc = acc * inner + IntPolynomial((a,))
        return acc

    def shift_up(self, k):
        """Multiply by ``x**k``."""
        return IntPolynomial((0,) * k + self.coeffs)

    def divmod_monic(self, divisor: "IntPolynomial"):
        """Exact long division by a monic divisor; returns (quotient, remainder)."""
        rem = list(self.coeffs)
        dq = divisor.degree
        if dq > self.degree:
            return IntPolynomial((0,)), self
        quot = [0] * (self.degree - dq + 1)
        for k in range(self.degree - dq, -1, -1):
            c = rem[k + dq]
            quot[k] = c
            if c:
                for i, b in enumerate(divisor.coeffs):
                    rem[k + i] -= c * b
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[:dq] or [0]))

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if not a:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return first + "".join(f" {s} {b}" for s, b in terms[1:])


def berkowitz(matrix):
    """Coefficients of ``det(xI - M)`` (lowest power first) by Berkowitz's
    division-free algorithm on Python integers."""
    n = len(matrix)
    poly = [1]  # highest power first during the recurrence
    for k in range(n):
        # leading k x k block A, column c = M[:k][k], row r = M[k][:k], corner a
        a = matrix[k][k]
        row = matrix[k][:k]
        col = [matrix[i][k] for i in range(k)]
        toeplitz = [1, -a]
        vec = col
        for _ in range(k):
            toeplitz.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(matrix[i][j] * vec[j] for j in range(k) if matrix[i][j]) for i in range(k)]
        new = [0] * (k + 2)
        for i in range(k + 2):
            acc = 0
            for j in range(min(i, k) + 1):
                acc += toeplitz[i - j] * poly[j]
            new[i] = acc
        poly = new
    return IntPolynomial(tuple(reversed(poly)))


def gram(g: BipartiteGraph):
    """``N N^T`` for the smaller side (as the row side)."""
    h = g if g.n1 <= g.n2 else g.transpose()
    rows = h.rows
    return [[(x & y).bit_count() for y in rows] for x in rows]


def char_poly(g: BipartiteGraph) -> IntPolynomial:
    """Characteristic polynomial of the full adjacency matrix.

    For ``A = [[0, N], [N^T, 0]]`` with ``n1 <= n2``, the Schur complement gives
    ``det(xI - A) = x^(n2-n1) det(x^2 I - N N^T)``, so only the smaller Gram
    matrix is expanded.
    """
    if g.order > MAX_VERTICES:
        raise TooLarge(f"char_poly is capped at {MAX_VERTICES} vertices, got {g.order}")
    small, large = sorted((g.n1, g.n2))
    if small == 0:
        return IntPolynomial.x_power(large)
    inner = berkowitz(gram(g))
    spread = [0] * (2 * inner.degree + 1)
    for i, a in enumerate(inner.coeffs):
        spread[2 * i] = a
    return IntPolynomial(tuple(spread)).shift_up(large - small)


def char_poly_general(adjacency):
    """Characteristic polynomial of an arbitrary integer matrix (no bipartite shortcut)."""
    return berkowitz(adjacency)


@dataclass(frozen=True)
class IdentityCheck:
    holds: bool
    lhs: IntPolynomial
    rhs: IntPolynomial
    witness: tuple = None  # (power, lhs coefficient, rhs coefficient) at the first difference

    def __bool__(self):
        return self.holds


def _compare(lhs, rhs):
    n = max(len(lhs.coeffs), len(rhs.coeffs))
    for i in range(n):
        if lhs[i] != rhs[i]:
            return IdentityCheck(False, lhs, rhs, (i, lhs[i], rhs[i]))
    return IdentityCheck(True, lhs, rhs)


def subdivision_rhs(phi_g: IntPolynomial, n, m, r):
    """``x^(m-n) * phi_G(x^2 - r)``."""
    return phi_g.compose(IntPolynomial((-r, 0, 1))).shift_up(m - n)


def check_subdivision_identity(g: BipartiteGraph, r=None, subdivided=None):
    """Compare ``phi_S(G)(x)`` with ``x^(m-n) phi_G(x^2 - r)`` exactly.

    ``subdivided`` is S(G) when it is already at hand (e.g. read from a file);
    otherwise it is built here.
    """
    from .constructions import subdivision

    d1, d2 = core.degrees(g)
    if len(set(d1 + d2)) != 1:
        raise NotRegular("the subdivision identity needs a regular graph")
    deg = d1[0] if d1 else d2[0]
    if r is None:
        r = deg
    elif r != deg:
        raise NotRegular(f"graph is {deg}-regular, not {r}-regular")
    lhs = char_poly(subdivision(g) if subdivided is None else subdivided)
    rhs = subdivision_rhs(char_poly(g), g.order, g.size, r)
    return _compare(lhs, rhs)


def ktuple_rhs(phi_g: IntPolynomial, n, n_side, k):
    """``x^((k-1) n_side) * sum_j a_j k^((n-j)/2) x^j``."""
    coeffs = []
    for j, a in enumerate(phi_g.coeffs):
        if a and (n - j) % 2:
            raise BadSpectralSymmetry(f"coefficient of x^{j} is {a} but n-j is odd")
        coeffs.append(a * k ** ((n - j) // 2) if a else 0)
    return IntPolynomial(tuple(coeffs)).shift_up((k - 1) * n_side)


def check_ktuple_identity(g: BipartiteGraph, side=1, k=2, tupled=None):
    """Compare ``phi`` of the k-tuple graph with the scaled spectrum of ``g`` plus zeros."""
    from .constructions import k_tuple

    if k < 2:
        raise BadMultiplicity(f"k-tuple identity needs k >= 2, got {k}")
    n_side = g.n1 if side == 1 else g.n2
    rhs = ktuple_rhs(char_poly(g), g.order, n_side, k)
    lhs = char_poly(k_tuple(g, side, k) if tupled is None else tupled)
    return _compare(lhs, rhs)


def unsubdivide(s_graph: BipartiteGraph) -> BipartiteGraph:
    """Recover G from S(G): the degree-2 side becomes the edge set of G.

    G must itself be bipartite; it is returned with the colour class of the
    lowest-numbered original vertex as side 1.
    """
    d1, d2 = core.degrees(s_graph)
    h = s_graph if set(d2) == {2} else s_graph.transpose()
    if set(core.degrees(h)[1]) != {2}:
        raise NotRegular("no side consists of degree-2 vertices")
    n = h.n1
    adj = [[] for _ in range(n)]
    for col in h.columns():
        u, v = [i for i in range(n) if (col >> i) & 1]
        adj[u].append(v)
        adj[v].append(u)
    colour = [-1] * n
    for root in range(n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    raise NotRegular("the contracted graph is not bipartite")
    a = [i for i in range(n) if colour[i] == 0]
    b = [i for i in range(n) if colour[i] == 1]
    pos = {v: j for j, v in enumerate(b)}
    rows = tuple(sum(1 << pos[w] for w in adj[u]) for u in a)
    return BipartiteGraph(len(a), len(b), rows)


def untuple(t_graph: BipartiteGraph):
    """Split a k-tuple graph into ``(base, side, k)``.

    Looks for a side whose vertices fall into twin classes (equal
    neighbourhoods) of a common size k >= 2 and keeps one vertex per class.
    """
    for side in (1, 2):
        h = t_graph if side == 1 else t_graph.transpose()
        classes = {}
        for i, row in enumerate(h.rows):
            classes.setdefault(row, []).append(i)
        sizes = {len(v) for v in classes.values()}
        if len(sizes) == 1 and min(sizes) >= 2:
            k = sizes.pop()
            reps = sorted(v[0] for v in classes.values())
            base = BipartiteGraph(len(reps), h.n2, tuple(h.rows[i] for i in reps))
            return base, 1, k
    raise BadMultiplicity("no side splits into twin classes of equal size k >= 2")


# -- display -------------------------------------------------------------------


def factor_display(p: IntPolynomial):
    """Pull out ``x``, ``x -/+ a`` and ``x^2 - a`` factors by trial division.

    Returns ``(factors, remainder)`` where ``factors`` maps a display string to
    its multiplicity.
    """
    factors = {}
    rest = p

    def strip(divisor, label):
        nonlocal rest
        count = 0
        while rest.degree >= divisor.degree:
            q, rem = rest.divmod_monic(divisor)
            if rem.coeffs != (0,):
                break
            rest = q
            count += 1
        if count:
            factors[label] = count

    strip(IntPolynomial((0, 1)), "x")
    bound = 1
    for a in rest.coeffs:
        bound = max(bound, abs(a))
    # integer roots are bounded by the Cauchy bound; graph spectra by the max degree
    limit = min(bound + 1, 4096)
    for a in range(1, limit + 1):
        if rest.degree < 1:
            break
        if rest(a) == 0:
            strip(IntPolynomial((-a, 1)), f"(x-{a})")
        if rest(-a) == 0:
            strip(IntPolynomial((a, 1)), f"(x+{a})")
    for a in range(2, limit + 1):
        if rest.degree < 2:
            break
        if math.isqrt(a) ** 2 == a:
            continue
        strip(IntPolynomial((-a, 0, 1)), f"(x^2-{a})")
    return factors, rest


def format_factored(p: IntPolynomial):
    factors, rest = factor_display(p)
    parts = [f"{f}^{k}" if k > 1 else f for f, k in factors.items()]
    if rest.degree > 0:
        parts.append(f"({rest})")
    elif rest.coeffs != (1,):
        parts.insert(0, str(rest.coeffs[0]))
    return "*".join(parts) if parts else "1"


def spectrum_symmetric(p: IntPolynomial, n):
    """True iff every coefficient with ``n - j`` odd vanishes."""
    return all(a == 0 for j, a in enumerate(p.coeffs) if (n - j) % 2)
