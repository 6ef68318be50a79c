"""Moore-type upper bounds on the order of bipartite biregular graphs.

All arithmetic is on Python integers, so no overflow regardless of size.
Conventions: ``r >= s`` are the two degrees, side 1 holds the degree-``r``
vertices (so it is the smaller side), and ``d`` is the diameter.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .core import BipartiteGraph, diameter, is_biregular
from .errors import NotApplicable, ParamMismatch, RegularCaseError


class Regime(str, Enum):
    EVEN = "EVEN"
    ODD_PLAIN = "ODD_PLAIN"
    ODD_IMPROVED = "ODD_IMPROVED"
    REGULAR = "REGULAR"


@dataclass(frozen=True)
class Params:
    r: int
    s: int
    d: int

    def __post_init__(self):
        if not (self.r >= self.s >= 2):
            raise ValueError(f"need r >= s >= 2, got r={self.r}, s={self.s}")
        if self.d < 2:
            raise ValueError(f"need d >= 2, got {self.d}")

    @property
    def m(self):
        return self.d // 2

    @property
    def odd(self):
        return self.d % 2 == 1

    @property
    def g(self):
        return math.gcd(self.r, self.s)

    @property
    def rho(self):
        return self.r // self.g

    @property
    def sigma(self):
        return self.s // self.g


@dataclass(frozen=True)
class BoundResult:
    n1_max: int
    n2_max: int
    total: int
    regime: Regime
    raw_caps: Optional[tuple] = None
    plain_total: Optional[int] = None  # the superseded value when improved


def geometric_q(r, s, m):
    """``1 + x + ... + x^(m-1)`` with ``x = (r-1)(s-1)``; equals ``(x^m - 1)/(x - 1)`` for x != 1."""
    x = (r - 1) * (s - 1)
    return sum(x ** i for i in range(m))


def moore_even(p: Params) -> BoundResult:
    if p.odd:
        raise ValueError("moore_even needs an even diameter")
    q = geometric_q(p.r, p.s, p.m)
    n1, n2 = p.s * q, p.r * q
    return BoundResult(n1, n2, n1 + n2, Regime.EVEN)


def partite_caps_odd(p: Params):
    """Tree counts ``(N1', N2')`` from a root on side 1 and on side 2."""
    if not p.odd or p.d < 3:
        raise ValueError("partite_caps_odd needs an odd diameter >= 3")
    q = geometric_q(p.r, p.s, p.m)
    return 1 + p.r * (p.s - 1) * q, 1 + p.s * (p.r - 1) * q


def improvement_applies(p: Params) -> bool:
    if not p.odd:
        raise ValueError("improvement_applies needs an odd diameter")
    if p.r == p.s:
        return False  # regular case: the classical bound applies, nothing to improve
    q = geometric_q(p.r, p.s, p.m)
    return (p.s * q - 1) % p.rho == 0


def regular_moore(p: Params) -> BoundResult:
    """Classical bipartite Moore bound for r = s (both sides equal)."""
    if p.r != p.s:
        raise ValueError("regular_moore needs r == s")
    k = p.r
    half = sum((k - 1) ** i for i in range(p.d))
    return BoundResult(half, half, 2 * half, Regime.REGULAR)


def moore_odd(p: Params) -> BoundResult:
    if not p.odd:
        raise ValueError("moore_odd needs an odd diameter")
    if p.r <= p.s:
        raise RegularCaseError(f"odd-diameter biregular bound needs r > s, got r=s={p.r}")
    caps = partite_caps_odd(p)
    n2p = caps[1]
    plain_t = n2p // p.rho
    plain_total = plain_t * (p.rho + p.sigma)
    if improvement_applies(p):
        assert n2p % p.rho == 0
        t = n2p // p.rho - 1
        return BoundResult(t * p.sigma, t * p.rho, t * (p.rho + p.sigma),
                           Regime.ODD_IMPROVED, caps, plain_total)
    return BoundResult(plain_t * p.sigma, plain_t * p.rho, plain_total, Regime.ODD_PLAIN, caps)


def plain_bound(p: Params) -> BoundResult:
    """The bound before the odd-diameter improvement (same as best_bound otherwise)."""
    b = best_bound(p)
    if b.regime is Regime.ODD_IMPROVED:
        t = b.plain_total // (p.rho + p.sigma)
        return BoundResult(t * p.sigma, t * p.rho, b.plain_total, Regime.ODD_PLAIN, b.raw_caps)
    return b


def best_bound(p: Params) -> BoundResult:
    if p.r == p.s:
        if p.odd:
            return regular_moore(p)
        return moore_even(p)
    return moore_odd(p) if p.odd else moore_even(p)


def odd_multiplier(p: Params, bound: BoundResult) -> int:
    """``t`` such that the side caps are ``(t*sigma, t*rho)``."""
    return bound.n1_max // p.sigma


def defect(g: BipartiteGraph, p: Params, against="best") -> int:
    """Bound minus order.  ``against="plain"`` uses the pre-improvement bound."""
    rs = is_biregular(g)
    if rs is None or sorted(rs) != sorted((p.r, p.s)):
        raise ParamMismatch(f"graph degrees {rs} do not match ({p.r},{p.s})")
    diam = diameter(g)
    if diam != p.d:
        raise ParamMismatch(f"graph diameter {diam} does not match d={p.d}")
    bound = best_bound(p) if against == "best" else plain_bound(p)
    return bound.total - g.order


def multiple_degree_caps(s, rho):
    """Side caps ``(N1, N2)`` of a ``[rho*s, s; 3]`` graph."""
    if s < 2 or rho < 2:
        raise ValueError("need s >= 2 and rho >= 2")
    if (s - 1) % rho == 0:
        return (s * s - 1) - (s - 1) // rho, rho * (s * s - 1) - (s - 1)
    c = s * s - -(-s // rho)
    return c, rho * c


def no_2s_s_bimoore(s) -> bool:
    """No ``[2s, s; 3]`` graph reaches the plain bound when s is odd."""
    if s < 3 or s % 2 == 0:
        raise NotApplicable(f"statement covers odd s >= 3 only, got s={s}")
    return True


# Diagonal cells whose published values come from external nonexistence results.
EXTERNAL_VALUES = {(7, 7, 4): 516, (7, 7, 6): 18660}


@dataclass
class BoundTable:
    d: int
    cells: dict = field(default_factory=dict)  # (r, s) -> BoundResult

    def value(self, r, s):
        return self.cells[(r, s)].total

    def annotation(self, r, s):
        b = self.cells[(r, s)]
        notes = []
        if b.regime is Regime.ODD_IMPROVED:
            notes.append(f"improved:{b.plain_total}→{b.total}")
        ext = EXTERNAL_VALUES.get((r, s, self.d))
        if ext is not None:
            notes.append(f"external:{ext}")
        if self.d == 3 and r == 2 * s and s % 2 == 1:
            notes.append("plain bound not attainable")
        return ";".join(notes)

    def improved_cells(self):
        return sorted(k for k, b in self.cells.items() if b.regime is Regime.ODD_IMPROVED)

    def r_values(self):
        return sorted({r for r, _ in self.cells})

    def s_values(self):
        return sorted({s for _, s in self.cells})

    def render_text(self):
        rs, ss = self.r_values(), self.s_values()
        cell_txt = {}
        for (r, s), b in self.cells.items():
            txt = str(b.total)
            if b.regime is Regime.ODD_IMPROVED:
                txt += f" (was {b.plain_total})"
            ext = EXTERNAL_VALUES.get((r, s, self.d))
            if ext is not None:
                txt += f" [lit. {ext}]"
            cell_txt[(r, s)] = txt
        width = max([len(t) for t in cell_txt.values()] + [3])
        head = "r\\s".rjust(4) + " | " + " ".join(str(s).rjust(width) for s in ss)
        lines = [f"Best Moore bounds for diameter d={self.d}", head, "-" * len(head)]
        for r in rs:
            row = [cell_txt.get((r, s), "").rjust(width) for s in ss]
            lines.append(str(r).rjust(4) + " | " + " ".join(row).rstrip())
        return "\n".join(lines) + "\n"

    def render_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d", "r", "s", "bound", "regime", "n1_max", "n2_max", "annotation"])
        for (r, s) in sorted(self.cells):
            b = self.cells[(r, s)]
            w.writerow([self.d, r, s, b.total, b.regime.value, b.n1_max, b.n2_max,
                        self.annotation(r, s)])
        return buf.getvalue()


def emit_bound_table(d, r_range, s_range=None) -> BoundTable:
    """Grid of best bounds over ``r in r_range``, ``s in s_range`` with ``2 <= s <= r``."""
    if s_range is None:
        s_range = r_range
    table = BoundTable(d)
    for r in r_range:
        for s in s_range:
            if 2 <= s <= r:
                table.cells[(r, s)] = best_bound(Params(r, s, d))
    return table
