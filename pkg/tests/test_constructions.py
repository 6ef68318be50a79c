import itertools

import pytest
from hypothesis import given, settings, strategies as st

from bimoore import constructions as C
from bimoore import core
from bimoore.bounds import Params, best_bound, plain_bound
from bimoore.core import INFINITE, BipartiteGraph
from bimoore.errors import (BadMultiplicity, NeedsInput, NotRegular, ParamMismatch,
                            TooSmall, UnsupportedOrder, UnsupportedResidue)

from reference_tables import G6N_DEGREE_OFFSETS
from test_core import small_graphs

RECIPES = C.standard_recipes()


@pytest.mark.parametrize("recipe", RECIPES, ids=lambda r: f"{r.name}{r.params}")
def test_recipe_checks_pass(recipe):
    assert recipe.check() == []


def test_recipe_reports_mismatch():
    recipe = RECIPES[0]
    assert recipe.check(C.named("heawood"))


# -- seeds ---------------------------------------------------------------------


def test_complete_bipartite():
    g = C.complete_bipartite(2, 5)
    assert core.degrees(g) == ((5, 5), (2,) * 5)
    assert C.complete_bipartite(3, 3).size == 9
    with pytest.raises(ValueError):
        C.complete_bipartite(0, 3)


def test_even_cycle_labels():
    g = C.even_cycle(6)
    assert g.labels1 == ("u1", "u3", "u5") and g.labels2 == ("2", "4", "6")
    assert core.diameter(g) == 3
    assert core.diameter(C.even_cycle(4)) == 2
    with pytest.raises(ValueError):
        C.even_cycle(5)


# -- geometries ----------------------------------------------------------------


@pytest.mark.parametrize("q", C.PLANE_ORDERS)
def test_projective_plane_axioms(q):
    g = C.projective_plane(q)
    n = q * q + q + 1
    assert (g.n1, g.n2) == (n, n)
    for rows in (g.rows, g.transpose().rows):
        for a, b in itertools.combinations(rows, 2):
            assert bin(a & b).count("1") == 1


@pytest.mark.parametrize("q", C.QUADRANGLE_ORDERS)
def test_quadrangle_counts_and_girth(q):
    g = C.symplectic_quadrangle(q)
    assert g.n1 == g.n2 == (1 + q) * (1 + q * q)
    assert core.girth(g) == 8


def test_unsupported_orders():
    with pytest.raises(UnsupportedOrder):
        C.projective_plane(6)
    with pytest.raises(UnsupportedOrder):
        C.symplectic_quadrangle(7)


def test_named_examples():
    assert C.named("heawood").order == 14
    assert C.named("tutte-coxeter").order == 30
    assert C.projective_plane(3).order == 26 and C.projective_plane(4).order == 42
    assert C.symplectic_quadrangle(3).order == 80 and C.symplectic_quadrangle(4).order == 170
    with pytest.raises(ValueError):
        C.named("petersen")


# -- transforms ----------------------------------------------------------------


@pytest.mark.parametrize("r", range(5, 11))
def test_subdivided_complete_orders(r):
    g = C.subdivision(C.complete_bipartite(r, r))
    assert g.order == r * r + 2 * r
    assert g.order == best_bound(Params(r, 2, 4)).total


def test_subdivided_complete_orders_list():
    assert [C.subdivision(C.complete_bipartite(r, r)).order for r in range(5, 11)] == \
        [35, 48, 63, 80, 99, 120]


def test_subdivision_examples():
    g = C.subdivision(C.complete_bipartite(3, 3))
    assert (g.order, core.is_biregular(g), core.diameter(g)) == (15, (3, 2), 4)
    g = C.subdivision(C.named("tutte-coxeter"))
    assert (g.order, core.is_biregular(g), core.diameter(g)) == (75, (3, 2), 8)


def test_moore_r2_orders():
    orders = [C.moore_r2_order(r, 3) for r in (3, 4, 5, 6, 8, 9, 10)]
    assert orders == [35, 78, 147, 248, 570, 803, 1092]
    assert C.moore_r2(4, 3).order == 78
    assert C.moore_r2_order(3, 4) == 75


REGULAR = [
    ("k22", lambda: C.complete_bipartite(2, 2)),
    ("k33", lambda: C.complete_bipartite(3, 3)),
    ("k55", lambda: C.complete_bipartite(5, 5)),
    ("c6", lambda: C.even_cycle(6)),
    ("c10", lambda: C.even_cycle(10)),
    ("heawood", lambda: C.named("heawood")),
    ("pg3", lambda: C.projective_plane(3)),
    ("tutte-coxeter", lambda: C.named("tutte-coxeter")),
]


@pytest.mark.parametrize("name,build", REGULAR, ids=[n for n, _ in REGULAR])
def test_subdivision_doubles_diameter(name, build):
    g = build()
    s = C.subdivision(g)
    assert core.diameter(s) == 2 * core.diameter(g)
    assert s.order == g.order + g.size


def test_subdivision_rejects_irregular():
    with pytest.raises(NotRegular):
        C.subdivision(C.complete_bipartite(2, 3))


BIPARTITE = REGULAR + [
    ("g12", lambda: C.g_6n(12)),
    ("g14", lambda: C.g_6n(14)),
    ("gprime5", lambda: C.g_prime_r(5)),
    ("k24", lambda: C.complete_bipartite(2, 4)),
    ("s-k33", lambda: C.subdivision(C.complete_bipartite(3, 3))),
]


@pytest.mark.parametrize("name,build", BIPARTITE, ids=[n for n, _ in BIPARTITE])
@pytest.mark.parametrize("side", [1, 2])
@pytest.mark.parametrize("k", [2, 3])
def test_k_tuple_preserves_diameter(name, build, side, k):
    g = build()
    t = C.k_tuple(g, side, k)
    base = g if side == 1 else g.transpose()
    assert t.order == k * base.n1 + base.n2
    assert core.diameter(t) == core.diameter(g)
    # every clone has the original's neighbourhood
    for c in range(k):
        assert t.rows[c * base.n1:(c + 1) * base.n1] == base.rows


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_side=5), st.sampled_from([1, 2]), st.integers(2, 3))
def test_k_tuple_preserves_diameter_random(g, side, k):
    d = core.diameter(g)
    if d == INFINITE or d < 2:
        return
    assert core.diameter(C.k_tuple(g, side, k)) == d


def test_semi_double_is_k2():
    g = C.even_cycle(6)
    assert C.semi_double(g) == C.k_tuple(g, 1, 2)
    h = C.semi_double(g)
    assert (h.order, core.is_biregular(h), core.diameter(h)) == (9, (2, 4), 3)


def test_semi_double_side_flag():
    g = C.semi_double(C.named("heawood"), side=2)
    assert core.is_biregular(g) == (3, 6)
    g = C.semi_double(C.named("heawood"), side=2, doubled_first=False)
    assert core.is_biregular(g) == (6, 3)
    assert (g.order, core.diameter(g)) == (21, 3)


def test_semi_double_tutte_coxeter():
    g = C.semi_double(C.named("tutte-coxeter"))
    assert (g.order, core.is_biregular(g), core.diameter(g)) == (45, (3, 6), 4)


@pytest.mark.parametrize("k,order,deg", [(3, 12, 6), (5, 18, 10)])
def test_cycle_tuples(k, order, deg):
    g = C.k_tuple(C.even_cycle(6), 1, k)
    assert (g.order, core.is_biregular(g), core.diameter(g)) == (order, (2, deg), 3)
    assert order == best_bound(Params(deg, 2, 3)).total


def test_cycle_tuple_half_parameter():
    # k = r/2 gives degrees (2, r) on 3(r/2 + 1) vertices; k = r gives (2, 2r) on 3(r + 1)
    for r in (2, 4, 6):
        half = C.k_tuple(C.even_cycle(6), 1, r // 2) if r > 2 else C.even_cycle(6)
        assert (half.order, core.is_biregular(half)) == (3 * (r // 2 + 1), (2, r))
        full = C.k_tuple(C.even_cycle(6), 1, r)
        assert (full.order, core.is_biregular(full)) == (3 * (r + 1), (2, 2 * r))


def test_k_tuple_errors():
    with pytest.raises(BadMultiplicity):
        C.k_tuple(C.even_cycle(6), 1, 1)
    with pytest.raises(ValueError):
        C.k_tuple(C.even_cycle(6), 3, 2)


# -- G_{6+n} and G'_r ------------------------------------------------------------


@pytest.mark.parametrize("n", range(6, 41))
def test_g6n_degrees_follow_residue_table(n):
    g = C.g_6n(n)
    k, rho = divmod(n, 6)
    d1, d2 = core.degrees(g)
    assert d1 == tuple(3 * k + o for o in G6N_DEGREE_OFFSETS[rho])
    assert set(d2) == {3}
    assert core.diameter(g) == 3


def test_g6n_examples():
    d1, d2 = core.degrees(C.g_6n(16))
    assert d1 == (8, 8, 8, 9, 8, 7)
    assert sum(d1) == sum(d2) == 48
    g = C.g_6n(12)
    assert core.is_biregular(g) == (6, 3) and g.order == 18


def test_g6n_too_small():
    with pytest.raises(TooSmall):
        C.g_6n(5)


@pytest.mark.parametrize("r", [5, 8, 11, 14, 17, 20])
def test_g_prime(r):
    g = C.g_prime_r(r)
    d1, _ = core.degrees(g)
    assert d1[3] == d1[5] == r
    assert core.is_biregular(g) == (r, 3)
    assert g.order == 2 * r + 6 == plain_bound(Params(r, 3, 3)).total
    assert core.diameter(g) == 3
    assert core.girth(g) <= 4


@pytest.mark.parametrize("r", [3, 4, 6, 7, 9, 2])
def test_g_prime_bad_residue(r):
    with pytest.raises(UnsupportedResidue):
        C.g_prime_r(r)


# -- families from polygons ------------------------------------------------------


def test_family_r_2r_examples():
    g = C.family_r_2r(3, 3)
    assert (g.order, core.diameter(g)) == (21, 3)
    g = C.family_r_2r(4, 3)
    assert (g.order, core.is_biregular(g)) == (39, (4, 8))
    assert C.printed_order_r_2r(4, 3) == 39


def test_family_r_2r_d4_order():
    for r in (3, 4, 5):
        g = C.family_r_2r(r, 4)
        assert g.order == C.counted_order_r_2r(r, 4) == 3 * r**3 - 6 * r**2 + 6 * r
        assert g.order != C.printed_order_r_2r(r, 4)
        assert core.diameter(g) == 4


def test_polygon_needs_input():
    with pytest.raises(NeedsInput):
        C.family_r_2r(3, 6)
    with pytest.raises(NeedsInput):
        C.moore_r2(3, 6)


def test_supplied_polygon_is_verified():
    with pytest.raises(ParamMismatch):
        C.family_r_2r(3, 6, moore_graph=C.named("heawood"))
    assert C.verify_moore_polygon(C.named("tutte-coxeter"), 3, 4)


def test_family_errors():
    with pytest.raises(ValueError):
        C.family_r_2r(2, 3)
    with pytest.raises(ValueError):
        C.family_r_2r(3, 5)
    with pytest.raises(ValueError):
        C.moore_r2(3, 5)


# -- girth cap on odd-diameter extremal instances ---------------------------------


ODD_EXTREMAL = [
    ("gprime5", lambda: C.g_prime_r(5), (5, 3, 3)),
    ("gprime8", lambda: C.g_prime_r(8), (8, 3, 3)),
    ("gprime11", lambda: C.g_prime_r(11), (11, 3, 3)),
    ("semi-heawood", lambda: C.semi_double(C.named("heawood"), 2), (6, 3, 3)),
    ("c6x2", lambda: C.k_tuple(C.even_cycle(6), 1, 2), (4, 2, 3)),
    ("c6x3", lambda: C.k_tuple(C.even_cycle(6), 1, 3), (6, 2, 3)),
    ("c6x5", lambda: C.k_tuple(C.even_cycle(6), 1, 5), (10, 2, 3)),
]


@pytest.mark.parametrize("name,build,rsd", ODD_EXTREMAL, ids=[n for n, _, _ in ODD_EXTREMAL])
def test_girth_cap_on_odd_bimoore(name, build, rsd):
    g = build()
    p = Params(*rsd)
    assert g.order == best_bound(p).total
    assert core.girth(g) <= 4 * p.m
