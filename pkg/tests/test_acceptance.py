"""Acceptance criteria 1-7, one PASS/FAIL line each.

Run under pytest (the lines appear inline and again in the terminal summary)
or directly: ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bimoore import bounds as B  # noqa: E402
from bimoore import constructions as C  # noqa: E402
from bimoore import core  # noqa: E402
from bimoore import spectrum as S  # noqa: E402
from bimoore.bounds import Params  # noqa: E402
from bimoore.enumerate import EnumSpec, census, enumerate_spec, verify_uniqueness  # noqa: E402

from oracles import cofactor_char_poly  # noqa: E402
from reference_tables import CENSUS, EXTERNAL, NON_FORMULA, TABLES  # noqa: E402

RESULTS = {}

# printed cells the formulas cannot give; see the reference tables for why
KNOWN_TABLE_MISMATCHES = {(4, 10, 4), (6, 5, 4), (5, 7, 5), (5, 9, 7)}
KNOWN_CONDITION_MISMATCHES = {(5, 7, 5), (5, 9, 7)}


def report(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}"
    RESULTS[n] = line
    print(line, flush=True)
    return ok


# -- criterion bodies ---------------------------------------------------------------


def table_mismatches():
    bad = {}
    checked = 0
    for d, table in TABLES.items():
        rs = range(2, max(r for r, _ in table) + 1)
        emitted = B.emit_bound_table(d, rs)
        for (r, s), (value, _) in table.items():
            if (d, r, s) in EXTERNAL or (d, r, s) in NON_FORMULA:
                continue
            checked += 1
            if emitted.value(r, s) != value:
                bad[(d, r, s)] = (value, emitted.value(r, s))
    return checked, bad


def criterion_1():
    t0 = time.perf_counter()
    checked, bad = table_mismatches()
    dt = time.perf_counter() - t0
    improved = {3: [(6, 3, 21), (10, 5, 66), (10, 6, 80)],
                5: [(4, 3, 105), (6, 3, 246), (6, 4, 530), (7, 5, 1272), (8, 5, 1638),
                    (9, 4, 1144), (10, 5, 2496), (10, 6, 3968)]}
    missed = [(d, r, s, v) for d, cells in improved.items() for r, s, v in cells
              if B.best_bound(Params(r, s, d)).total != v]
    ok = not bad and not missed and dt < 1
    cells = ", ".join(f"[{r},{s};{d}] printed {p} got {g}" for (d, r, s), (p, g) in sorted(bad.items()))
    return ok, bad, f"({checked - len(bad)}/{checked} cells exact in {dt:.3f}s" + \
        (f"; differ: {cells})" if bad else ")")


def condition_mismatches():
    bad = []
    checked = 0
    for d in (3, 5):
        for (r, s), (_, old) in TABLES[d].items():
            checked += 1
            if B.improvement_applies(Params(r, s, d)) != (old is not None):
                bad.append((d, r, s))
    return checked, bad


def criterion_2():
    t0 = time.perf_counter()
    checked, bad = condition_mismatches()
    dt = time.perf_counter() - t0
    ok = not bad and dt < 1
    cells = ", ".join(f"[{r},{s};{d}]" for d, r, s in bad)
    return ok, bad, f"({checked - len(bad)}/{checked} cells agree in {dt:.3f}s" + \
        (f"; disagree: {cells})" if bad else ")")


def criterion_3():
    t0 = time.perf_counter()
    failures = []
    for recipe in C.standard_recipes():
        bad = recipe.check()
        if bad:
            failures.append(f"{recipe.name}{recipe.params}: {bad}")
    sub = [C.subdivision(C.complete_bipartite(r, r)).order for r in range(5, 11)]
    if sub != [35, 48, 63, 80, 99, 120]:
        failures.append(f"S(K_rr) orders {sub}")
    m2 = [C.moore_r2(r, 3).order for r in (3, 4, 5, 6, 8, 9, 10)]
    if m2 != [35, 78, 147, 248, 570, 803, 1092]:
        failures.append(f"moore_r2 orders {m2}")
    for r in (5, 8, 11, 14):
        g = C.g_prime_r(r)
        if (core.is_biregular(g), g.order, core.diameter(g)) != ((r, 3), 2 * r + 6, 3):
            failures.append(f"g_prime_r({r})")
    h = C.semi_double(C.named("heawood"), side=2)
    if (h.order, core.diameter(h), B.defect(h, Params(6, 3, 3))) != (21, 3, 0):
        failures.append("semi_double(heawood)")
    dt = time.perf_counter() - t0
    ok = not failures and dt < 10
    return ok, failures, f"({len(C.standard_recipes())} recipes, {dt:.2f}s)" + \
        (f" {failures}" if failures else "")


def criterion_4():
    t0 = time.perf_counter()
    failures = []
    for name, g in [("K33", C.complete_bipartite(3, 3)), ("K44", C.complete_bipartite(4, 4)),
                    ("heawood", C.named("heawood")), ("tutte-coxeter", C.named("tutte-coxeter")),
                    ("PG(2,3)", C.projective_plane(3))]:
        if not S.check_subdivision_identity(g):
            failures.append(f"subdivision {name}")
    for k in (2, 3, 5):
        if not S.check_ktuple_identity(C.named("c6"), 1, k):
            failures.append(f"{k}-tuple C6")
    for name in ("heawood", "tutte-coxeter"):
        if not S.check_ktuple_identity(C.named(name), 1, 2):
            failures.append(f"2-tuple {name}")
    dt = time.perf_counter() - t0
    ok = not failures and dt < 30
    return ok, failures, f"(11 identities, {dt:.2f}s)" + (f" {failures}" if failures else "")


CENSUS_ROWS = [
    ("[4,3;3]", lambda: census(4, 3, 3, levels=1), (4, 3, 3), 14),
    ("[5,3;3]", lambda: census(5, 3, 3, levels=1), (5, 3, 3), 16),
    ("[6,3;3] n=21", lambda: [enumerate_spec(EnumSpec(7, 14, 6, 3, 3))], (6, 3, 3), 21),
    ("[7,3;3]", lambda: census(7, 3, 3, levels=1), (7, 3, 3), 20),
    ("[8,3;3]", lambda: census(8, 3, 3, levels=1), (8, 3, 3), 22),
    ("[10,3;3]", lambda: census(10, 3, 3, levels=1), (10, 3, 3), 26),
    ("[11,3;3]", lambda: census(11, 3, 3, levels=1), (11, 3, 3), 28),
    ("[5,4;3] n=18", lambda: [enumerate_spec(EnumSpec(8, 10, 5, 4, 3))], (5, 4, 3), 18),
    ("[3,2;4]", lambda: census(3, 2, 4, levels=1), (3, 2, 4), 15),
    ("[4,2;4]", lambda: census(4, 2, 4, levels=1), (4, 2, 4), 24),
    ("[3,2;5]", lambda: census(3, 2, 5), (3, 2, 5), None),
]


def _expected_rows(key, n):
    rows = CENSUS[key]
    return [(rn, g, w) for rn, _, _, g, w in rows if n is None or rn == n]


def criterion_5():
    t0 = time.perf_counter()
    failures = []
    for label, run, key, n in CENSUS_ROWS:
        got = [(rep.spec.n, rep.generated, rep.with_diameter) for rep in run()]
        if got != _expected_rows(key, n):
            failures.append(f"{label}: got {got}")
    dt = time.perf_counter() - t0
    ok = not failures and dt < 600
    return ok, failures, f"({len(CENSUS_ROWS)} rows, {dt:.1f}s)" + (f" {failures}" if failures else "")


def _enumerated(spec):
    reps = enumerate_spec(spec).representatives
    assert len(reps) == 1
    return reps[0]


def criterion_6():
    t0 = time.perf_counter()
    cases = [
        ("[4,3;3] n=14", lambda: _enumerated(EnumSpec(6, 8, 4, 3, 3)), 3),
        ("[6,3;3] n=21", lambda: C.semi_double(C.named("heawood"), side=2), 3),
        ("[3,2;4] n=15", lambda: C.subdivision(C.complete_bipartite(3, 3)), 4),
        ("[4,2;4] n=24", lambda: C.subdivision(C.complete_bipartite(4, 4)), 4),
        ("[3,2;5] n=15", lambda: _enumerated(EnumSpec(6, 9, 3, 2, 5)), 5),
    ]
    failures = []
    for label, build, d in cases:
        g = build()
        if core.diameter(g) != d or not verify_uniqueness(g, d=d):
            failures.append(label)
    dt = time.perf_counter() - t0
    return not failures, failures, f"({len(cases)} graphs, {dt:.2f}s)" + \
        (f" not unique: {failures}" if failures else "")


def criterion_7():
    import test_constructions as TC
    import test_spectrum as TS

    t0 = time.perf_counter()
    failures = []
    # girth cap on odd-diameter instances at their bound, built and enumerated
    odd = [(name, build(), Params(*rsd)) for name, build, rsd in TC.ODD_EXTREMAL]
    for rsd, spec in [((4, 3, 3), EnumSpec(6, 8, 4, 3, 3)), ((5, 3, 3), EnumSpec(6, 10, 5, 3, 3)),
                      ((3, 2, 5), EnumSpec(6, 9, 3, 2, 5))]:
        for i, g in enumerate(enumerate_spec(spec).representatives):
            odd.append((f"enumerated{rsd}#{i}", g, Params(*rsd)))
    for name, g, p in odd:
        if core.girth(g) > 4 * p.m:
            failures.append(f"girth cap {name}")
    for name, build in TC.REGULAR:
        g = build()
        if core.diameter(C.subdivision(g)) != 2 * core.diameter(g):
            failures.append(f"subdivision diameter {name}")
    for name, build in TC.BIPARTITE:
        g = build()
        for side in (1, 2):
            for k in (2, 3):
                if core.diameter(C.k_tuple(g, side, k)) != core.diameter(g):
                    failures.append(f"k-tuple diameter {name} side {side} k {k}")
    rng = random.Random(2024)
    perm_graphs = [C.named("heawood"), C.named("k33"), C.named("c6"), C.g_prime_r(5),
                   C.semi_double(C.named("heawood"))]
    for g in perm_graphs:
        c = core.canonical_form(g)
        for _ in range(1000):
            rp, cp = list(range(g.n1)), list(range(g.n2))
            rng.shuffle(rp)
            rng.shuffle(cp)
            if core.canonical_form(g.permuted(rp, cp)) != c:
                failures.append("canonical form")
                break
    for g in TS.SMALL:
        if S.char_poly(g).coeffs != cofactor_char_poly(g.adjacency_matrix()):
            failures.append(f"char poly {g}")
    dt = time.perf_counter() - t0
    detail = (f"({len(odd)} girth caps, {len(TC.REGULAR)} subdivisions, "
              f"{4 * len(TC.BIPARTITE)} k-tuples, {len(perm_graphs)}x1000 permutations, "
              f"{len(TS.SMALL)} char polys; {dt:.1f}s)")
    return not failures, failures, detail + (f" {failures}" if failures else "")


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
            5: criterion_5, 6: criterion_6, 7: criterion_7}


# -- pytest wrappers ------------------------------------------------------------------


def _run(n, capsys):
    ok, bad, detail = CRITERIA[n]()
    with capsys.disabled():
        print()
        report(n, ok, detail)
    return ok, bad


@pytest.mark.xfail(strict=True, reason="four printed cells are not reproducible; see the reference tables")
def test_criterion_1(capsys):
    ok, _ = _run(1, capsys)
    assert ok


def test_criterion_1_mismatches_are_only_the_known_cells():
    _, bad = table_mismatches()
    assert set(bad) == KNOWN_TABLE_MISMATCHES


@pytest.mark.xfail(strict=True, reason="two printed cells contradict the improvement condition")
def test_criterion_2(capsys):
    ok, _ = _run(2, capsys)
    assert ok


def test_criterion_2_mismatches_are_only_the_known_cells():
    _, bad = condition_mismatches()
    assert set(bad) == KNOWN_CONDITION_MISMATCHES


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_criterion(n, capsys):
    ok, bad = _run(n, capsys)
    assert ok, bad


if __name__ == "__main__":
    results = [CRITERIA[n]() for n in sorted(CRITERIA)]
    print()
    for n, (ok, _, detail) in zip(sorted(CRITERIA), results):
        report(n, ok, detail)
    sys.exit(0 if all(ok for ok, _, _ in results) else 1)
