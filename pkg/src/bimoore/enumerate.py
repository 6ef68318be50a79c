"""Isomorph-free generation of (r,s)-biregular bipartite graphs and Moore-graph census.

Counts follow the connected-graph convention: ``generated`` is the number of
isomorphism classes of *connected* biregular graphs with the given side sizes
(sides fixed, rows and columns permuted independently).  The raw number of
classes, disconnected ones included, is kept in ``EnumReport.total_classes``.
"""

from __future__ import annotations

import itertools
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional

import numpy as np

from . import _kernel as K
from . import core
from .bounds import Params, best_bound, plain_bound
from .core import BipartiteGraph
from .errors import ParamMismatch, TooLarge

DEFAULT_WORK_LIMIT = 200_000_000  # search-tree nodes per level
MAX_ORDER = 62  # vertex bitmasks live in one int64
DEFAULT_SPLIT_DEPTH = 3


def default_work_limit():
    env = os.environ.get("BIMOORE_WORK_LIMIT")
    return int(env) if env else DEFAULT_WORK_LIMIT


@dataclass(frozen=True)
class EnumSpec:
    """Side sizes ``n1, n2``, degrees ``r`` (side 1) and ``s`` (side 2), target diameter ``d``."""

    n1: int
    n2: int
    r: int
    s: int
    d: int = 3

    def __post_init__(self):
        if min(self.n1, self.n2, self.r, self.s) < 1:
            raise ValueError("side sizes and degrees must be positive")
        if self.n1 * self.r != self.n2 * self.s:
            raise ValueError(f"n1*r = {self.n1 * self.r} differs from n2*s = {self.n2 * self.s}")
        if self.r > self.n2 or self.s > self.n1:
            raise ValueError("a degree exceeds the opposite side size")
        if self.n1 + self.n2 > MAX_ORDER:
            raise TooLarge(f"enumeration is limited to {MAX_ORDER} vertices")

    @property
    def n(self):
        return self.n1 + self.n2


@dataclass
class EnumReport:
    spec: EnumSpec
    generated: int = 0
    with_diameter: int = 0
    smaller_diameter: int = 0
    total_classes: int = 0
    representatives: list = field(default_factory=list)
    representatives_truncated: bool = False
    nodes: int = 0
    elapsed: float = 0.0
    complete: bool = True

    @property
    def status(self):
        return "COMPLETE" if self.complete else "INCOMPLETE"

    def summary(self):
        line = f"{self.generated} generated, {self.with_diameter} with diameter {self.spec.d}"
        if not self.complete:
            line += " (INCOMPLETE: work limit reached)"
        return line


# -- kernel plumbing ------------------------------------------------------------


class _Tables:
    def __init__(self, spec: EnumSpec):
        n1, s = spec.n1, spec.s
        masks = sorted(sum(1 << i for i in c) for c in itertools.combinations(range(n1), s))
        self.types = np.array(masks, np.int64)
        tops, ptr = [], [0]
        for j in range(n1):
            tops += [t for t in masks if t.bit_length() - 1 == j]
            ptr.append(len(tops))
        self.tops = np.array(tops, np.int64)
        self.ptr = np.array(ptr, np.int64)


def _run(spec, tab, prefix, mode, limit, capacity, stop_depth=0, grow=True):
    """One kernel call; with ``grow`` the output buffer is enlarged and the call
    repeated whenever it overflowed, otherwise output beyond ``capacity`` is dropped."""
    width = stop_depth if mode == K.MODE_PREFIX else spec.n2
    while True:
        out = np.zeros((max(capacity, 1), width), np.int64)
        stats = np.zeros(K.NSTATS, np.int64)
        K.search(spec.n1, spec.n2, spec.r, spec.s, spec.d, tab.types, tab.tops, tab.ptr,
                 np.asarray(prefix, np.int64), stop_depth, mode, out, limit, stats)
        stored = int(stats[K.STORED])
        if stored <= capacity or stats[K.ABORTED] or not grow:
            return stats, out[:min(stored, capacity)]
        capacity = stored


def _graph(spec, tab, cols) -> BipartiteGraph:
    colmasks = [int(tab.types[c]) for c in cols]
    rows = tuple(sum(1 << j for j, t in enumerate(colmasks) if (t >> i) & 1) for i in range(spec.n1))
    return BipartiteGraph(spec.n1, spec.n2, rows)


def prefixes(spec: EnumSpec, depth=DEFAULT_SPLIT_DEPTH, work_limit=None):
    """Accepted column prefixes of length ``depth``; the subtrees below them partition the search."""
    depth = max(0, min(depth, spec.n2 - 1))
    if depth == 0:
        return [()]
    tab = _Tables(spec)
    limit = default_work_limit() if work_limit is None else work_limit
    stats, out = _run(spec, tab, (), K.MODE_PREFIX, limit, 1024, stop_depth=depth)
    if stats[K.ABORTED]:
        raise TooLarge("work limit reached while splitting the search tree")
    return [tuple(int(x) for x in row) for row in out]


@dataclass
class _TaskResult:
    prefix: tuple
    stats: list
    reps: list  # column-index tuples


def _task(spec, tab, prefix, mode, limit, capacity):
    stats, out = _run(spec, tab, prefix, mode, limit, capacity, grow=mode != K.MODE_EXACT)
    return _TaskResult(tuple(prefix), [int(x) for x in stats], [tuple(int(x) for x in r) for r in out])


def _load_checkpoint(path, spec):
    p = Path(path)
    if not p.exists():
        return {}
    data = json.loads(p.read_text())
    if tuple(data["spec"]) != (spec.n1, spec.n2, spec.r, spec.s, spec.d):
        raise ParamMismatch(f"checkpoint {path} belongs to another spec {data['spec']}")
    return {tuple(e["prefix"]): _TaskResult(tuple(e["prefix"]), e["stats"], [tuple(x) for x in e["reps"]])
            for e in data["done"]}


def _save_checkpoint(path, spec, split_depth, done):
    data = {
        "spec": [spec.n1, spec.n2, spec.r, spec.s, spec.d],
        "split_depth": split_depth,
        "done": [{"prefix": list(k), "stats": v.stats, "reps": [list(x) for x in v.reps]}
                 for k, v in sorted(done.items())],
    }
    tmp = Path(str(path) + ".tmp")
    tmp.write_text(json.dumps(data))
    tmp.replace(path)


def _explore(spec, mode, work_limit, threads, split_depth, max_reps, checkpoint=None):
    if split_depth is None:
        # deeper splits give the pool enough independent subtrees to balance
        split_depth = DEFAULT_SPLIT_DEPTH if threads <= 1 else DEFAULT_SPLIT_DEPTH + 3
    tab = _Tables(spec)
    limit = default_work_limit() if work_limit is None else work_limit
    tasks = prefixes(spec, split_depth, limit)
    done = _load_checkpoint(checkpoint, spec) if checkpoint else {}
    todo = [p for p in tasks if p not in done]
    used = sum(r.stats[K.NODES] for r in done.values())
    aborted = False
    partial = []  # aborted tasks; their counts are lower bounds only

    def run(p):
        return _task(spec, tab, p, mode, max(limit - used, 0), max_reps)

    if threads > 1 and len(todo) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            pending = iter(todo)
            futures = []
            # submit in order; each task sees the budget left when it starts
            for p in itertools.islice(pending, threads * 2):
                futures.append(pool.submit(run, p))
            i = 0
            while i < len(futures):
                res = futures[i].result()
                i += 1
                if res.stats[K.ABORTED]:
                    aborted = True
                    partial.append(res)
                else:
                    done[res.prefix] = res
                    used += res.stats[K.NODES]
                    if checkpoint:
                        _save_checkpoint(checkpoint, spec, split_depth, done)
                if used > limit:
                    aborted = True
                if not aborted:
                    nxt = next(pending, None)
                    if nxt is not None:
                        futures.append(pool.submit(run, nxt))
            for f in futures[i:]:
                f.cancel()
    else:
        for p in todo:
            res = run(p)
            if res.stats[K.ABORTED]:
                aborted = True
                partial.append(res)
                break
            done[res.prefix] = res
            used += res.stats[K.NODES]
            if checkpoint:
                _save_checkpoint(checkpoint, spec, split_depth, done)
            if used > limit:
                aborted = True
                break
    complete = not aborted and all(p in done for p in tasks)
    ordered = [done[p] for p in tasks if p in done]
    if not complete:
        ordered += partial
    return tab, ordered, complete


def enumerate_spec(spec: EnumSpec, work_limit=None, threads=1, split_depth=None,
                   max_reps=1000, checkpoint=None) -> EnumReport:
    """Generate every class for ``spec`` and count those of diameter exactly ``spec.d``."""
    t0 = time.perf_counter()
    tab, results, complete = _explore(spec, K.MODE_EXACT, work_limit, threads, split_depth,
                                      max_reps, checkpoint)
    rep = EnumReport(spec, complete=complete)
    cols = []
    for res in results:
        st = res.stats
        rep.total_classes += st[K.LEAVES]
        rep.generated += st[K.CONNECTED]
        rep.with_diameter += st[K.EXACT]
        rep.smaller_diameter += st[K.SMALLER]
        rep.nodes += st[K.NODES]
        cols.extend(res.reps)
    rep.representatives_truncated = len(cols) < rep.with_diameter or len(cols) > max_reps
    rep.representatives = [core.canonical_form(_graph(spec, tab, c)) for c in cols[:max_reps]]
    rep.elapsed = time.perf_counter() - t0
    return rep


def generate(spec: EnumSpec, work_limit=None, connected_only=True, canonical=False,
             threads=1, split_depth=None) -> Iterator[BipartiteGraph]:
    """Yield one representative per isomorphism class, in a fixed order.

    Representatives come out in the generator's own canonical shape; pass
    ``canonical=True`` to map each through :func:`core.canonical_form`.  Raises
    :class:`TooLarge` if the work limit cuts the search short.
    """
    mode = K.MODE_CONNECTED if connected_only else K.MODE_ALL
    tab, results, complete = _explore(spec, mode, work_limit, threads, split_depth, 4096)
    if not complete:
        raise TooLarge("work limit reached; the stream would be partial")
    for res in results:
        for c in res.reps:
            g = _graph(spec, tab, c)
            if canonical:
                g = core.canonical_form(g)
            yield g


def ladder(r, s, d, start_t=None):
    """Feasible ``(n1, n2)`` pairs ``(t*sigma, t*rho)`` from the plain bound downwards."""
    p = Params(r, s, d)
    b = plain_bound(p)
    t0 = b.n1_max // p.sigma if start_t is None else start_t
    out = []
    for t in range(t0, 0, -1):
        n1, n2 = t * p.sigma, t * p.rho
        if s <= n1 and r <= n2:
            out.append((n1, n2))
    return out


def census(r, s, d, work_limit=None, start_t=None, threads=1, exhaustive=False,
           max_reps=1000, checkpoint_dir=None, levels=None) -> list:
    """Walk down the order ladder until some level has a graph of diameter ``d``.

    Each level gets its own work budget.  A level that hits the budget is
    reported INCOMPLETE and the walk continues, since a partial zero proves
    nothing.  ``exhaustive`` lifts the budget entirely.
    """
    if not r > s >= 2:
        raise ValueError("census needs r > s >= 2")
    if d < 3:
        raise ValueError("census needs d >= 3")
    limit = (1 << 62) if exhaustive else work_limit
    reports = []
    for n1, n2 in ladder(r, s, d, start_t):
        if levels is not None and len(reports) >= levels:
            break
        if n1 + n2 > MAX_ORDER:
            continue
        ck = None
        if checkpoint_dir is not None:
            Path(checkpoint_dir).mkdir(parents=True, exist_ok=True)
            ck = Path(checkpoint_dir) / f"census_{r}_{s}_{d}_{n1}_{n2}.json"
        rep = enumerate_spec(EnumSpec(n1, n2, r, s, d), limit, threads, max_reps=max_reps,
                             checkpoint=ck)
        reports.append(rep)
        if rep.with_diameter > 0:
            break
    return reports


def best_order(r, s, d):
    return best_bound(Params(r, s, d)).total


def orient(g: BipartiteGraph, spec: EnumSpec) -> BipartiteGraph:
    """Return ``g`` with the degree-``r`` side as side 1, or raise ParamMismatch."""
    rs = core.is_biregular(g)
    if rs == (spec.r, spec.s) and (g.n1, g.n2) == (spec.n1, spec.n2):
        return g
    if rs == (spec.s, spec.r) and (g.n2, g.n1) == (spec.n1, spec.n2):
        return g.transpose()
    raise ParamMismatch(f"graph with sides ({g.n1},{g.n2}) and degrees {rs} does not fit {spec}")


def verify_uniqueness(g: BipartiteGraph, spec: Optional[EnumSpec] = None, d=None,
                      work_limit=None, threads=1) -> bool:
    """True iff the exhaustive search at ``g``'s parameters finds one class of diameter d, and it is g's.

    ``spec`` defaults to ``g``'s own sides and degrees with the larger degree on side 1.
    """
    if spec is None:
        rs = core.is_biregular(g)
        if rs is None:
            raise ParamMismatch("graph is not biregular")
        h = g if rs[0] >= rs[1] else g.transpose()
        r, s = core.is_biregular(h)
        spec = EnumSpec(h.n1, h.n2, r, s, core.diameter(h) if d is None else d)
    h = orient(g, spec)
    if core.diameter(h) != spec.d:
        raise ParamMismatch(f"graph diameter {core.diameter(h)} differs from d={spec.d}")
    rep = enumerate_spec(spec, work_limit, threads, max_reps=2)
    if not rep.complete:
        raise TooLarge("work limit reached before the search finished")
    return rep.with_diameter == 1 and rep.representatives[0] == core.canonical_form(h)
