"""Command-line front end: ``bimoore {bounds,construct,verify,spectrum,enumerate,export}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 work limit reached.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds as B
from . import constructions as C
from . import core
from . import formats as F
from . import spectrum as S
from .errors import BimooreError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCOMPLETE = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- helpers --------------------------------------------------------------------


def _read_input(path):
    """Graph plus metadata from a file path, or stdin for ``-``."""
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return F.loads(text)


def _emit(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _base_graph(args):
    if args.of_file:
        return _read_input(args.of_file)[0], Path(args.of_file).stem
    if args.of:
        return C.named(args.of), args.of
    raise UsageError("this construction needs --of NAME or --from FILE")


def _build(args):
    """Returns (graph, provenance metadata)."""
    name, p = args.name, args.params
    need = {"complete": 2, "cycle": 1, "plane": 1, "quadrangle": 1, "g6n": 1, "g-prime": 1,
            "family-r-2r": 2, "moore-r2": 2}
    if name in need and len(p) != need[name]:
        raise UsageError(f"{name} takes {need[name]} integer parameter(s), got {len(p)}")
    if name in C.NAMED:
        return C.named(name), {"construction": name}
    if name == "complete":
        return C.complete_bipartite(*p), {"construction": name, "a": p[0], "b": p[1]}
    if name == "cycle":
        return C.even_cycle(p[0]), {"construction": name, "length": p[0]}
    if name == "plane":
        return C.projective_plane(p[0]), {"construction": name, "q": p[0]}
    if name == "quadrangle":
        return C.symplectic_quadrangle(p[0]), {"construction": name, "q": p[0]}
    if name == "g6n":
        return C.g_6n(p[0]), {"construction": name, "n": p[0]}
    if name == "g-prime":
        return C.g_prime_r(p[0]), {"construction": name, "r": p[0]}
    if name == "family-r-2r":
        return C.family_r_2r(p[0], p[1]), {"construction": name, "r": p[0], "d": p[1]}
    if name == "moore-r2":
        return C.moore_r2(p[0], p[1]), {"construction": name, "r": p[0], "m": p[1]}
    if name == "subdivision":
        g, base = _base_graph(args)
        return C.subdivision(g), {"construction": "subdivision", "base": base}
    if name in ("ktuple", "semi-double"):
        g, base = _base_graph(args)
        k = 2 if name == "semi-double" else args.k
        return C.k_tuple(g, args.side, k), {"construction": "ktuple", "base": base, "k": k,
                                            "side": args.side}
    raise UsageError(f"unknown construction {name!r}")


CONSTRUCTIONS = sorted(C.NAMED) + ["complete", "cycle", "plane", "quadrangle", "g6n", "g-prime",
                                   "family-r-2r", "moore-r2", "subdivision", "ktuple", "semi-double"]


# -- subcommands ----------------------------------------------------------------


def run_bounds(args):
    lo = args.min
    if not (2 <= lo <= args.max):
        raise UsageError(f"need 2 <= --min <= --max, got {lo}..{args.max}")
    if args.d < 2:
        raise UsageError("--d must be at least 2")
    table = B.emit_bound_table(args.d, range(lo, args.max + 1))
    _emit(table.render_csv() if args.format == "csv" else table.render_text(), None)
    return EXIT_OK


def run_construct(args):
    g, meta = _build(args)
    if args.format == "graph6":
        text = F.dumps(g, "graph6", **meta)
    else:
        text = F.dumps(g, args.format)
    _emit(text, args.out)
    return EXIT_OK


def run_verify(args):
    g, meta = _read_input(args.file)
    d1, d2 = core.degrees(g)
    rs = core.is_biregular(g)
    diam = core.diameter(g)
    gi = core.girth(g)
    print(f"order: {g.order} ({g.n1} + {g.n2}), edges: {g.size}")
    print(f"degrees: side 1 {sorted(set(d1))}, side 2 {sorted(set(d2))}")
    print(f"biregular: {rs if rs else 'no'}")
    print(f"diameter: {diam}")
    print(f"girth: {gi}")
    if args.expect is None:
        return EXIT_OK
    r, s, d = args.expect
    if r < s:
        r, s = s, r
    try:
        p = B.Params(r, s, d)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if rs is None or sorted(rs) != [s, r]:
        print(f"FAIL: degrees {rs} do not match ({r},{s})")
        return EXIT_FAIL
    if diam != d:
        print(f"FAIL: diameter {diam} != {d}")
        return EXIT_FAIL
    best = B.best_bound(p)
    plain = B.plain_bound(p)
    print(f"Moore bound: {best.total} ({best.regime.value}), defect {best.total - g.order}")
    if plain.total != best.total:
        print(f"plain bound: {plain.total}, defect {plain.total - g.order}")
    if p.odd and r > s:
        cap = 4 * p.m
        if g.order == plain.total:
            ok = gi <= cap
            print(f"girth cap g <= {cap} for the plain bound: {'holds' if ok else 'VIOLATED'}")
            if not ok:
                return EXIT_FAIL
        else:
            print(f"girth cap g <= {cap}: not applicable (order below the plain bound)")
    return EXIT_OK


def run_spectrum(args):
    g, meta = _read_input(args.file)
    phi = S.char_poly(g)
    print(f"char poly: {phi}")
    print(f"factored: {S.format_factored(phi)}")
    check = args.check
    if check == "auto":
        check = {"subdivision": "subdivision", "ktuple": "ktuple"}.get(meta.get("construction"))
        if check is None:
            raise UsageError("no construction recorded in the file; pass --check subdivision|ktuple")
    if check is None:
        return EXIT_OK
    if check == "subdivision":
        base = S.unsubdivide(g)
        res = S.check_subdivision_identity(base, subdivided=g)
        label = f"subdivision identity over a {base.order}-vertex base"
    else:
        base, side, k = S.untuple(g)
        res = S.check_ktuple_identity(base, side, k, tupled=g)
        label = f"{k}-tuple identity over a {base.order}-vertex base"
    if res:
        print(f"{label}: holds")
        return EXIT_OK
    power, lhs, rhs = res.witness
    print(f"{label}: FAILS at x^{power} ({lhs} vs {rhs})")
    return EXIT_FAIL


def run_enumerate(args):
    from . import enumerate as E

    r, s, d = args.r, args.s, args.d
    if (args.n1 is None) != (args.n2 is None):
        raise UsageError("--n1 and --n2 go together")
    limit = args.limit
    if args.exhaustive:
        limit = 1 << 62
    if args.n1 is not None:
        try:
            spec = E.EnumSpec(args.n1, args.n2, r, s, d)
        except ValueError as e:
            raise UsageError(str(e)) from None
        reports = [E.enumerate_spec(spec, limit, args.threads, checkpoint=args.checkpoint)]
    else:
        if not r > s >= 2 or d < 3:
            raise UsageError("census needs r > s >= 2 and d >= 3 (or give --n1/--n2)")
        reports = E.census(r, s, d, limit, threads=args.threads, checkpoint_dir=args.checkpoint)
    for rep in reports:
        sp = rep.spec
        print(f"n={sp.n} (n1={sp.n1}, n2={sp.n2}): {rep.summary()} [{rep.elapsed:.2f}s]")
        if args.emit:
            out = Path(args.emit)
            out.mkdir(parents=True, exist_ok=True)
            lines = [F.dumps(g, "graph6", r=r, s=s, d=d) for g in rep.representatives]
            (out / f"bimoore_{r}_{s}_{d}_n{sp.n}.g6").write_text("".join(lines))
    return EXIT_OK if all(rep.complete for rep in reports) else EXIT_INCOMPLETE


def run_export(args):
    g, meta = _read_input(args.file)
    extra = {k: v for k, v in meta.items() if k not in ("n1", "n2")}
    _emit(F.dumps(g, args.format, **extra) if args.format == "graph6" else F.dumps(g, args.format),
          args.out)
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(prog="bimoore", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("bounds", help="table of best Moore bounds")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max", type=int, required=True, help="largest degree")
    p.add_argument("--min", type=int, default=2, help="smallest degree")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=run_bounds)

    p = sub.add_parser("construct", help="build a named graph or family member")
    p.add_argument("name", choices=CONSTRUCTIONS)
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--of", choices=sorted(C.NAMED), help="base graph for subdivision/ktuple")
    p.add_argument("--from", dest="of_file", help="base graph file for subdivision/ktuple")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--side", type=int, choices=(1, 2), default=1)
    p.add_argument("--format", choices=("graph6", "text", "dot"), default="graph6")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=run_construct)

    p = sub.add_parser("verify", help="report degrees, diameter, girth and defect")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--expect", type=int, nargs=3, metavar=("R", "S", "D"))
    p.set_defaults(func=run_verify)

    p = sub.add_parser("spectrum", help="characteristic polynomial and spectral identities")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--check", choices=("subdivision", "ktuple", "auto"))
    p.set_defaults(func=run_spectrum)

    p = sub.add_parser("enumerate", help="isomorph-free census of Moore graphs")
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--exhaustive", action="store_true", help="ignore the work limit")
    p.add_argument("--limit", type=int, default=None,
                   help="search-tree nodes per order (default $BIMOORE_WORK_LIMIT or built-in)")
    p.add_argument("--emit", metavar="DIR", help="write diameter-d representatives as graph6")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--checkpoint", help="checkpoint file (with --n1/--n2) or directory (census)")
    p.set_defaults(func=run_enumerate)

    p = sub.add_parser("export", help="convert a graph file")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("--format", choices=("graph6", "text", "dot"), default="dot")
    p.add_argument("--out")
    p.set_defaults(func=run_export)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (BimooreError, ValueError, OSError) as e:
        code = getattr(e, "code", type(e).__name__)
        print(f"error [{code}]: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
