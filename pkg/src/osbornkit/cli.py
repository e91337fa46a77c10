"""Command-line entry point: ``osbornkit <subcommand> ...``.

Exit status: 0 when the checked property holds, 1 when it fails, 2 for usage
errors and unmet hypotheses.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import corpus as corpus_mod
from .certificate import Certificate, merge
from .errors import (BadFilter, BoundExceeded, HypothesisFailed, IdentitySyntaxError, LoopError,
                     UnknownVertex)
from .geometry import build_pyramid, export_graph, pyramid_certificate, verify_rectangle
from .identity import CATALOG, check_identity, parse_identity
from .isotopy import (AUT_BOUND, BS2_BOUND, autotopisms, bs2_contains, drisko,
                      find_isomorphism, principal_isotope)
from .loop import Loop, parse_loop, render_loop
from .osborn import (DIAGRAMS, LABELS, THEOREMS, Conventions, all_params, build_isotope,
                     check_theorem, is_universal_osborn, osborn_certificate, verify_diagram)
from .perm import Perm
from .simplicial import (K_THEOREMS, build_named, check_f_ij, theorem_K, topology_lemmas,
                         validate_complex)


class UsageError(Exception):
    pass


def load_loop(arg: str) -> Loop:
    path = Path(arg)
    if path.is_file():
        return parse_loop(path.read_text(), name=path.stem)
    try:
        return corpus_mod.builtin(arg)
    except KeyError:
        raise UsageError(f"{arg!r} is neither a readable .loop file nor a built-in loop name") \
            from None


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}") from None
    return a, b


def _conv(args) -> Conventions:
    return Conventions(gamma1=args.gamma1, phi1=args.phi1)


def _params(args, loop: Loop):
    if getattr(args, "all", False):
        return None
    vals = (args.x, args.u, args.v)
    if any(v is None for v in vals):
        raise UsageError("give --x, --u and --v, or --all")
    if any(not 0 <= v < loop.n for v in vals):
        raise UsageError(f"parameters must lie in 0..{loop.n - 1}")
    return vals


def _emit(args, cert: Certificate) -> int:
    print(cert.to_json() if args.json else cert.summary())
    return 0 if cert.passed else 1


# ---------------------------------------------------------------- handlers

def cmd_validate(args):
    try:
        loop = load_loop(args.loop)
    except LoopError as exc:
        print(f"invalid: {exc}")
        return 1
    if args.json:
        print(json.dumps({"order": loop.n, "identity": loop.e, "valid": True}))
    else:
        print(f"loop of order {loop.n}, identity {loop.e}")
    return 0


def cmd_identity(args):
    loop = load_loop(args.loop)
    text = CATALOG.get(args.expr, args.expr)
    ident = parse_identity(text)
    ce = check_identity(loop, ident)
    if args.json:
        print(json.dumps({"identity": text, "holds": ce is None,
                          "counterexample": None if ce is None else
                          {"assignment": ce.assignment, "lhs": ce.lhs, "rhs": ce.rhs}}))
    elif ce is None:
        print(f"holds: {text}")
    else:
        where = ",".join(f"{k}={v}" for k, v in ce.assignment.items())
        print(f"fails at ({where}): lhs {ce.lhs}, rhs {ce.rhs}")
    return 0 if ce is None else 1


def cmd_osborn(args):
    loop = load_loop(args.loop)
    cert = osborn_certificate(loop)
    if args.universal:
        uo, wit = is_universal_osborn(loop, bound=args.bound)
        cert.add("universal Osborn", uo, wit and {"f,g,x,y,z": list(wit)})
    if args.json:
        print(cert.to_json())
    else:
        for c in cert.clauses:
            if not c.gating:
                continue
            if c.passed:
                print(f"{c.name} holds")
            elif c.name in ("OS3", "OS5"):
                print(f"{c.name} fails at ({','.join(map(str, c.witness['xyz']))})")
            else:
                print(f"{c.name} fails at (f,g,x,y,z)=({','.join(map(str, c.witness['f,g,x,y,z']))})")
    return 0 if cert.passed else 1


def cmd_isotope(args):
    loop = load_loop(args.loop)
    if args.pair is not None:
        iso = principal_isotope(loop, args.pair)
    else:
        if args.label is None:
            raise UsageError("give --pair f,g or --label with --x --u --v")
        iso = build_isotope(loop, args.label, _params(args, loop), _conv(args))
    if args.json:
        print(json.dumps({"order": iso.n, "identity": iso.e, "table": iso.table.tolist()}))
    else:
        sys.stdout.write(render_loop(iso))
    return 0


def cmd_autotopisms(args):
    loop = load_loop(args.loop)
    auts = autotopisms(loop, bound=args.bound)
    if args.json:
        print(json.dumps({"count": len(auts), "autotopisms":
                          None if args.count else [[list(p.image) for p in t] for t in auts]}))
    elif args.count:
        print(len(auts))
    else:
        print(f"{len(auts)} autotopisms")
        for t in auts:
            print(f"({t.a}) ({t.b}) ({t.c})")
    return 0


def cmd_isomorphic(args):
    g, h = load_loop(args.loop), load_loop(args.other)
    if g.n != h.n:
        theta = None
    else:
        theta = find_isomorphism(g, h)
    if args.json:
        print(json.dumps({"isomorphic": theta is not None,
                          "map": None if theta is None else list(theta.image)}))
    else:
        print("not isomorphic" if theta is None else f"isomorphic via {theta}")
    return 0 if theta is not None else 1


def cmd_drisko(args):
    loop = load_loop(args.loop)
    found = drisko(loop, args.fg, args.cd, bound=args.bound, all=args.all)
    triples = found if args.all else ([] if found is None else [found])
    if args.json:
        print(json.dumps({"exists": bool(triples), "autotopisms": [[list(p.image) for p in t]
                                                                  for t in triples]}))
    elif not triples:
        print("no autotopism")
    else:
        for t in triples:
            print(f"({t.a}) ({t.b}) ({t.c})")
    return 0 if triples else 1


def cmd_bs2(args):
    loop = load_loop(args.loop)
    theta = Perm.parse(args.perm)
    if theta.n != loop.n:
        raise UsageError(f"permutation has degree {theta.n}, loop has order {loop.n}")
    wit = bs2_contains(loop, theta, bound=args.bound)
    if args.json:
        print(json.dumps({"member": wit is not None, "witness": None if wit is None else list(wit)}))
    else:
        print("not in BS2" if wit is None else "in BS2: isomorphism Q_{%d,%d} -> Q_{%d,%d}" % wit)
    return 0 if wit is not None else 1


def _diagram_chunk(job):
    loop, which, conv, params = job
    return [(p, verify_diagram(loop, which, p, conv)) for p in params]


def cmd_diagram(args):
    loop = load_loop(args.loop)
    conv = _conv(args)
    p = _params(args, loop)
    if p is not None:
        return _emit(args, verify_diagram(loop, args.which, p, conv))
    params = list(all_params(loop.n))
    if args.jobs > 1:
        chunks = [params[i::args.jobs] for i in range(args.jobs)]
        with ProcessPoolExecutor(args.jobs) as pool:
            per_p = [r for part in pool.map(_diagram_chunk, [(loop, args.which, conv, c)
                                                              for c in chunks]) for r in part]
        per_p.sort(key=lambda item: item[0])
    else:
        per_p = _diagram_chunk((loop, args.which, conv, params))
    return _emit(args, merge(f"diagram {args.which}", loop.name or "loop", per_p))


def cmd_theorem(args):
    loop = load_loop(args.loop)
    return _emit(args, check_theorem(loop, args.name, _conv(args), bs2_bound=args.bound))


def cmd_complex(args):
    loop = load_loop(args.loop)
    if args.all:
        return _emit(args, theorem_K(loop, args.which, bound=args.bound, conv=_conv(args)))
    K = build_named(loop, args.which, _params(args, loop), _conv(args))
    cert = validate_complex(K, args.mode)
    if args.json:
        doc = cert.to_dict()
        doc["complex"] = K.to_dict()
        print(json.dumps(doc, indent=2))
        return 0 if cert.passed else 1
    print(K.to_json())
    return _emit(args, cert)


def cmd_map(args):
    loop = load_loop(args.loop)
    if args.i == args.j:
        raise UsageError("f_ij needs i != j")
    return _emit(args, check_f_ij(loop, args.i, args.j, _params(args, loop), _conv(args)))


def cmd_topology(args):
    loop = load_loop(args.loop)
    labels = args.labels.split(",") if args.labels else LABELS
    return _emit(args, topology_lemmas(loop, _params(args, loop), labels, bound=args.bound,
                                       conv=_conv(args)))


def cmd_pyramid(args):
    loop = load_loop(args.loop)
    g = build_pyramid(loop, _params(args, loop), _conv(args))
    cert = pyramid_certificate(g)
    rect = verify_rectangle(g)
    ok = cert.passed and rect.passed
    fmt = "json" if args.json else args.format
    if fmt in ("json", "dot"):
        sys.stdout.write(export_graph(g, fmt) + ("" if fmt == "dot" else "\n"))
    else:
        print(cert.summary())
        print(rect.summary())
    return 0 if ok else 1


def cmd_enumerate(args):
    pred = corpus_mod.compile_filter(args.filter)
    need_u = bool(args.filter) and "universal_osborn" in args.filter
    out = Path(args.emit) if args.emit else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
    count = 0
    for idx, table in enumerate(corpus_mod.iter_reduced_tables(args.order, bound=args.bound or
                                                               corpus_mod.ENUM_BOUND)):
        loop = Loop(table, name=f"o{args.order}_{idx}")
        if args.filter and not pred(corpus_mod.loop_flags(loop, need_u)):
            continue
        count += 1
        if out is not None:
            (out / f"{loop.name}.loop").write_text(render_loop(loop))
    print(json.dumps({"order": args.order, "count": count}) if args.json else count)
    return 0


def cmd_chein(args):
    g = load_loop(args.loop)
    m = corpus_mod.chein_double(g)
    text = render_loop(m)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_corpus(args):
    rows = []
    for loop in corpus_mod.corpus(args.filter, max_order=args.max_order,
                                  include_builtins=not args.no_builtins,
                                  enumerate_orders=[] if args.builtins_only else None):
        rows.append({"name": loop.name, "order": loop.n,
                     "flags": sorted(corpus_mod.loop_flags(loop))})
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        for r in rows:
            print(f"{r['name']}\t{r['order']}\t{' '.join(r['flags'])}")
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="osbornkit",
                                     description="Finite loops, Osborn identities and isotopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, loop=True, params=False, conv=False):
        sp = sub.add_parser(name, help=help)
        if loop:
            sp.add_argument("loop", help=".loop file or built-in name (Z3, Z2xZ2, S3, N5, M(S3,2), ...)")
        sp.add_argument("--json", action="store_true", help="print machine-readable output")
        sp.add_argument("--bound", type=int, default=None, help="override the search order cap")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes where supported")
        if params:
            sp.add_argument("--x", type=int)
            sp.add_argument("--u", type=int)
            sp.add_argument("--v", type=int)
        if conv:
            sp.add_argument("--gamma1", choices=("swapped", "printed"), default="swapped")
            sp.add_argument("--phi1", choices=("corrected", "printed"), default="corrected")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "parse and validate a loop")
    sp = add("identity", cmd_identity, "check an identity exhaustively")
    sp.add_argument("expr", help=f"identity text or one of {sorted(CATALOG)}")
    sp = add("osborn", cmd_osborn, "check OS3 and OS5")
    sp.add_argument("--universal", action="store_true", help="also check every principal isotope")
    sp = add("isotope", cmd_isotope, "print a principal isotope", params=True, conv=True)
    sp.add_argument("--pair", type=_pair, help="principal pair f,g")
    sp.add_argument("--label", help=f"one of {LABELS}")
    sp = add("autotopisms", cmd_autotopisms, f"enumerate AUT (order cap {AUT_BOUND})")
    sp.add_argument("--count", action="store_true")
    sp = add("isomorphic", cmd_isomorphic, "search for an isomorphism")
    sp.add_argument("other")
    sp = add("drisko", cmd_drisko, "autotopism taking (f,g,fg) to (c,d,cd)")
    sp.add_argument("--fg", type=_pair, required=True)
    sp.add_argument("--cd", type=_pair, required=True)
    sp.add_argument("--all", action="store_true", help="list every witness")
    sp = add("bs2", cmd_bs2, f"BS2 membership (order cap {BS2_BOUND})")
    sp.add_argument("--perm", required=True, help="comma-separated images, e.g. 2,0,1")
    sp = add("diagram", cmd_diagram, "verify a commutative diagram", params=True, conv=True)
    sp.add_argument("--which", choices=DIAGRAMS, required=True)
    sp.add_argument("--all", action="store_true", help="every parameter triple")
    sp = add("theorem", cmd_theorem, "check a theorem over all parameter triples", conv=True)
    sp.add_argument("--name", choices=THEOREMS, required=True)
    sp = add("complex", cmd_complex, "build and validate a complex of isotopes", params=True,
             conv=True)
    sp.add_argument("--which", default="K0", help=f"one of {K_THEOREMS}")
    sp.add_argument("--mode", choices=("abstract", "isotopes"), default="isotopes")
    sp.add_argument("--all", action="store_true", help="check the complex theorem over all p")
    sp = add("map", cmd_map, "check f_ij as a simplicial map", params=True, conv=True)
    sp.add_argument("--i", type=int, required=True, choices=range(4))
    sp.add_argument("--j", type=int, required=True, choices=range(4))
    sp = add("topology", cmd_topology, "check the topology-of-isotopes lemmas", params=True,
             conv=True)
    sp.add_argument("--labels", help="comma-separated isotope labels (default: all nine)")
    sp = add("pyramid", cmd_pyramid, "build the pyramid graph", params=True, conv=True)
    sp.add_argument("--format", choices=("json", "dot", "text"), default="text")
    sp = add("enumerate", cmd_enumerate, "enumerate reduced loops of one order", loop=False)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--filter", help="flag expression, e.g. 'osborn & !group'")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true", help="print the count only (default)")
    group.add_argument("--emit", metavar="DIR", help="write o<n>_<index>.loop files")
    sp = add("chein", cmd_chein, "Chein double M(G,2) of a group")
    sp.add_argument("-o", "--output")
    sp = add("corpus", cmd_corpus, "list the test corpus with flags", loop=False)
    sp.add_argument("--filter")
    sp.add_argument("--max-order", type=int, default=6)
    sp.add_argument("--no-builtins", action="store_true")
    sp.add_argument("--builtins-only", action="store_true")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, IdentitySyntaxError, BadFilter, UnknownVertex, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (HypothesisFailed, BoundExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LoopError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
