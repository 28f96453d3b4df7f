"""Command-line front end.

Exit codes: 0 when the checked property holds, 1 when it fails, 2 on usage,
parse or I/O errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from pathlib import Path

from . import constructions as C
from .amalgam import (AmalgamError, AmalgamParams, amalgamate, iteration_plan, multipartite_two_factors, ratio_check,
                      solve_t, verify_orientation_property)
from .checkers import (check_inequalities, is_free, is_oversaturated, is_saturated, pattern_bounds, regularity,
                       rrsat_witness)
from .graph import Graph, Graph6Error, GraphError, decode_graph6, degree_summary, encode_graph6, format_edgelist, parse_edgelist
from .patterns import REGISTRY_HELP, PatternError, pattern_from_key
from .polarity import FieldError, oversaturated_family, polarity_graph, twin_augmented
from .search import StoreCorruption, load_store, render_table, rsat_table

USAGE_ERRORS = (GraphError, Graph6Error, PatternError, C.ConstructionError, AmalgamError, FieldError,
                StoreCorruption, ValueError, OSError)


class UsageError(Exception):
    pass


# file helpers --------------------------------------------------------------

def atomic_write(path: str | Path, data: str | bytes) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data.encode() if isinstance(data, str) else data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_graph(path: str | Path) -> Graph:
    """graph6 (first non-empty line) or the ``n <count>`` edge-list format."""
    text = Path(path).read_bytes().decode("ascii", errors="strict")
    first = next((ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")), "")
    if first.startswith(("n ", "name ")) or first == "n":
        return parse_edgelist(text)[0]
    return decode_graph6(first)


def write_graph(path: str | Path, g: Graph, fmt: str | None = None, name: str | None = None) -> str:
    fmt = fmt or ("edgelist" if str(path).endswith((".txt", ".edges", ".el")) else "graph6")
    if fmt == "graph6":
        atomic_write(path, encode_graph6(g) + b"\n")
    else:
        atomic_write(path, format_edgelist(g, name))
    return fmt


def resolve_graph(key: str) -> Graph:
    """Graph keys: any pattern key, ``G[H]`` for a blow-up, ``G+H`` for a
    join (binding loosest) and parentheses for grouping."""
    key = key.strip()
    depth = 0
    for i, ch in enumerate(key):
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        elif ch == "+" and depth == 0:
            return C.join(resolve_graph(key[:i]), resolve_graph(key[i + 1:]))
    if key and key[-1] in ")]":
        close, opener = key[-1], "(" if key[-1] == ")" else "["
        depth = 0
        for j in range(len(key) - 1, -1, -1):
            depth += key[j] == close
            depth -= key[j] == opener
            if depth == 0:
                break
        inner = key[j + 1:-1]
        if close == "]" and j > 0:
            return C.blow_up(resolve_graph(key[:j]), resolve_graph(inner))
        if close == ")" and j == 0:
            return resolve_graph(inner)
    return pattern_from_key(key).graph


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"construction {args.construction!r} needs --{name.replace('_', '-')}")


# gen -----------------------------------------------------------------------

def _gen_circulant_k3(a):
    _need(a, "n")
    spec = C.k3_connection_set(a.n)
    return C.circulant(spec), {"n": a.n, "A": list(spec.A), "case": C.k3_case(a.n)}, None


def _gen_circulant_k4(a):
    _need(a, "n")
    spec = C.k4_connection_set(a.n)
    return C.circulant(spec), {"n": a.n, "A": list(spec.A)}, None


def _gen_circulant(a):
    _need(a, "n", "A")
    spec = C.CirculantSpec(a.n, tuple(_ints(a.A)))
    return C.circulant(spec), {"n": a.n, "A": list(spec.A)}, None


def _gen_join(a):
    _need(a, "left", "right")
    left, right = resolve_graph(a.left), resolve_graph(a.right)
    return C.join(left, right), {"left": a.left, "right": a.right, "regularity": C.join_regularity(left, right)}, None


def _gen_blow_up(a):
    _need(a, "left", "right")
    return C.blow_up(resolve_graph(a.left), resolve_graph(a.right)), {"left": a.left, "right": a.right}, None


def _gen_graph(a):
    _need(a, "key")
    return resolve_graph(a.key), {"key": a.key}, None


def _gen_polarity(a):
    _need(a, "p")
    pg = polarity_graph(a.p)
    return pg.graph, {"p": a.p, "absolute_points": list(pg.absolute)}, pg.label_lines()


def _gen_polarity_twin(a):
    _need(a, "p")
    pg = twin_augmented(a.p)
    return pg.graph, {"p": a.p, "twin_of": pg.index((1, 1, 1))}, pg.label_lines()


def _gen_oversaturated(a):
    _need(a, "p", "t")
    g = oversaturated_family(a.p, a.t)
    return g, {"p": a.p, "t": a.t}, None


def _gen_regreg(a):
    _need(a, "t", "d")
    g = C.regreg_witness(a.t, a.d)
    return g, C.regreg_witness_info(a.t, a.d), list(f"{i} {lab}" for i, lab in enumerate(g.labels))


GENERATORS = {
    "circulant-k3": (_gen_circulant_k3, "triangle-saturated circulant on odd n (--n)"),
    "circulant-k4": (_gen_circulant_k4, "K4-saturated circulant on n = 8k+6 (--n)"),
    "circulant": (_gen_circulant, "circulant with connection set (--n, --A 1,4)"),
    "join": (_gen_join, "join of two graph keys (--left, --right)"),
    "blow-up": (_gen_blow_up, "lexicographic product left[right] (--left, --right)"),
    "graph": (_gen_graph, "any graph key such as C5[E2]+E6 (--key)"),
    "polarity": (_gen_polarity, "orthogonality graph over GF(2^p) (--p)"),
    "polarity-twin": (_gen_polarity_twin, "polarity graph plus a twin of (1,1,1) (--p)"),
    "oversaturated": (_gen_oversaturated, "twin-augmented polarity graph blown up by K_t (--p, --t)"),
    "regreg-witness": (_gen_regreg, "regular graph with a special saturating vertex (--t, --d)"),
}


def run_gen(args) -> int:
    if args.construction not in GENERATORS:
        raise UsageError(f"unknown construction {args.construction!r}; choose from {', '.join(GENERATORS)}")
    g, params, labels = GENERATORS[args.construction][0](args)
    out = Path(args.out)
    fmt = write_graph(out, g, args.format, name=args.construction)
    ds = degree_summary(g)
    meta = {"construction": args.construction, "params": params, "n": g.n, "edges": ds.edge_count, "format": fmt}
    if ds.regular_degree is not None:
        meta["d"] = ds.regular_degree
    else:
        meta["degrees"] = list(ds.degrees)
    if labels is None and g.labels is not None:
        labels = [f"{i} {lab}" for i, lab in enumerate(g.labels)]
    if labels is not None:
        label_path = out.with_name(out.name + ".labels")
        atomic_write(label_path, "\n".join(labels) + "\n")
        meta["labels"] = str(label_path)
    atomic_write(out.with_name(out.name + ".json"), json.dumps(meta, indent=2, default=str) + "\n")
    print(json.dumps(meta, default=str))
    return 0


# check ---------------------------------------------------------------------

def run_check(args) -> int:
    if args.sample is not None and args.seed is None:
        raise UsageError("sampled mode requires --seed")
    g = read_graph(args.input)
    if args.property == "regular":
        rep = regularity(g)
    else:
        if args.pattern is None:
            raise UsageError(f"--pattern is required for property {args.property!r}")
        f = pattern_from_key(args.pattern)
        if args.property == "free":
            rep = is_free(g, f)
        elif args.property == "saturated":
            rep = is_saturated(g, f, sample=args.sample, seed=args.seed)
        elif args.property == "oversaturated":
            rep = is_oversaturated(g, f, sample=args.sample, seed=args.seed)
        else:
            rep = rrsat_witness(g, f)
    print(rep.to_json())
    return 0 if rep.passed else 1


# amalgam / plan --------------------------------------------------------------

def run_amalgam(args) -> int:
    factors = multipartite_two_factors(args.q, args.s)
    orient = verify_orientation_property(factors)
    h = C.complete_multipartite(*([args.q] * (args.s + 1)))
    g = resolve_graph(args.g)
    gs = degree_summary(g)
    if gs.regular_degree is None:
        raise UsageError(f"G={args.g} is not regular")
    d_h = args.s * args.q
    t = args.t
    rational = None
    if t is None:
        t, rational = solve_t(h.n, d_h, g.n, gs.regular_degree, args.s)
        if t is None:
            print(json.dumps({"t": None, "t_rational": str(rational), "message": "no integral t"}))
            return 1
    params = AmalgamParams(args.s, t, h.n, d_h, g.n, gs.regular_degree)
    out = amalgamate(h, factors, args.s, t, g)
    ds = degree_summary(out)
    result = {
        "s": args.s, "q": args.q, "t": t, "G": args.g, "n": out.n, "d": ds.regular_degree,
        "g_blob_degree": params.g_blob_degree, "h_blob_degree": params.h_blob_degree,
        "orientation": orient.to_dict(),
        "ratio": ratio_check(params, out.n, ds.regular_degree or 0).to_dict(),
    }
    if args.out:
        write_graph(args.out, out, args.format)
        atomic_write(Path(args.out).with_name(Path(args.out).name + ".labels"),
                     "\n".join(f"{i} {lab}" for i, lab in enumerate(out.labels)) + "\n")
        atomic_write(Path(args.out).with_name(Path(args.out).name + ".json"), json.dumps(result, indent=2) + "\n")
    print(json.dumps(result))
    return 0 if orient.passed and ds.regular_degree is not None else 1


def run_plan(args) -> int:
    seed = resolve_graph(args.seed)
    plan = iteration_plan(args.s, args.q, seed, args.m, verify=args.verify)
    doc = {"s": args.s, "q": args.q, "seed": args.seed, "m": args.m,
           "step_factor": str(plan.step_factor), "steps": plan.to_json_list()}
    if args.out_dir:
        out = Path(args.out_dir)
        for st, g in zip(plan.steps, plan.graphs):
            write_graph(out / f"F{st.i}.g6", g, "graph6")
        atomic_write(out / "plan.json", json.dumps(doc, indent=2) + "\n")
    print(json.dumps(doc))
    if args.verify and not all(st.verified for st in plan.steps):
        return 1
    return 0


# search / table / bounds ------------------------------------------------------

def run_search(args) -> int:
    f = pattern_from_key(args.pattern)
    lo = args.n if args.n is not None else args.n_min
    hi = args.n if args.n is not None else args.n_max
    if lo is None or hi is None:
        raise UsageError("give --n or both --n-min and --n-max")
    results = rsat_table(range(lo, hi + 1), f, args.store)
    for res in results:
        passing = [o.d for o in res.outcomes if o.exists]
        print(json.dumps({
            "n": res.n, "pattern": res.pattern, "status": "exists" if passing else "nonexistent",
            "passing_degrees": passing, "rsat": res.rsat_value,
            "witnesses": {o.d: o.witness for o in res.outcomes if o.exists},
        }))
    return 0


def run_table(args) -> int:
    records = load_store(args.store)
    if args.format == "json":
        print(json.dumps(records, indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["pattern", "n", "d", "exists", "witness", "count_checked", "exhaustive"])
        w.writeheader()
        for r in records:
            w.writerow({k: r.get(k) for k in w.fieldnames})
        sys.stdout.write(buf.getvalue())
    else:
        print(render_table(records))
    return 0


def run_bounds(args) -> int:
    f = pattern_from_key(args.pattern)
    br = pattern_bounds(f)
    doc = {"pattern": f.name, **br.to_dict()}
    code = 0
    if args.n is not None and args.d is not None:
        rep = check_inequalities(args.n, args.d, br.m, br.r, args.t)
        doc["inequalities"] = rep.to_dict()
        code = 0 if rep.passed else 1
    print(json.dumps(doc, default=str))
    return code


# parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="regsat", description="Regular graph saturation toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    gen_help = "\n".join(f"  {k:<15} {v[1]}" for k, v in GENERATORS.items())
    g = sub.add_parser("gen", help="build a graph from the construction registry",
                       formatter_class=argparse.RawDescriptionHelpFormatter,
                       epilog=f"constructions:\n{gen_help}\n\ngraph keys: {REGISTRY_HELP}; G[H] blow-up; G+H join")
    g.add_argument("construction")
    g.add_argument("--n", type=int)
    g.add_argument("--A", help="connection set, e.g. 1,4")
    g.add_argument("--p", type=int)
    g.add_argument("--t", type=int)
    g.add_argument("--d", type=int)
    g.add_argument("--left")
    g.add_argument("--right")
    g.add_argument("--key")
    g.add_argument("--out", required=True)
    g.add_argument("--format", choices=["graph6", "edgelist"])
    g.set_defaults(func=run_gen)

    c = sub.add_parser("check", help="check a property of a graph file")
    c.add_argument("--in", dest="input", required=True)
    c.add_argument("--pattern", help=REGISTRY_HELP)
    c.add_argument("--property", required=True,
                   choices=["free", "saturated", "oversaturated", "rrsat_witness", "regular"])
    c.add_argument("--sample", type=int, help="check this many random non-edges instead of all")
    c.add_argument("--seed", type=int)
    c.set_defaults(func=run_check)

    a = sub.add_parser("amalgam", help="amalgamate K_{q,...,q} with a regular graph G")
    a.add_argument("--q", type=int, required=True)
    a.add_argument("--s", type=int, required=True)
    a.add_argument("--g", required=True, help="graph key for G")
    a.add_argument("--t", type=int, help="blob size (solved for when omitted)")
    a.add_argument("--out")
    a.add_argument("--format", choices=["graph6", "edgelist"])
    a.set_defaults(func=run_amalgam)

    pl = sub.add_parser("plan", help="iterate amalgamation from a saturated seed")
    pl.add_argument("--s", type=int, required=True)
    pl.add_argument("--q", type=int, required=True)
    pl.add_argument("--seed", required=True, help="graph key of the seed, e.g. C5")
    pl.add_argument("--m", type=int, default=1)
    pl.add_argument("--verify", action="store_true", help="check saturation of every step")
    pl.add_argument("--out-dir")
    pl.set_defaults(func=run_plan)

    s = sub.add_parser("search", help="exhaustive search for regular saturated graphs")
    s.add_argument("--n", type=int)
    s.add_argument("--n-min", type=int)
    s.add_argument("--n-max", type=int)
    s.add_argument("--pattern", required=True)
    s.add_argument("--store", default="rsat_store.jsonl")
    s.set_defaults(func=run_search)

    b = sub.add_parser("bounds", help="cycle/diameter parameters of a pattern and degree inequalities")
    b.add_argument("--pattern", required=True)
    b.add_argument("--n", type=int)
    b.add_argument("--d", type=int)
    b.add_argument("--t", type=int)
    b.set_defaults(func=run_bounds)

    t = sub.add_parser("table", help="render the search store")
    t.add_argument("--store", default="rsat_store.jsonl")
    t.add_argument("--format", choices=["text", "json", "csv"], default="text")
    t.set_defaults(func=run_table)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(2, f"regsat {args.command}: {exc}\n")
    except USAGE_ERRORS as exc:
        print(f"regsat {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
