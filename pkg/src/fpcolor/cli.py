"""Command-line front end.

Subcommands: param | solve | generate | adversary | verify | lemma | question.
Exit codes: 0 pass, 1 fail/counterexample, 2 usage, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

from fpcolor import constructions as cons
from fpcolor import report as rep
from fpcolor import suites
from fpcolor.errors import CapExceeded
from fpcolor.graph import GraphError, bits, from_edge_list, from_graph6, to_edge_list, to_graph6
from fpcolor.params import PARAMETERS, get_parameter
from fpcolor.params import exact_mad_mask
from fpcolor.solvers import chi_fp, col_fp, decide_choosability_fp, find_island

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


GENERATORS = {
    "path": lambda a: cons.path(int(a[0])),
    "cycle": lambda a: cons.cycle(int(a[0])),
    "complete": lambda a: cons.complete(int(a[0])),
    "complete-bipartite": lambda a: cons.complete_bipartite(int(a[0]), int(a[1])),
    "edgeless": lambda a: cons.edgeless(int(a[0])),
    "petersen": lambda a: cons.petersen(),
    "robertson": lambda a: cons.robertson(),
    "fan-join": lambda a: cons.fan_join(int(a[0])),
    "path-power": lambda a: cons.path_power(int(a[0]), int(a[1])),
    "gnp": lambda a: cons.random_gnp(int(a[0]), float(a[1]), int(a[2]) if len(a) > 2 else 0),
    "bipartite": lambda a: cons.random_bipartite(int(a[0]), int(a[1]), int(a[2]) if len(a) > 2 else 0),
}


def load_graph(args):
    if getattr(args, "gen", None):
        token = args.gen
        name, _, argstr = token.partition(":")
        if name not in GENERATORS:
            raise GraphError(f"unknown generator {name!r}; choose from {sorted(GENERATORS)}")
        parts = [x for x in argstr.split(",") if x]
        try:
            return GENERATORS[name](parts)
        except (IndexError, ValueError) as exc:
            raise GraphError(f"bad generator arguments for {name!r}: {exc}") from exc
    if getattr(args, "graph", None):
        with open(args.graph) as fh:
            text = fh.read()
        stripped = text.strip()
        if "\n" not in stripped and " " not in stripped and stripped:
            return from_graph6(stripped)
        return from_edge_list(text)
    raise GraphError("no graph given: use --graph FILE or --gen NAME[:args]")


def add_graph_args(sub):
    sub.add_argument("--graph", help="edge-list or graph6 file")
    sub.add_argument("--gen", help="built-in generator, e.g. cycle:5, fan-join:2, gnp:8,0.4,7")


def emit(args, report):
    text = rep.canonical_json(report)
    if getattr(args, "fmt", "json") == "table":
        text = _as_table(report)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _as_table(report, prefix=""):
    lines = []

    def walk(key, val, depth):
        pad = "  " * depth
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            for k2, v2 in val.items():
                walk(k2, v2, depth + 1)
        elif isinstance(val, list) and len(val) > 8:
            lines.append(f"{pad}{key}: [{len(val)} items]")
        else:
            lines.append(f"{pad}{key}: {val}")

    for k, v in report.items():
        walk(k, v, 0)
    return "\n".join(lines) + "\n"


def _inputs(g, **extra):
    base = {"graph_hash": g.content_hash(), "graph6": to_graph6(g)}
    base.update(extra)
    return base


def cmd_param(args):
    g = load_graph(args)
    f = get_parameter(args.f)
    with rep.Stopwatch() as sw:
        value = f.eval(g)
    result = {"parameter": f.id, "value": value, "traits": f.traits()}
    if f.id == "mad":
        exact = exact_mad_mask(g, g.full_mask())
        result["exact_mad"] = exact
    emit(args, rep.make_report("param", _inputs(g, f=f.id), result,
                               elapsed_ms=sw.elapsed_ms if args.timing else None))
    return EXIT_PASS


def cmd_solve(args):
    g = load_graph(args)
    f = get_parameter(args.f)
    p = args.p
    with rep.Stopwatch() as sw:
        if args.op == "col":
            res = col_fp(g, f, p)
            result = {"op": "col", "f": f.id, "p": p, "value": res.value}
            cert = rep.col_to_json(res)
        elif args.op == "chi":
            value, coloring = chi_fp(g, f, p)
            result = {"op": "chi", "f": f.id, "p": p, "value": value}
            cert = rep.coloring_to_json(coloring, f.id, p)
        elif args.op == "choosable":
            if args.s is None:
                raise GraphError("choosable requires --s")
            ok, bad = decide_choosability_fp(g, args.s, f, p,
                                             cap_n=args.cap_choosability_n,
                                             cap_s=args.cap_choosability_s)
            result = {"op": "choosable", "f": f.id, "p": p, "s": args.s, "value": ok}
            cert = None if ok else rep.assignment_to_json(bad, f.id, p)
        elif args.op == "island":
            if args.s is None:
                raise GraphError("island requires --s")
            found = find_island(g, args.s, f, p)
            result = {"op": "island", "f": f.id, "p": p, "s": args.s,
                      "value": found is not None}
            cert = None if found is None else rep.island_to_json(found, f.id, p)
        else:
            raise GraphError(f"unknown solve op {args.op!r}")
    emit(args, rep.make_report(f"solve {args.op}", _inputs(g, f=f.id, p=p, s=args.s),
                               result, cert,
                               elapsed_ms=sw.elapsed_ms if args.timing else None))
    if args.op == "choosable" and not result["value"]:
        return EXIT_FAIL
    return EXIT_PASS


def cmd_generate(args):
    g = load_graph(args)
    if args.emit == "g6":
        text = to_graph6(g) + "\n"
    else:
        text = f"# {g.name} n={g.n} hash={g.content_hash()}\n" + to_edge_list(g) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS


def cmd_adversary(args):
    g = load_graph(args)
    state = cons.adversary_pipeline(g, args.s, args.k, args.d, args.seed)
    result = {
        "s": args.s,
        "k": args.k,
        "d": args.d,
        "seed": args.seed,
        "B": sorted(bits(state.B)),
        "L0": {str(v): sorted(state.L0[v]) for v in bits(state.B)},
        "A": sorted(bits(state.A)),
        "L1": {str(v): sorted(state.L1[v]) for v in bits(state.A)},
        "condition_report": state.condition_report,
    }
    status = "exact" if state.condition_report["c"] is True else "estimate"
    if args.check_domination:
        mode = args.check_domination
        dom = cons.verify_L1_dominates(g, state.A, state.B, state.L0, state.L1,
                                       args.k, mode=mode, trials=args.trials,
                                       seed=f"{args.seed}:dom")
        result["domination"] = {
            "ok": dom.ok,
            "exact": dom.exact,
            "worst_margin": dom.worst_margin,
            "checked": dom.checked,
        }
        if not dom.exact:
            status = "estimate"
    emit(args, rep.make_report("adversary", _inputs(g, s=args.s, k=args.k, d=args.d,
                                                    seed=args.seed),
                               result, status=status))
    return EXIT_PASS


def cmd_verify(args):
    with open(args.report) as fh:
        import json

        loaded = json.load(fh)
    try:
        ok = rep.verify_report(loaded)
    except rep.CertificateError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print("certificate OK" if ok else "certificate INVALID")
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_lemma(args):
    fn = suites.SUITES[args.name]
    kwargs = {}
    if args.seed is not None and args.name != "estim":
        kwargs["seed"] = args.seed
    if args.name == "lemma1":
        kwargs.update(graphs=args.graphs, max_n=args.max_n, assignments=args.trials)
    elif args.name == "nofan":
        kwargs.update(i_values=tuple(args.i), trials=args.trials)
    elif args.name == "addit":
        kwargs.update(graphs=args.graphs, max_n=args.max_n)
    elif args.name == "path":
        kwargs.update(t_values=tuple(args.t), trials=args.trials)
        if args.n:
            kwargs["n"] = args.n
    elif args.name == "coldens":
        kwargs.update(graphs=args.graphs, max_n=args.max_n)
    elif args.name == "mindeg":
        kwargs.update(graphs=args.graphs)
    elif args.name == "estim":
        kwargs = {"smax": args.smax}
    elif args.name == "pipeline":
        kwargs.update(n=args.n or 200, d=args.d, s=args.s or 2, k=args.k,
                      seeds=tuple(range(args.seeds)), trials=args.trials)
        kwargs.pop("seed", None)
    result = fn(**kwargs)
    emit(args, rep.make_report(f"lemma {args.name}", {"config": {k: v for k, v in kwargs.items()}},
                               result,
                               status="exact"))
    return EXIT_PASS if result["passed"] else EXIT_FAIL


def cmd_question(args):
    if args.gen or args.graph:
        graphs = [load_graph(args)]
    else:
        graphs = suites.random_graph_sample(args.graphs, args.max_n, args.seed or 0)
    result = suites.question_scan(args.q, graphs, args.p, smax=args.smax,
                                  cap_n=args.cap_choosability_n)
    emit(args, rep.make_report(f"question {args.q}", {"p": args.p, "count": len(graphs)},
                               result))
    return EXIT_PASS if not result["violations"] else EXIT_FAIL


def build_parser():
    ap = argparse.ArgumentParser(prog="fpcolor", description=__doc__)
    ap.add_argument("--timing", action="store_true",
                    help="include elapsed_ms in reports (breaks byte-identity)")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(sp):
        add_graph_args(sp)
        sp.add_argument("--format", dest="fmt", choices=("json", "table"), default="json")
        sp.add_argument("--out")

    sp = sub.add_parser("param", help="evaluate a graph parameter")
    common(sp)
    sp.add_argument("--f", required=True, choices=sorted(PARAMETERS))
    sp.set_defaults(fn=cmd_param)

    sp = sub.add_parser("solve", help="exact solvers with certificates")
    sp.add_argument("op", choices=("chi", "choosable", "col", "island"))
    common(sp)
    sp.add_argument("--f", required=True, choices=sorted(PARAMETERS))
    sp.add_argument("--p", type=int, default=1)
    sp.add_argument("--s", type=int)
    sp.add_argument("--cap-choosability-n", type=int, default=10)
    sp.add_argument("--cap-choosability-s", type=int, default=3)
    sp.set_defaults(fn=cmd_solve)

    sp = sub.add_parser("generate", help="emit a graph as graph6 or edge list")
    add_graph_args(sp)
    sp.add_argument("--emit", choices=("g6", "edges"), default="g6")
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_generate)

    sp = sub.add_parser("adversary", help="run the adversarial list pipeline")
    common(sp)
    sp.add_argument("--s", type=int, default=2)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--d", type=int, default=64)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--check-domination", choices=("exact", "sampled"))
    sp.add_argument("--trials", type=int, default=200)
    sp.set_defaults(fn=cmd_adversary)

    sp = sub.add_parser("verify", help="re-verify a report's certificate")
    sp.add_argument("report")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("lemma", help="run a lemma-verification suite")
    sp.add_argument("name", choices=sorted(suites.SUITES))
    sp.add_argument("--format", dest="fmt", choices=("json", "table"), default="json")
    sp.add_argument("--out")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--graphs", type=int, default=100)
    sp.add_argument("--max-n", type=int, default=9)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--i", type=int, nargs="+", default=[2, 3])
    sp.add_argument("--t", type=int, nargs="+", default=[1, 2, 3])
    sp.add_argument("--n", type=int)
    sp.add_argument("--smax", type=int, default=12)
    sp.add_argument("--d", type=int, default=64)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--s", type=int)
    sp.add_argument("--seeds", type=int, default=20)
    sp.set_defaults(fn=cmd_lemma)

    sp = sub.add_parser("question", help="counterexample scans for the open questions")
    sp.add_argument("q", choices=("q1", "q2"))
    common(sp)
    sp.add_argument("--p", type=int, default=1)
    sp.add_argument("--graphs", type=int, default=50)
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--smax", type=int, default=3)
    sp.add_argument("--cap-choosability-n", type=int, default=10)
    sp.set_defaults(fn=cmd_question)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
