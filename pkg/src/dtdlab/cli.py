"""dtdlab command line: solve, formula, gen, iso, classify, census, verify.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Optional, Sequence

from . import census as cz
from .canon import canonical_form, find_isomorphism
from .engine import SolveConstraints, dtd_number, is_edge_minimal, td_number
from .families import FamilySpec, build_graph, classify_extremal
from .formulas import dtd_cycle, dtd_key, dtd_path, dtd_upper_bound
from .generate import CONSTRAINTS, SamplerConfig, SamplerExhausted, enumerate_connected_min2, sample_graphs
from .graph import Graph, GraphError, VertexSet
from .io import emit_graph6, parse_edge_shorthand, parse_graph6, read_graph6_stream


class UsageError(Exception):
    pass


def _ints(text: Optional[str], flag: str) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from None


def _graph_spec(text: str) -> Graph:
    """A family spec, an edge shorthand "n:u-v,..." or a graph6 string."""
    if ":" in text:
        return parse_edge_shorthand(text)
    try:
        return build_graph(FamilySpec.parse(text))
    except ValueError:
        pass
    return parse_graph6(text)


def _input_graphs(args, stdin) -> list[Graph]:
    sources = [s for s in ("family", "edges", "stdin_graph6", "graph6_in") if getattr(args, s, None)]
    if len(sources) != 1:
        raise UsageError("give exactly one of --family, --edges, --stdin-graph6, --graph6-in")
    src = sources[0]
    try:
        if src == "family":
            return [build_graph(FamilySpec.parse(args.family))]
        if src == "edges":
            return [parse_edge_shorthand(args.edges)]
        if src == "stdin_graph6":
            return list(read_graph6_stream(stdin))
        with open(args.graph6_in) as fh:
            return list(read_graph6_stream(fh))
    except OSError as exc:
        raise UsageError(f"--graph6-in: {exc}") from None
    except (GraphError, ValueError) as exc:
        raise UsageError(f"--{src.replace('_', '-')}: {exc}") from None


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help='family spec, e.g. "C(7)", "Db(3,4,1)", "G(3;1,2)", "B7"')
    p.add_argument("--edges", help='edge shorthand "n:u-v,u-v,..."')
    p.add_argument("--stdin-graph6", action="store_true", help="read graph6 lines from stdin")
    p.add_argument("--graph6-in", metavar="FILE", help="read graph6 lines from FILE")


def _emit(out, payload, as_json: bool, human: str) -> None:
    out.write((json.dumps(payload) if as_json else human) + "\n")


# verbs ----------------------------------------------------------------------


def cmd_solve(args, out, stdin) -> int:
    graphs = _input_graphs(args, stdin)
    include, exclude = _ints(args.include, "--include"), _ints(args.exclude, "--exclude")
    for g in graphs:
        try:
            cons = SolveConstraints(VertexSet.of(g.n, include), VertexSet.of(g.n, exclude), args.target)
            cert = td_number(g) if args.total else dtd_number(g, cons)
        except (GraphError, ValueError) as exc:
            raise UsageError(str(exc)) from None
        key = "gamma_t" if args.total else "gamma_td"
        payload = {key: cert.value, "witness": cert.witness.to_list() if cert.feasible else None}
        if args.modes:
            payload["modes"] = [m.value for m in cert.modes]
        if cert.feasible:
            human = f"{key} = {cert.value}  witness = {{{', '.join(map(str, cert.witness.to_list()))}}}"
        else:
            human = f"{key}: infeasible"
        if args.modes and cert.feasible:
            human += "\n" + "\n".join(f"  {v}: {m.value}" for v, m in enumerate(cert.modes))
        _emit(out, payload, args.json, human)
    return 0


def cmd_formula(args, out, stdin) -> int:
    p = _ints(args.params, "params")
    try:
        if args.kind == "cycle" and len(p) == 1:
            payload = {"value": dtd_cycle(p[0])}
        elif args.kind == "path" and len(p) == 1:
            payload = {"value": dtd_path(p[0])}
        elif args.kind == "key" and len(p) == 2:
            e = dtd_key(*p)
            payload = {"value": e.value, "flags": sorted(e.flags), "source": e.source}
        elif args.kind == "bound" and len(p) == 2:
            b = dtd_upper_bound(p[0], p[1], args.connected, args.claw_free)
            payload = None if b is None else {"value": b.value, "exact": str(b.exact), "rule": b.rule}
        else:
            raise UsageError(f"formula {args.kind}: wrong number of parameters {p}")
    except (ValueError, GraphError) as exc:
        raise UsageError(str(exc)) from None
    human = "no bound applies" if payload is None else "  ".join(f"{k} = {v}" for k, v in payload.items())
    _emit(out, payload, args.json, human)
    return 0


def cmd_gen(args, out, stdin) -> int:
    modes = sum(bool(x) for x in (args.family, args.n, args.sample))
    if modes != 1:
        raise UsageError("gen needs exactly one of --family, --n, --sample")
    try:
        if args.family:
            graphs = [build_graph(FamilySpec.parse(args.family))]
        elif args.n:
            if args.n > cz.MAX_ENUM_ORDER:
                raise UsageError(f"--n: the enumerator stops at {cz.MAX_ENUM_ORDER}")
            graphs = enumerate_connected_min2(args.n)
        else:
            cons = tuple(c for c in args.constraints.split(",") if c)
            cfg = SamplerConfig(args.seed or 0, args.count, args.min_order, args.max_order, cons)
            graphs = sample_graphs(cfg)
        for g in graphs:
            out.write(emit_graph6(g) + "\n")
    except SamplerExhausted as exc:
        sys.stderr.write(f"skipped: {exc}\n")
        return 0
    except (GraphError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    return 0


def cmd_iso(args, out, stdin) -> int:
    try:
        g, h = _graph_spec(args.first), _graph_spec(args.second)
    except (GraphError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    phi = find_isomorphism(g, h)
    payload = {
        "isomorphic": phi is not None,
        "map": phi,
        "canonical": [str(canonical_form(g)), str(canonical_form(h))],
    }
    _emit(out, payload, args.json, "isomorphic" if phi is not None else "not isomorphic")
    return 0


def cmd_classify(args, out, stdin) -> int:
    for g in _input_graphs(args, stdin):
        tag = classify_extremal(g)
        payload = {"graph6": emit_graph6(g), "tag": None if tag is None else tag.tag,
                   "member": None if tag is None else str(tag.member)}
        _emit(out, payload, args.json, "none" if tag is None else str(tag))
    return 0


def _census_worker(g6: str) -> tuple[int, bool]:
    g = parse_graph6(g6)
    return dtd_number(g).value, is_edge_minimal(g)


def cmd_census(args, out, stdin) -> int:
    if args.graph6_in or args.stdin_graph6:
        graphs = _input_graphs(args, stdin)
    elif args.n:
        if not 3 <= args.n <= cz.MAX_ENUM_ORDER:
            raise UsageError(f"--n: the enumerator covers 3..{cz.MAX_ENUM_ORDER}; use --graph6-in beyond")
        graphs = enumerate_connected_min2(args.n)
    else:
        raise UsageError("census needs --n or a graph6 input")
    hist: Counter = Counter()
    orders: Counter = Counter()
    half_minimal = 0
    count = 0
    g6s = [emit_graph6(g) for g in graphs]
    for g6, (value, minimal) in zip(g6s, cz._pmap(_census_worker, g6s, args.threads)):
        n = parse_graph6(g6).n if not args.n else args.n
        if args.cap_order and n > args.cap_order:
            continue
        count += 1
        orders[n] += 1
        hist[(n, value)] += 1
        if minimal and value is not None and 2 * value >= n - 1:
            half_minimal += 1
    payload = {
        "graphs": count,
        "orders": {str(k): v for k, v in sorted(orders.items())},
        "gamma_td": {f"{n}:{v}": c for (n, v), c in sorted(hist.items(), key=lambda kv: (kv[0][0], kv[0][1] is None, kv[0][1] or 0))},
        "half_minimal": half_minimal,
    }
    lines = [f"graphs: {count}", f"half-minimal: {half_minimal}", "order  gamma_td  count"]
    lines += [f"{n:>5}  {str(v):>8}  {c}" for (n, v), c in sorted(hist.items(), key=lambda kv: (kv[0][0], str(kv[0][1])))]
    _emit(out, payload, args.json, "\n".join(lines))
    return 0


def cmd_verify(args, out, stdin) -> int:
    graphs = None
    if args.graph6_in or args.stdin_graph6:
        graphs = _input_graphs(args, stdin)
    try:
        reports = cz.run_suite(args.suite, n=args.n, seed=args.seed, threads=args.threads, graphs=graphs,
                               cap_order=args.cap_order)
    except ValueError as exc:
        raise UsageError(f"--suite: {exc}") from None
    if args.json:
        out.write(cz.dump_reports(reports) + "\n")
    else:
        out.write(cz.summary_table(reports) + "\n")
        for r in reports:
            for g6, why in r.counterexamples:
                out.write(f"  {r.claim_id}: {g6}  {why}\n")
    return 1 if any(r.status == cz.FAIL for r in reports) else 0


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--threads", type=int, default=cz.default_threads(), help="worker processes (env DTDLAB_THREADS)")
    common.add_argument("--cap-order", type=int, default=None, metavar="K")

    parser = argparse.ArgumentParser(prog="dtdlab", description="Disjunctive total domination toolkit")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("solve", parents=[common], help="gamma_td with a colex-least witness")
    _add_input(p)
    p.add_argument("--include", help="vertices forced into the set")
    p.add_argument("--exclude", help="vertices kept out of the set")
    p.add_argument("--target", type=int, default=None, help="only look for sets of at most this size")
    p.add_argument("--total", action="store_true", help="solve total domination instead")
    p.add_argument("--modes", action="store_true", help="report how each vertex is dominated")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("formula", parents=[common], help="closed forms and bounds")
    p.add_argument("kind", choices=("cycle", "path", "key", "bound"))
    p.add_argument("params", help="comma-separated: n | n | r,s | n,delta")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--claw-free", action="store_true")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("gen", parents=[common], help="emit graph6 for a family member, an order, or a sample")
    p.add_argument("--family")
    p.add_argument("--n", type=int)
    p.add_argument("--sample", action="store_true")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--min-order", type=int, default=8)
    p.add_argument("--max-order", type=int, default=14)
    p.add_argument("--constraints", default="connected,min-degree-2", help=f"subset of {','.join(CONSTRAINTS)}")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("iso", parents=[common], help="isomorphism test between two graphs")
    p.add_argument("first", help="family spec, edge shorthand or graph6")
    p.add_argument("second")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("classify", parents=[common], help="extremal family membership")
    _add_input(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", parents=[common], help="gamma_td distribution over an order or a stream")
    p.add_argument("--n", type=int)
    p.add_argument("--stdin-graph6", action="store_true")
    p.add_argument("--graph6-in", metavar="FILE")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", required=True, help=", ".join(cz.SUITES))
    p.add_argument("--n", type=int)
    p.add_argument("--stdin-graph6", action="store_true")
    p.add_argument("--graph6-in", metavar="FILE")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out=None, stdin=None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "threads", 1) < 1:
        sys.stderr.write("dtdlab: --threads must be at least 1\n")
        return 2
    try:
        return args.func(args, out, stdin)
    except UsageError as exc:
        sys.stderr.write(f"dtdlab {args.verb}: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
