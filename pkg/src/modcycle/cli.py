"""Command-line front end.

Every run prints one JSON document on stdout (except ``reduce`` without
``--output``, which prints the graph file) and a one-line human summary on
stderr. Exit codes: 0 yes/produced, 1 no, 2 usage error, 3 oracle limit or
unsupported condition.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import Optional

from . import matrix, oracle, undirected, walks
from .errors import ConditionUnsupported, GraphFormatError, OracleLimit, PreconditionError
from .generate import random_digraph
from .graph import CycleWitness, Graph, parse_graph, walk_is_cycle
from .reduction import ReductionParams, reduce_st_cycle
from .residues import ResidueSet, Verdict, classify_dc, classify_uc, thm7_reduce

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _load(path: str) -> Graph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


def _residues(args) -> ResidueSet:
    try:
        return ResidueSet.parse(args.m, args.set)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _witness_payload(g: Graph, w: Optional[CycleWitness]):
    if w is None:
        return None
    if not walk_is_cycle(g, w.vertices):
        raise AssertionError(f"refusing to emit invalid witness {w.vertices}")
    return {"vertices": list(w.vertices), "length": w.length}


def _classification(g: Graph, rs: ResidueSet):
    return classify_dc(rs) if g.directed else classify_uc(rs)


def cmd_classify(args) -> tuple[dict, int, str]:
    rs = _residues(args)
    cls = classify_dc(rs) if args.kind == "dc" else classify_uc(rs)
    msg = f"{args.kind.upper()}({rs}): {cls.verdict.value} [{cls.citation}]"
    if cls.witness:
        msg += " witness p={},d1={},d2={}".format(*cls.witness)
    return {"result": cls.to_dict(), "citation": cls.citation}, EXIT_YES, msg


def _detect_graph(g: Graph, rs: ResidueSet, cls, max_n: Optional[int]):
    """Return (answer, witness, route)."""
    if g.directed:
        if cls.verdict is Verdict.TRACTABLE_HERE:
            if cls.citation == "trivial":
                found = walks.shortest_closed_walk(g, rs)
            else:
                if not walks.decide_dc(g, rs):
                    return False, None, "closed-walk-residues"
                found = walks.shortest_closed_walk(g, rs)
            if found is None:
                return False, None, "closed-walk-residues"
            return True, CycleWitness(found[1]), "closed-walk-residues"
    elif cls.verdict is Verdict.TRACTABLE_HERE:
        if rs.m == 2 and rs.members == (0,):
            w = undirected.even_cycle(g)
            return w is not None, w, "even-cycle-blocks"
        red = thm7_reduce(rs)
        if red.g == 1:
            return False, None, "divisor-reduction"
        if red.g == 2:
            w = undirected.odd_cycle(g)
            return w is not None, w, "odd-cycle-bipartite"
        ans = undirected.decide_uc_condition_case(g, rs, max_vertices=max_n)
        w = oracle.oracle_shortest(g, red.reduced, max_vertices=max_n) if ans else None
        return ans, w, "divisor-reduction+oracle-period"
    w = oracle.oracle_shortest(g, rs, max_vertices=max_n)
    return w is not None, w, "oracle"


def cmd_detect(args) -> tuple[dict, int, str]:
    g = _load(args.input)
    rs = _residues(args)
    cls = _classification(g, rs)
    warnings = []
    if cls.verdict is Verdict.NP_COMPLETE:
        p, d1, d2 = cls.witness
        warnings.append(f"NP-complete instance (p={p}, d1={d1}, d2={d2}); falling back to the brute-force oracle")
    elif cls.verdict is not Verdict.TRACTABLE_HERE:
        warnings.append(f"{cls.verdict.value} [{cls.citation}]: no in-repo polynomial algorithm; using the oracle")
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    answer, witness, route = _detect_graph(g, rs, cls, args.oracle_max_n)
    payload = {
        "answer": answer,
        "route": route,
        "classification": cls.to_dict(),
        "witness": _witness_payload(g, witness),
        "warnings": warnings,
    }
    msg = f"{'yes' if answer else 'no'} ({route})"
    return {"result": payload, "citation": cls.citation}, EXIT_YES if answer else EXIT_NO, msg


def _shortest(g: Graph, rs: ResidueSet, engine: str):
    if not g.directed:
        raise UsageError("shortest requires a directed graph")
    if engine == "matrix" and g.n > matrix.MAX_MATRIX_N:
        engine = "bfs"
    if engine == "matrix":
        return matrix.shortest_cycle_mod(g, rs), engine
    walks._check_condition(rs)
    found = walks.shortest_closed_walk(g, rs)
    return (CycleWitness(found[1]) if found else None), engine


def cmd_shortest(args) -> tuple[dict, int, str]:
    g = _load(args.input)
    rs = _residues(args)
    witness, engine = _shortest(g, rs, args.engine)
    payload = {"engine": engine, "witness": _witness_payload(g, witness)}
    payload["k_min"] = witness.length if witness else None
    msg = f"{engine}: " + (f"cycle of length {witness.length}" if witness else "none")
    return {"result": payload, "citation": classify_dc(rs).citation}, EXIT_YES, msg


def cmd_reduce(args) -> tuple[Optional[dict], int, str]:
    g = _load(args.input)
    rs = _residues(args)
    params = ReductionParams(args.m, (args.d1 + args.d2) % args.m, args.d1, args.d2)
    try:
        out = reduce_st_cycle(g, args.s, args.t, params, rs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    header = [
        "# reduction: cycle through s and t  ->  DC(S, m)",
        f"# source-digest {g.digest()}",
        f"# s {args.s} t {args.t}",
        f"# m {params.m} set {args.set} p {params.p} d1 {params.d1} d2 {params.d2}",
    ]
    text = "\n".join(header) + "\n" + out.serialize()
    assert parse_graph(text) == out
    msg = f"G' has {out.n} vertices, {len(out.edges)} edges"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        payload = {"output": args.output, "n": out.n, "edges": len(out.edges), "params": vars(params)}
        return {"result": payload, "citation": "thm1i"}, EXIT_YES, msg
    sys.stdout.write(text)
    return None, EXIT_YES, msg


def cmd_oracle(args) -> tuple[dict, int, str]:
    g = _load(args.input)
    inv = oracle.cycle_inventory(g, max_vertices=args.oracle_max_n)
    if inv.truncated:
        raise OracleLimit(f"cycle cap reached after {inv.count} cycles")
    payload = {
        "count": inv.count,
        "lengths": sorted(inv.lengths),
        "truncated": inv.truncated,
        "period": oracle.period(g, max_vertices=args.oracle_max_n),
    }
    code = EXIT_YES
    if args.m is not None:
        rs = ResidueSet.parse(args.m, args.set or "")
        best = oracle.oracle_shortest(g, rs, max_vertices=args.oracle_max_n)
        payload["decision"] = best is not None
        payload["shortest"] = _witness_payload(g, best)
        code = EXIT_YES if best is not None else EXIT_NO
    msg = f"{inv.count} cycles, lengths {sorted(inv.lengths)}, period {payload['period']}"
    return {"result": payload}, code, msg


def cmd_bench(args) -> tuple[dict, int, str]:
    rs = _residues(args)
    engines = [e.strip() for e in args.engines.split(",") if e.strip()]
    for e in engines:
        if e not in ("matrix", "bfs"):
            raise UsageError(f"unknown engine {e!r}")
    rows = []
    for trial in range(args.trials):
        seed = args.seed + trial
        g = random_digraph(args.n, args.density, seed, self_loops=args.self_loops)
        kmins = set()
        for e in engines:
            t0 = time.perf_counter()
            witness, _ = _shortest(g, rs, e)
            millis = (time.perf_counter() - t0) * 1000
            k = witness.length if witness else None
            kmins.add(k)
            rows.append({"engine": e, "n": args.n, "density": args.density, "m": args.m,
                         "set": args.set, "k_min": "" if k is None else k,
                         "millis": round(millis, 3), "seed": seed})
        if len(kmins) > 1:
            raise AssertionError(f"engines disagree on seed {seed}: {kmins}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=["engine", "n", "density", "m", "set", "k_min", "millis", "seed"])
            writer.writeheader()
            writer.writerows(rows)
    summary = {e: round(sum(r["millis"] for r in rows if r["engine"] == e), 3) for e in engines}
    msg = ", ".join(f"{e}: {ms:.1f} ms" for e, ms in summary.items())
    return {"result": {"rows": rows, "total_millis": summary}}, EXIT_YES, msg


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modcycle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def residue_args(p, required=True):
        p.add_argument("--m", type=int, required=required)
        p.add_argument("--set", required=required, help="comma-separated residues, e.g. 1,2")

    p = sub.add_parser("classify", help="verdict for DC(S,m) or UC(S,m)")
    p.add_argument("--kind", choices=["dc", "uc"], required=True)
    residue_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("detect", help="decide whether the graph has a cycle with length mod m in S")
    p.add_argument("--input", required=True)
    residue_args(p)
    p.add_argument("--oracle-max-n", type=int, default=oracle.MAX_ORACLE_VERTICES)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("shortest", help="shortest cycle with length mod m in S (directed)")
    p.add_argument("--input", required=True)
    residue_args(p)
    p.add_argument("--engine", choices=["matrix", "bfs"], default="matrix")
    p.set_defaults(func=cmd_shortest)

    p = sub.add_parser("reduce", help="emit the s,t-cycle gadget graph")
    p.add_argument("--input", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    residue_args(p)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("oracle", help="enumerate all simple cycles")
    p.add_argument("--input", required=True)
    residue_args(p, required=False)
    p.add_argument("--oracle-max-n", type=int, default=oracle.MAX_ORACLE_VERTICES)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="time the matrix and BFS shortest-cycle engines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, required=True)
    residue_args(p)
    p.add_argument("--engines", default="matrix,bfs")
    p.add_argument("--csv")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--self-loops", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    t0 = time.perf_counter()
    try:
        doc, code, msg = args.func(args)
    except (UsageError, GraphFormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OracleLimit, ConditionUnsupported, PreconditionError) as exc:
        print(json.dumps({"command": args.command, "error": type(exc).__name__, "message": str(exc)}))
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    if doc is not None:
        doc = {"command": " ".join(sys.argv[1:] if argv is None else argv), **doc}
        if getattr(args, "input", None):
            doc["input_digest"] = _load(args.input).digest()
        doc["millis"] = round((time.perf_counter() - t0) * 1000, 3)
        print(json.dumps(doc, sort_keys=True))
    print(msg, file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
