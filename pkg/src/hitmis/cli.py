"""Command-line front end: gen | solve | hit | check-claims | bench.

Exit codes: 0 success / all-pass, 1 infrastructure error, 2 usage error
(including method/input incompatibility), 3 theorem violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from typing import Optional

from .bitset import bits
from .claims import CLAIM_SUITES, run_suite
from .errors import (HitmisError, PreconditionError, SizeLimitError,
                     TheoremViolationError)
from .fingerprint import fingerprint
from .generators import (alon_pairs_graph, blowup, complete_multipartite,
                         cycle_graph, gnp, random_arcs, random_chordal,
                         random_disks, random_intervals)
from .geometry import (arcs_from_json, arcs_to_json, circular_arc_graph,
                       disk_graph, disks_from_json, disks_to_json,
                       find_11_simplicial, interval_graph, intervals_from_json,
                       intervals_to_json, overlap_graph)
from .graph import (Graph, build_graph, graph_from_dimacs, graph_from_json,
                    graph_to_dimacs, graph_to_json)
from .hitters import (bipartite_hitter, locally_sparse_hitter,
                      min_degree_hitter, separator_hitter, simplicial_hitter,
                      vc1_hitter)
from .hitting import (greedy_hitting_set, min_hitting_set, report_to_json,
                      verify_hitting)
from .mis import enumerate_mis, hajnal_check
from .two_order import (circle_to_two_order, two_order_from_json,
                        two_order_hitter, weak_circle_layers,
                        weak_run_report_json)


def _parse_fraction(text: str) -> Fraction:
    if "/" in text:
        p, q = text.split("/")
        return Fraction(int(p), int(q))
    return Fraction(text)


def _base_graph(name: str) -> Graph:
    """Named base graphs for blowups: c<k> cycle, k<k> complete, p<k> path;
    anything else is treated as a graph JSON path."""
    if name.startswith("c") and name[1:].isdigit():
        return cycle_graph(int(name[1:]))
    if name.startswith("k") and name[1:].isdigit():
        k = int(name[1:])
        return build_graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])
    if name.startswith("p") and name[1:].isdigit():
        k = int(name[1:])
        return build_graph(k, [(i, i + 1) for i in range(k - 1)])
    with open(name, encoding="utf-8") as fh:
        return graph_from_json(fh.read())


def _generate(args) -> tuple[str, str]:
    """(payload text, payload kind) for the gen subcommand."""
    kind = args.kind
    if kind == "chordal":
        G = random_chordal(args.n, _parse_fraction(args.density), args.seed)
        return graph_to_json(G), "graph"
    if kind == "blowup":
        sizes = [int(s) for s in args.sizes.split(",")]
        G = blowup(_base_graph(args.base), sizes)
        return graph_to_json(G), "graph"
    if kind == "multipartite":
        sizes = [int(s) for s in args.sizes.split(",")]
        return graph_to_json(complete_multipartite(sizes)), "graph"
    if kind == "alon-pairs":
        return graph_to_json(alon_pairs_graph(args.k)), "graph"
    if kind == "random-disks":
        D = random_disks(args.n, args.seed, unit=args.unit)
        return disks_to_json(D), "disks"
    if kind == "random-intervals":
        return intervals_to_json(random_intervals(args.n, args.seed)), "intervals"
    if kind == "random-arcs":
        return arcs_to_json(random_arcs(args.n, args.seed)), "arcs"
    if kind == "gnp":
        G = gnp(args.n, _parse_fraction(args.p), args.seed)
        return graph_to_json(G), "graph"
    raise HitmisError(f"unknown kind {kind}")


def cmd_gen(args) -> int:
    payload, payload_kind = _generate(args)
    if args.format == "dimacs":
        if payload_kind != "graph":
            raise PreconditionError("dimacs format only applies to graphs")
        payload = graph_to_dimacs(graph_from_json(payload))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(payload)
    print(fingerprint(payload))
    return 0


def _load_instance(path: str):
    """(tag, object) where tag names the input kind."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if not stripped.startswith("{"):
        return "graph", graph_from_dimacs(text)
    obj = json.loads(text)
    if "edges" in obj:
        return "graph", graph_from_json(text)
    if "disks" in obj:
        return "disks", disks_from_json(text)
    if "intervals" in obj:
        return "intervals", intervals_from_json(text)
    if "arcs" in obj:
        return "arcs", arcs_from_json(text)
    if "sub" in obj:
        return "two-order", two_order_from_json(text)
    raise HitmisError(f"unrecognized input schema in {path}")


def _as_graph(tag: str, obj, interval_model: str) -> Graph:
    if tag == "graph":
        return obj
    if tag == "disks":
        return disk_graph(obj)
    if tag == "intervals":
        return overlap_graph(obj) if interval_model == "overlap" else interval_graph(obj)
    if tag == "arcs":
        return circular_arc_graph(obj)
    if tag == "two-order":
        return obj.graph
    raise HitmisError(f"cannot view {tag} as a graph")


def cmd_solve(args) -> int:
    tag, obj = _load_instance(args.input)
    G = _as_graph(tag, obj, args.interval_model)
    out: dict = {"n": G.n, "m": G.edge_count()}
    errors: dict = {}
    try:
        fam = enumerate_mis(G, cap=args.enum_cap)
        out["alpha"] = fam.alpha
        out["n_mis"] = len(fam.sets)
        out["residual"] = fam.residual.bit_count()
        out["hajnal_lhs"] = hajnal_check(fam).lhs
        try:
            out["h_exact"] = min_hitting_set(fam).size
        except SizeLimitError as exc:
            out["h_exact"] = None
            errors["h_exact"] = str(exc)
        out["h_greedy"] = greedy_hitting_set(fam).size
    except SizeLimitError as exc:
        for key in ("alpha", "n_mis", "residual", "hajnal_lhs", "h_exact", "h_greedy"):
            out[key] = None
        errors["alpha"] = str(exc)
    if errors:
        out["errors"] = errors
    print(json.dumps(out))
    return 0


_GRAPH_METHODS = {"exact", "greedy", "min-degree", "sparse-framework",
                  "bipartite", "vc1", "separator"}


def cmd_hit(args) -> int:
    tag, obj = _load_instance(args.input)
    method = args.method
    extra: Optional[str] = None

    if method in _GRAPH_METHODS:
        G = _as_graph(tag, obj, args.interval_model)
        fam = enumerate_mis(G, cap=args.enum_cap)
        if method == "exact":
            report = min_hitting_set(fam)
        elif method == "greedy":
            report = greedy_hitting_set(fam)
        elif method == "min-degree":
            report = min_degree_hitter(G, fam)
        elif method == "sparse-framework":
            report, trace = locally_sparse_hitter(
                G, fam, args.s, b_ratio=_parse_fraction(args.b_ratio))
            extra = json.dumps(trace.to_json_dict())
        elif method == "bipartite":
            report = bipartite_hitter(G, fam)
        elif method == "vc1":
            report = vc1_hitter(G, fam)
        else:
            report = separator_hitter(G, fam)
    elif method == "simplicial":
        if tag != "disks":
            raise _Usage("simplicial needs a disk input")
        G = disk_graph(obj)
        fam = enumerate_mis(G, cap=args.enum_cap)
        v0, cliques = find_11_simplicial(obj, G)
        report = simplicial_hitter(G, v0, cliques, fam)
        extra = json.dumps({"vertex": v0, "cliques": [bits(c) for c in cliques]})
    elif method == "two-order":
        if tag == "intervals":
            T = circle_to_two_order(obj)
        elif tag == "two-order":
            T = obj
        else:
            raise _Usage("two-order needs intervals or a two-order structure")
        fam = enumerate_mis(T.graph, cap=args.enum_cap)
        run = two_order_hitter(T, fam, _parse_fraction(args.beta))
        report = run.report
        extra = json.dumps({"branch": run.branch, "t": run.chosen_t,
                            "layer_sizes": run.layer_sizes, "clamps": run.clamps})
    elif method == "circle-layers":
        if tag != "intervals":
            raise _Usage("circle-layers needs an interval input")
        fam = enumerate_mis(overlap_graph(obj), cap=args.enum_cap)
        run = weak_circle_layers(obj, fam, args.M)
        report = run.report
        extra = weak_run_report_json(run)
    else:
        raise _Usage(f"unknown method {method}")

    print(report_to_json(report))
    if extra is not None:
        print(extra)
    return 0 if report.verified else 1


class _Usage(HitmisError):
    pass


def cmd_check_claims(args) -> int:
    if args.suite not in CLAIM_SUITES:
        raise _Usage(f"unknown suite {args.suite}; choose from "
                     + ", ".join(sorted(CLAIM_SUITES)))
    rows = run_suite(args.suite, args.seeds)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["seed", "fingerprint", "claim", "holds", "witness"])
    for r in rows:
        writer.writerow([r.seed, r.fingerprint, r.claim,
                         "true" if r.holds else "false", r.witness])
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r.holds for r in rows) else 3


def _bench_generate(entry: dict):
    kind = entry["kind"]
    seed = int(entry.get("seed", 0))
    params = entry.get("params", {})
    if kind == "chordal":
        G = random_chordal(int(params["n"]), _parse_fraction(str(params.get("density", "1/2"))), seed)
        return G, "graph"
    if kind == "gnp":
        return gnp(int(params["n"]), _parse_fraction(str(params.get("p", "1/3"))), seed), "graph"
    if kind == "blowup":
        return blowup(_base_graph(params["base"]), [int(s) for s in params["sizes"]]), "graph"
    if kind == "multipartite":
        return complete_multipartite([int(s) for s in params["sizes"]]), "graph"
    if kind == "alon-pairs":
        return alon_pairs_graph(int(params["k"])), "graph"
    if kind == "random-disks":
        return random_disks(int(params["n"]), seed, unit=bool(params.get("unit", False))), "disks"
    if kind == "random-intervals":
        return random_intervals(int(params["n"]), seed), "intervals"
    if kind == "random-arcs":
        return random_arcs(int(params["n"]), seed), "arcs"
    raise HitmisError(f"unknown bench kind {kind}")


def cmd_bench(args) -> int:
    with open(args.specs, encoding="utf-8") as fh:
        entries = json.load(fh)
    rows = []
    for entry in entries:
        kind = entry["kind"]
        seed = int(entry.get("seed", 0))
        method = entry.get("method", "exact")
        row = {"kind": kind, "n": "", "seed": seed, "alpha": "",
               "h_exact": "", "method": method, "size": "", "bound": "",
               "verified": "", "wall_ms": "", "error": ""}
        try:
            obj, tag = _bench_generate(entry)
            G = _as_graph(tag, obj, entry.get("interval_model", "overlap"))
            row["n"] = G.n
            fam = enumerate_mis(G, cap=int(entry.get("enum_cap", 25)))
            row["alpha"] = fam.alpha
            row["h_exact"] = min_hitting_set(fam).size
            start = time.perf_counter()
            if method == "exact":
                report = min_hitting_set(fam)
            elif method == "greedy":
                report = greedy_hitting_set(fam)
            elif method == "min-degree":
                report = min_degree_hitter(G, fam)
            elif method == "sparse-framework":
                report, _ = locally_sparse_hitter(G, fam, int(entry.get("s", 1)))
            elif method == "bipartite":
                report = bipartite_hitter(G, fam)
            elif method == "vc1":
                report = vc1_hitter(G, fam)
            elif method == "separator":
                report = separator_hitter(G, fam)
            elif method == "simplicial":
                v0, cliques = find_11_simplicial(obj, G)
                report = simplicial_hitter(G, v0, cliques, fam)
            elif method == "two-order":
                T = circle_to_two_order(obj)
                report = two_order_hitter(T, fam, _parse_fraction(str(entry.get("beta", "1/3")))).report
            elif method == "circle-layers":
                report = weak_circle_layers(obj, fam, int(entry.get("M", 3))).report
            else:
                raise HitmisError(f"unknown method {method}")
            row["wall_ms"] = round((time.perf_counter() - start) * 1000, 3)
            row["size"] = report.size
            row["bound"] = ("" if report.bound is None
                            else f"{report.bound.numerator}/{report.bound.denominator}")
            row["verified"] = "true" if report.verified else "false"
        except Exception as exc:  # per-row failures recorded, run continues
            row["error"] = f"{type(exc).__name__}: {exc}"
        rows.append(row)
    rows.sort(key=lambda r: (r["kind"], r["n"] if r["n"] != "" else -1, r["seed"]))
    cols = ["kind", "n", "seed", "alpha", "h_exact", "method", "size",
            "bound", "verified", "wall_ms", "error"]
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=cols)
        writer.writeheader()
        writer.writerows(rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hitmis",
                                description="hitting sets of maximum independent sets")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate an instance file")
    g.add_argument("--kind", required=True,
                   choices=["chordal", "blowup", "multipartite", "alon-pairs",
                            "random-disks", "random-intervals", "random-arcs", "gnp"])
    g.add_argument("--n", type=int, default=10)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--density", default="1/2")
    g.add_argument("--p", default="1/3")
    g.add_argument("--base", default="c5")
    g.add_argument("--sizes", default="1,1,1,1,1")
    g.add_argument("--unit", action="store_true")
    g.add_argument("--format", choices=["json", "dimacs"], default="json")
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="exact solve an instance")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--interval-model", choices=["overlap", "interval"],
                   default="overlap")
    s.add_argument("--enum-cap", type=int, default=25)
    s.set_defaults(func=cmd_solve)

    h = sub.add_parser("hit", help="run a constructive hitter")
    h.add_argument("--in", dest="input", required=True)
    h.add_argument("--method", required=True)
    h.add_argument("--interval-model", choices=["overlap", "interval"],
                   default="overlap")
    h.add_argument("--enum-cap", type=int, default=25)
    h.add_argument("--s", type=int, default=1)
    h.add_argument("--b-ratio", default="98/100")
    h.add_argument("--beta", default="1/3")
    h.add_argument("--M", type=int, default=3)
    h.set_defaults(func=cmd_hit)

    c = sub.add_parser("check-claims", help="run a seeded theorem suite")
    c.add_argument("--suite", required=True)
    c.add_argument("--seeds", type=int, default=100)
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_check_claims)

    b = sub.add_parser("bench", help="benchmark methods over a spec list")
    b.add_argument("--specs", required=True)
    b.add_argument("--out", required=True)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"precondition not met: {exc}", file=sys.stderr)
        return 2
    except TheoremViolationError as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        if exc.trace is not None:
            print(f"trace: {exc.trace}", file=sys.stderr)
        return 3
    except HitmisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
