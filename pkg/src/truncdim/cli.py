"""Command-line interface: gen / dim / formula / characterize / profile / verify.

Fractions are always printed as ``num/den`` in lowest terms, never as
decimals, so exactness survives the process boundary.  Graphs travel in the
edge-list text format (header ``n m``, then one ``u v`` line per edge).

Exit codes: 0 success, 1 usage error, 2 malformed input, 3 solver size-limit
refusal, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import characterize, formulas, generators, harness
from .graph import (
    Graph,
    GraphInputError,
    diameter,
    from_edge_list_text,
    is_connected,
    to_edge_list_text,
)
from .rational import fmt, rat_to_json
from .resolve import constraint_system
from .solvers import SizeLimitError, dim_k_exact, dim_kf


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # remap argparse's default exit(2) to exit 1
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="truncdim", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker processes for verify (wall time only, never results)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a named family graph as an edge list")
    gen.add_argument("family")
    gen.add_argument("params", nargs="*")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", help="output file (default: stdout)")

    dim = sub.add_parser("dim", help="exact truncated dimension of an input graph")
    dim.add_argument("--input", help="edge-list file (default: stdin)")
    dim.add_argument("--k", type=int, required=True)
    dim.add_argument("--mode", choices=("fractional", "integer", "both"), default="both")
    dim.add_argument("--json", action="store_true")
    dim.add_argument("--limit", type=int, default=64, help="vertex cap for the integer search")

    form = sub.add_parser("formula", help="closed-form dimension value of a family")
    form.add_argument("family")
    form.add_argument("params", nargs="*")
    form.add_argument("--k", type=int, default=1)
    form.add_argument("--input", help="edge-list file for the tree families")

    char = sub.add_parser("characterize", help="structural predicate verdicts as JSON")
    char.add_argument("--input", help="edge-list file (default: stdin)")
    char.add_argument("--k", type=int, default=1)

    prof = sub.add_parser("profile", help="dump the reduced constraint system as JSON")
    prof.add_argument("--input", help="edge-list file (default: stdin)")
    prof.add_argument("--k", type=int, required=True)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", required=True, help="suite name or 'all'")
    ver.add_argument("--max-n", type=int, default=None)
    ver.add_argument("--max-k", type=int, default=None)
    ver.add_argument("--seed", type=int, default=None)
    ver.add_argument("--trials", type=int, default=None)
    ver.add_argument("--json", dest="json_out", help="write the full report to this file")
    return parser


def _read_graph(path: str | None) -> Graph:
    text = sys.stdin.read() if path is None else open(path).read()
    return from_edge_list_text(text)


_GEN_INT_PARAMS = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "grid": 2,
    "petersen": 0,
    "wheel": 1,
    "fan": 1,
    "caterpillar": 2,
    "subdivided-star": 2,
    "random-tree": 1,
    "gap": 1,
}


def _cmd_gen(args) -> int:
    fam, params = args.family, args.params
    if fam in _GEN_INT_PARAMS:
        want = _GEN_INT_PARAMS[fam]
        if len(params) != want:
            raise UsageError(f"family {fam!r} takes {want} parameter(s), got {len(params)}")
        vals = [int(p) for p in params]
        if fam == "path":
            g = generators.path(vals[0])
        elif fam == "cycle":
            g = generators.cycle(vals[0])
        elif fam == "complete":
            g = generators.complete(vals[0])
        elif fam == "grid":
            g = generators.grid(vals[0], vals[1])
        elif fam == "petersen":
            g = generators.petersen()
        elif fam == "wheel":
            g = generators.wheel(vals[0])
        elif fam == "fan":
            g = generators.fan(vals[0])
        elif fam == "caterpillar":
            g = generators.leaf_cluster_caterpillar(vals[0], vals[1])
        elif fam == "subdivided-star":
            g = generators.subdivided_star(vals[0], vals[1])
        elif fam == "random-tree":
            g = generators.random_tree(vals[0], args.seed)
        else:
            g = generators.gap_construction(vals[0])[1]
    elif fam == "multipartite":
        g = generators.complete_multipartite([int(p) for p in params])
    elif fam == "spider":
        g = generators.spider([int(p) for p in params])
    elif fam == "random-connected":
        if len(params) != 2:
            raise UsageError("random-connected takes n and p")
        g = generators.random_connected(int(params[0]), float(params[1]), args.seed)
    else:
        raise UsageError(f"unknown family {fam!r}")
    text = to_edge_list_text(g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_dim(args) -> int:
    g = _read_graph(args.input)
    frac = dim_kf(g, args.k) if args.mode in ("fractional", "both") else None
    integer = dim_k_exact(g, args.k, limit=args.limit) if args.mode in ("integer", "both") else None
    if args.json:
        payload = {
            "n": g.n,
            "k": args.k,
            "dim_k": integer.size if integer else None,
            "dim_kf": rat_to_json(frac.total) if frac else None,
            "witness": {
                "fractional": (
                    {
                        "values": {str(v): rat_to_json(x) for v, x in frac.as_dict().items()},
                        "total": rat_to_json(frac.total),
                    }
                    if frac
                    else None
                ),
                "integer": (
                    {"set": sorted(integer.vertices), "size": integer.size} if integer else None
                ),
            },
            "verified": True,
        }
        json.dump(payload, sys.stdout)
        sys.stdout.write("\n")
        return 0
    if args.mode == "fractional":
        print(fmt(frac.total))
    elif args.mode == "integer":
        print(integer.size)
    else:
        print(f"dim_k {integer.size}")
        print(f"dim_kf {fmt(frac.total)}")
    return 0


def _cmd_formula(args) -> int:
    fam, params, k = args.family, [int(p) for p in args.params], args.k
    if fam == "path":
        print(formulas.path_kf(params[0], k))
    elif fam == "cycle":
        print(formulas.cycle_kf(params[0], k))
    elif fam == "fan":
        print(formulas.fan_kf(params[0], k))
    elif fam == "wheel":
        print(formulas.wheel_kf(params[0], k))
    elif fam == "petersen":
        print(formulas.petersen_kf(k))
    elif fam == "grid":
        print(formulas.grid_f(params[0], params[1]))
    elif fam == "multipartite":
        print(formulas.multipartite_f(params))
    elif fam == "dimk-path":
        print(formulas.path_cycle_dim_k(params[0], k, "path"))
    elif fam == "dimk-cycle":
        print(formulas.path_cycle_dim_k(params[0], k, "cycle"))
    elif fam == "tree":
        print(formulas.tree_f(_read_graph(args.input)))
    elif fam == "tree-dim":
        print(formulas.tree_dim(_read_graph(args.input)))
    else:
        raise UsageError(f"unknown formula family {fam!r}")
    return 0


def _cmd_characterize(args) -> int:
    g = _read_graph(args.input)
    k = args.k
    verdicts: dict = {
        "n": g.n,
        "k": k,
        "connected": is_connected(g),
        "is_tree": characterize.is_tree(g),
        "is_path": characterize.is_path_graph(g),
        "is_short_path": characterize.is_short_path(g, k),
    }
    if verdicts["connected"] and g.n >= 2:
        verdicts["all_twin_classes_ge2"] = characterize.all_twin_classes_ge2(g)
    if verdicts["is_tree"] and g.n >= 2:
        profile = characterize.tree_profile(g)
        tree_view = {
            "sigma": profile.sigma,
            "ex": profile.ex,
            "ex1": profile.ex1,
            "dim1f_eq_dimf": characterize.tree_dim1f_eq_dimf(g),
            "dim1_eq_dim": characterize.tree_dim1_eq_dim(g),
        }
        if profile.ex == 1:
            tree_view["kf_eq_f_at_k"] = characterize.tree_single_major_kf_eq_f(g, k)
        verdicts["tree"] = tree_view
    json.dump(verdicts, sys.stdout)
    sys.stdout.write("\n")
    return 0


def _cmd_profile(args) -> int:
    g = _read_graph(args.input)
    system = constraint_system(g, args.k)
    payload = {
        "n": system.n,
        "k": system.k,
        "untruncated": system.untruncated,
        "diameter": diameter(g),
        "constraints": [list(c) for c in system.constraints],
        "pairs": [list(p) for p in system.pairs],
    }
    json.dump(payload, sys.stdout)
    sys.stdout.write("\n")
    return 0


def _cmd_verify(args) -> int:
    names = harness.suite_names() if args.suite == "all" else [args.suite]
    for name in names:
        if name not in harness.suite_names():
            raise UsageError(f"unknown suite {name!r}; known: {', '.join(harness.suite_names())}")
    overrides = {
        "max_n": args.max_n,
        "max_order": args.max_n,
        "max_k": args.max_k,
        "seed": args.seed,
        "trials": args.trials,
        "graph_trials": args.trials,
        "tree_trials": args.trials,
    }
    reports = [harness.run_suite(name, threads=args.threads, **overrides) for name in names]
    for report in reports:
        print(report.summary())
        for case in report.cases:
            if not case.passed:
                print(f"  FAIL {case.key}: expected {case.expected}, got {case.computed}", file=sys.stderr)
    if args.json_out:
        payload = [r.to_json() for r in reports]
        with open(args.json_out, "w") as fh:
            json.dump(payload if len(payload) > 1 else payload[0], fh, indent=2)
    return 0 if all(r.ok() for r in reports) else 4


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {
            "gen": _cmd_gen,
            "dim": _cmd_dim,
            "formula": _cmd_formula,
            "characterize": _cmd_characterize,
            "profile": _cmd_profile,
            "verify": _cmd_verify,
        }[args.command]
        return handler(args)
    except (UsageError, IndexError) as exc:
        message = str(exc) or "missing family parameter"
        print(f"usage error: {message}", file=sys.stderr)
        return 1
    except (GraphInputError, FileNotFoundError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except SizeLimitError as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
