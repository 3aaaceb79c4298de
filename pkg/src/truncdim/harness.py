"""Executable verification suites confronting solvers, formulas, predicates.

Each suite replays one family of claims at desk scale: the exact LP/ILP
solvers on one side, the closed-form oracle or structural predicate on the
other.  A case passes on exact rational equality, interval membership, or
boolean agreement; there are no tolerances anywhere.  Where only an interval
is proved, the observed exact LP value is logged in the case note, so runs
double as an experimental probe of the open bound cases without asserting
unproved equalities.

Suites accept size parameters with documented defaults (below) and are
deterministic: same parameters and seed give the same report, bit for bit,
except for the wall-time field.  Cases of a suite are independent and may be
evaluated in parallel; the report ordering is canonical (sorted by case key)
regardless of scheduling.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations_with_replacement

from gmpy2 import mpq

from . import characterize, formulas, generators
from .graph import Graph, bfs_apsp, diameter
from .rational import fmt
from .resolve import check_resolving_set, r_k_pair, r_k_pair_neighborhood_form
from .solvers import dim_f, dim_k_exact, dim_kf


@dataclass
class Case:
    key: str
    expected: str
    computed: str
    passed: bool
    note: str = ""


@dataclass
class VerificationReport:
    suite: str
    params: dict
    cases: list[Case]
    wall_time: float = 0.0

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.passed)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if not c.passed)

    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> str:
        verdict = "pass" if self.ok() else "FAIL"
        return (
            f"suite {self.suite}: {verdict} "
            f"({self.passed} passed, {self.failed} failed, {self.wall_time:.1f}s)"
        )

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "passed": self.passed,
            "failed": self.failed,
            "wall_time": self.wall_time,
            "cases": [asdict(c) for c in self.cases],
        }


# --- deterministic corpora ---------------------------------------------------


_DENSITIES = (0.25, 0.4, 0.6, 0.8)


def corpus_graph(i: int, max_n: int = 10, seed: int = 2) -> Graph:
    """i-th seeded connected graph, cycling over orders 2..max_n and densities."""
    n = 2 + (i % (max_n - 1))
    return generators.random_connected(n, _DENSITIES[i % 4], seed * 1_000_003 + i)


def corpus_tree(i: int, max_n: int = 14, seed: int = 1) -> Graph:
    """i-th seeded random tree, cycling over orders 2..max_n."""
    return generators.random_tree(2 + (i % (max_n - 1)), seed * 1_000_003 + i)


def random_graph_corpus(trials: int = 300, max_n: int = 10, seed: int = 2):
    return [corpus_graph(i, max_n, seed) for i in range(trials)]


def random_tree_corpus(trials: int = 200, max_n: int = 14, seed: int = 1):
    return [corpus_tree(i, max_n, seed) for i in range(trials)]


def partitions(n: int, most: int | None = None):
    """Nonincreasing integer partitions of n."""
    if most is None:
        most = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, most), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def spider_leg_multisets(max_len: int = 4, leg_counts=(3, 4)):
    for count in leg_counts:
        yield from combinations_with_replacement(range(1, max_len + 1), count)


def named_family_graphs(max_order: int = 20):
    """Deterministic enumeration of every generator family up to max_order."""
    out: list[tuple[str, Graph]] = []
    for n in range(2, max_order + 1):
        out.append((f"P_{n}", generators.path(n)))
    for n in range(3, max_order + 1):
        out.append((f"C_{n}", generators.cycle(n)))
    for n in range(2, 13):
        out.append((f"K_{n}", generators.complete(n)))
    for s in range(2, max_order + 1):
        for t in range(2, s + 1):
            if s * t <= max_order:
                out.append((f"grid_{s}x{t}", generators.grid(s, t)))
    out.append(("petersen", generators.petersen()))
    for order in range(5, max_order + 1):
        out.append((f"wheel_{order}", generators.wheel(order)))
    for n in range(1, max_order):
        out.append((f"fan_{n}", generators.fan(n)))
    for n in range(3, 8):
        for parts in partitions(n):
            if len(parts) >= 2:
                label = ",".join(map(str, parts))
                out.append((f"K_{{{label}}}", generators.complete_multipartite(list(parts))))
    for legs in spider_leg_multisets(max_len=3):
        if 1 + sum(legs) <= max_order:
            label = "-".join(map(str, legs))
            out.append((f"spider_{label}", generators.spider(list(legs))))
    for x in (1, 2, 3):
        for alpha in (3, 4):
            if x + x * alpha <= max_order:
                out.append((f"caterpillar_{x}x{alpha}", generators.leaf_cluster_caterpillar(x, alpha)))
    for x in (3, 4, 5):
        for s in range(0, x + 1):
            out.append((f"substar_{x}.{s}", generators.subdivided_star(x, s)))
    return out


# --- case helpers ------------------------------------------------------------


def _against_formula(key: str, fv: formulas.FormulaValue, computed) -> Case:
    if fv.is_exact:
        return Case(
            key=key,
            expected=str(fv),
            computed=fmt(computed),
            passed=fv.value == computed,
            note=f"branch: {fv.branch}",
        )
    return Case(
        key=key,
        expected=f"in [{fv}]",
        computed=fmt(computed),
        passed=fv.contains(computed),
        note=f"branch: {fv.branch}; observed={fmt(computed)}",
    )


def _bool_case(key: str, lhs: bool, rhs: bool, note: str = "") -> Case:
    return Case(key=key, expected=str(rhs), computed=str(lhs), passed=lhs == rhs, note=note)


def _eq_case(key: str, computed, expected, note: str = "") -> Case:
    return Case(
        key=key,
        expected=fmt(expected) if not isinstance(expected, (str, int)) else str(expected),
        computed=fmt(computed) if not isinstance(computed, (str, int)) else str(computed),
        passed=computed == expected,
        note=note,
    )


# --- suites ------------------------------------------------------------------


def _cycles_items(p):
    return [(n, k) for n in range(3, p["max_n"] + 1) for k in range(1, p["max_k"] + 1)]


def _cycles_case(item, p):
    n, k = item
    got = dim_kf(generators.cycle(n), k).total
    return [_against_formula(f"cycles/n={n:02d}/k={k}", formulas.cycle_kf(n, k), got)]


def _paths_items(p):
    return [(n, k) for n in range(2, p["max_n"] + 1) for k in range(1, p["max_k"] + 1)]


def _paths_case(item, p):
    n, k = item
    got = dim_kf(generators.path(n), k).total
    return [_against_formula(f"paths/n={n:02d}/k={k}", formulas.path_kf(n, k), got)]


def _fans_items(p):
    return [(n, k) for n in range(1, p["max_order"]) for k in p["ks"]]


def _fans_case(item, p):
    n, k = item
    got = dim_kf(generators.fan(n), k).total
    return [_against_formula(f"fans/path={n:02d}/k={k}", formulas.fan_kf(n, k), got)]


def _wheels_items(p):
    return [(order, k) for order in range(5, p["max_order"] + 1) for k in p["ks"]]


def _wheels_case(item, p):
    order, k = item
    got = dim_kf(generators.wheel(order), k).total
    return [_against_formula(f"wheels/order={order:02d}/k={k}", formulas.wheel_kf(order - 1, k), got)]


def _multipartite_items(p):
    out = []
    for n in range(2, p["max_n"] + 1):
        out += [parts for parts in partitions(n) if len(parts) >= 2]
    return out


def _multipartite_case(parts, p):
    g = generators.complete_multipartite(list(parts))
    fv = formulas.multipartite_f(list(parts))
    label = ",".join(map(str, parts))
    key = f"multipartite/n={sum(parts):02d}/{label}"
    totals = {k: dim_kf(g, k).total for k in p["ks"]}
    cases = [
        _against_formula(f"{key}/k={k}", fv, total) for k, total in sorted(totals.items())
    ]
    cases.append(
        _bool_case(
            f"{key}/k-independence",
            len(set(totals.values())) == 1,
            True,
            note=f"ks={sorted(totals)}",
        )
    )
    return cases


def _petersen_items(p):
    return [("k", k) for k in p["ks"]] + [("untruncated", None)]


def _petersen_case(item, p):
    g = generators.petersen()
    kind, k = item
    if kind == "k":
        got = dim_kf(g, k).total
        return [_against_formula(f"petersen/k={k}", formulas.petersen_kf(k), got)]
    return [_eq_case("petersen/untruncated", dim_f(g).total, mpq(5, 3))]


def _grids_items(p):
    items = [("grid", s, t) for s in range(2, p["max_s"] + 1) for t in range(2, s + 1)]
    items += [("block-bound", s, t) for s, t in p["blocks"]]
    return items


def _grids_case(item, p):
    kind, s, t = item
    if kind == "block-bound":
        got = dim_kf(generators.grid(s, t), 1).total
        return [
            Case(
                key=f"grids/{s}x{t}/k=1-lower-bound",
                expected=">= 4 (disjoint 4x3 blocks)",
                computed=fmt(got),
                passed=got >= 4,
                note=f"observed={fmt(got)}",
            )
        ]
    g = generators.grid(s, t)
    untrunc = dim_f(g).total
    trunc1 = dim_kf(g, 1).total
    cases = [_against_formula(f"grids/{s}x{t}/untruncated", formulas.grid_f(s, t), untrunc)]
    cases.append(
        _bool_case(
            f"grids/{s}x{t}/truncation-inert-iff",
            trunc1 == untrunc,
            characterize.grid_dim1f_eq_dimf(s, t),
            note=f"k=1 value {fmt(trunc1)}",
        )
    )
    return cases


def _trees_items(p):
    items = [("random", i) for i in range(p["trials"])]
    items += [("star", x, s) for x in (3, 4, 5) for s in range(0, x + 1)]
    items += [("spider",) + legs for legs in spider_leg_multisets()]
    return items


def _trees_case(item, p):
    if item[0] == "random":
        i = item[1]
        t = corpus_tree(i, p["max_n"], p["seed"])
        key = f"trees/random-{i:03d}"
        untrunc = dim_f(t).total
        got_dim = dim_k_exact(t, diameter(t)).size
        trunc1_int = dim_k_exact(t, 1).size
        trunc1 = dim_kf(t, 1).total
        cases = [_against_formula(f"{key}/fractional-formula", formulas.tree_f(t), untrunc)]
        if not characterize.is_path_graph(t):
            cases.append(_eq_case(f"{key}/integer-formula", got_dim, formulas.tree_dim(t)))
        cases.append(
            _bool_case(
                f"{key}/integer-truncation-iff",
                trunc1_int == got_dim,
                characterize.tree_dim1_eq_dim(t),
                note=f"dim_1={trunc1_int} dim={got_dim}",
            )
        )
        cases.append(
            _bool_case(
                f"{key}/fractional-truncation-iff",
                trunc1 == untrunc,
                characterize.tree_dim1f_eq_dimf(t),
                note=f"k=1 value {fmt(trunc1)} vs {fmt(untrunc)}",
            )
        )
        return cases
    if item[0] == "star":
        _, x, s = item
        t = generators.subdivided_star(x, s)
        d = diameter(t)
        got_dim = dim_k_exact(t, d).size
        trunc1_int = dim_k_exact(t, 1).size
        return [
            _bool_case(
                f"trees/substar-{x}.{s}/integer-truncation-iff",
                trunc1_int == got_dim,
                characterize.tree_dim1_eq_dim(t),
                note=f"dim_1={trunc1_int} dim={got_dim}",
            )
        ]
    legs = list(item[1:])
    t = generators.spider(legs)
    label = "-".join(map(str, legs))
    untrunc = dim_f(t).total
    cases = []
    for k in range(1, p["max_spider_k"] + 1):
        got = dim_kf(t, k).total
        cases.append(
            _bool_case(
                f"trees/spider-{label}/k={k}-inert-iff",
                got == untrunc,
                characterize.tree_single_major_kf_eq_f(t, k),
                note=f"value {fmt(got)} vs {fmt(untrunc)}",
            )
        )
    return cases


def _bounds_items(p):
    return list(range(p["trials"]))


def _bounds_case(i, p):
    g = corpus_graph(i, p["max_n"], p["seed"])
    key = f"bounds/graph-{i:03d}"
    ks = range(1, p["max_k"] + 1)
    frac = {k: dim_kf(g, k).total for k in ks}
    ints = {k: dim_k_exact(g, k).size for k in ks}
    untrunc = dim_f(g).total
    half = mpq(g.n, 2)
    cases = [
        Case(
            key=f"{key}/range",
            expected=f"all in [1, {fmt(half)}]",
            computed=" ".join(fmt(frac[k]) for k in ks),
            passed=all(1 <= frac[k] <= half for k in ks),
        )
    ]
    chain = [untrunc] + [frac[k] for k in sorted(ks, reverse=True)] + [mpq(ints[1])]
    cases.append(
        Case(
            key=f"{key}/monotone-chain",
            expected="untruncated <= k desc <= integer",
            computed=" <= ".join(fmt(v) for v in chain),
            passed=all(a <= b for a, b in zip(chain, chain[1:])),
        )
    )
    cases.append(
        Case(
            key=f"{key}/fractional-below-integer",
            expected="dim_kf <= dim_k per k",
            computed=" ".join(f"{fmt(frac[k])}|{ints[k]}" for k in ks),
            passed=all(frac[k] <= ints[k] for k in ks),
        )
    )
    ok_one = all((frac[k] == 1) == characterize.is_short_path(g, k) for k in ks)
    cases.append(_bool_case(f"{key}/value-1-iff-short-path", ok_one, True))
    twin_rhs = characterize.all_twin_classes_ge2(g)
    ok_half = all((frac[k] == half) == twin_rhs for k in ks)
    cases.append(_bool_case(f"{key}/value-half-iff-twins", ok_half, True))
    d = diameter(g)
    dim_plain = dim_k_exact(g, max(1, d)).size
    int_chain = [dim_plain] + [ints[k] for k in sorted(ks, reverse=True)]
    cases.append(
        Case(
            key=f"{key}/integer-monotone-chain",
            expected="untruncated <= k desc",
            computed=" <= ".join(str(v) for v in int_chain),
            passed=all(a <= b for a, b in zip(int_chain, int_chain[1:])),
        )
    )
    k_inert = max(1, d - 1)
    cases.append(
        _bool_case(
            f"{key}/truncation-inert-at-diameter",
            dim_k_exact(g, k_inert).size == dim_plain
            and dim_kf(g, k_inert).total == untrunc,
            True,
            note=f"diameter={d}",
        )
    )
    return cases


def _rk_items(p):
    items = [("corpus-graph", i) for i in range(p["graph_trials"])]
    items += [("corpus-tree", i) for i in range(p["tree_trials"])]
    items += [("family", label) for label, _ in named_family_graphs(p["max_order"])]
    return items


def _rk_case(item, p):
    kind, which = item
    if kind == "corpus-graph":
        g = corpus_graph(which, p["max_n"], p["seed"])
        key = f"rk/graph-{which:03d}"
    elif kind == "corpus-tree":
        g = corpus_tree(which, p["tree_max_n"], p["tree_seed"])
        key = f"rk/tree-{which:03d}"
    else:
        lookup = dict(named_family_graphs(p["max_order"]))
        g = lookup[which]
        key = f"rk/family-{which}"
    dm = bfs_apsp(g)
    ks = sorted(set(range(1, p["max_k"] + 1)) | {max(1, diameter(g))})
    checked = 0
    for k in ks:
        for x in range(g.n):
            for y in range(x + 1, g.n):
                if r_k_pair(dm, k, x, y) != r_k_pair_neighborhood_form(dm, k, x, y):
                    return [
                        Case(
                            key=key,
                            expected="forms agree on all pairs",
                            computed=f"mismatch at pair ({x},{y}) k={k}",
                            passed=False,
                        )
                    ]
                checked += 1
    return [
        Case(
            key=key,
            expected="forms agree on all pairs",
            computed="agree",
            passed=True,
            note=f"{checked} pair checks, ks={ks}",
        )
    ]


def _dimk_items(p):
    items = [("path", n, k) for n in range(2, p["max_n"] + 1) for k in range(1, p["max_k"] + 1)]
    items += [("cycle", n, k) for n in range(3, p["max_n"] + 1) for k in range(1, p["max_k"] + 1)]
    return items


def _dimk_case(item, p):
    family, n, k = item
    g = generators.path(n) if family == "path" else generators.cycle(n)
    got = dim_k_exact(g, k).size
    want = formulas.path_cycle_dim_k(n, k, family)
    return [_eq_case(f"dimk/{family}-n={n:02d}-k={k}", got, want)]


def _gap_items(p):
    items = [("gap", m) for m in p["ms"]]
    items += [("caterpillar", x, alpha) for x in p["xs"] for alpha in p["alphas"]]
    items.append(("remark-cycle", 1, 1))
    return items


def _gap_case(item, p):
    if item[0] == "gap":
        m = item[1]
        h, g, emb = generators.gap_construction(m)
        key = f"gap/m={m}"
        dh = dim_f(h).total
        dg = dim_f(g).total
        apexes = frozenset(range(h.n, g.n))
        induced = all(g.has_edge(emb[a], emb[b]) for a in range(h.n) for b in range(a + 1, h.n))
        return [
            _eq_case(f"{key}/subgraph-value", dh, mpq(m * (m + 1), 4)),
            Case(
                key=f"{key}/host-value",
                expected=f"<= {m}",
                computed=fmt(dg),
                passed=dg <= m,
                note=f"diameter={diameter(g)}",
            ),
            Case(
                key=f"{key}/ratio",
                expected=f">= {fmt(mpq(m + 1, 4))}",
                computed=fmt(dh / dg),
                passed=dh / dg >= mpq(m + 1, 4),
            ),
            _bool_case(f"{key}/apexes-resolve-host", check_resolving_set(g, 1, apexes), True),
            _bool_case(f"{key}/embedding-induces-complete", induced, True),
        ]
    if item[0] == "caterpillar":
        _, x, alpha = item
        t = generators.leaf_cluster_caterpillar(x, alpha)
        key = f"gap/caterpillar-{x}x{alpha}"
        cases = []
        want = mpq(x * alpha, 2)
        for k in p["ks"]:
            cases.append(_eq_case(f"{key}/k={k}", dim_kf(t, k).total, want))
        d = dim_k_exact(t, diameter(t)).size
        cases.append(_eq_case(f"{key}/integer-vs-formula", d, formulas.tree_dim(t)))
        cases.append(
            _eq_case(f"{key}/integer-fractional-gap", mpq(d) - dim_f(t).total, mpq(x * (alpha - 2), 2))
        )
        return cases
    _, x, k = item
    n = x * (k + 1) * (k + 5)
    g = generators.cycle(n)
    frac = dim_kf(g, k).total
    integer = dim_k_exact(g, diameter(g)).size
    return [
        _eq_case(f"gap/cycle-n={n}/fractional", frac, mpq(x * (k + 5), 2)),
        _eq_case(f"gap/cycle-n={n}/integer", integer, 2),
        _eq_case(f"gap/cycle-n={n}/ratio", frac / integer, mpq(x * (k + 5), 4)),
    ]


def _noniso_items(p):
    return [(p["n"], p["k"])]


def _noniso_case(item, p):
    # a cycle/path pair sharing the integer dimension but not the fractional
    # one; any n >= 3k+4 with n == 1 mod 2k+2 works (defaults give 4 vs 9/4, 5/2)
    n, k = item
    if n < 3 * k + 4 or n % (2 * k + 2) != 1:
        raise ValueError(f"need n >= 3k+4 with n == 1 mod 2k+2, got n={n}, k={k}")
    cyc, pth = generators.cycle(n), generators.path(n)
    int_c = dim_k_exact(cyc, k).size
    int_p = dim_k_exact(pth, k).size
    frac_c = dim_kf(cyc, k).total
    frac_p = dim_kf(pth, k).total
    want_int = formulas.path_cycle_dim_k(n, k, "cycle")
    return [
        _eq_case(f"noniso/n={n}/integer-cycle", int_c, want_int),
        _eq_case(f"noniso/n={n}/integer-path", int_p, want_int),
        _eq_case(f"noniso/n={n}/fractional-cycle", frac_c, formulas.cycle_kf(n, k).value),
        _eq_case(f"noniso/n={n}/fractional-path", frac_p, formulas.path_kf(n, k).value),
        Case(
            key=f"noniso/n={n}/fractional-differs",
            expected="unequal",
            computed=f"{fmt(frac_c)} vs {fmt(frac_p)}",
            passed=frac_c != frac_p,
        ),
    ]


SUITES = {
    "cycles": (_cycles_items, _cycles_case, {"max_n": 28, "max_k": 5}),
    "paths": (_paths_items, _paths_case, {"max_n": 28, "max_k": 5}),
    "fans": (_fans_items, _fans_case, {"max_order": 24, "ks": (1, 2)}),
    "wheels": (_wheels_items, _wheels_case, {"max_order": 24, "ks": (1, 2)}),
    "multipartite": (_multipartite_items, _multipartite_case, {"max_n": 10, "ks": (1, 3)}),
    "petersen": (_petersen_items, _petersen_case, {"ks": (1, 2, 3)}),
    "grids": (_grids_items, _grids_case, {"max_s": 6, "blocks": ((8, 6),)}),
    "trees": (
        _trees_items,
        _trees_case,
        {"trials": 200, "max_n": 14, "seed": 1, "max_spider_k": 4},
    ),
    "bounds_monotonicity": (
        _bounds_items,
        _bounds_case,
        {"trials": 300, "max_n": 10, "max_k": 4, "seed": 2},
    ),
    "rk_identity": (
        _rk_items,
        _rk_case,
        {
            "graph_trials": 300,
            "tree_trials": 200,
            "max_n": 10,
            "tree_max_n": 14,
            "max_k": 4,
            "max_order": 20,
            "seed": 2,
            "tree_seed": 1,
        },
    ),
    "dimk_formulas": (_dimk_items, _dimk_case, {"max_n": 28, "max_k": 4}),
    "gap_constructions": (
        _gap_items,
        _gap_case,
        {"ms": (3, 4), "xs": (1, 2, 3), "alphas": (3, 4), "ks": (1, 2)},
    ),
    "noniso_pair": (_noniso_items, _noniso_case, {"n": 9, "k": 1}),
}


def _eval_item(args):
    name, item, params = args
    return SUITES[name][1](item, params)


def run_suite(name: str, threads: int = 1, **overrides) -> VerificationReport:
    """Run one suite; overrides replace the documented default parameters."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    items_fn, _, defaults = SUITES[name]
    params = dict(defaults)
    for key, value in overrides.items():
        if value is not None and key in defaults:
            params[key] = value
    start = time.perf_counter()
    items = items_fn(params)
    jobs = [(name, item, params) for item in items]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(_eval_item, jobs, chunksize=8))
    else:
        chunks = [_eval_item(job) for job in jobs]
    cases = [case for chunk in chunks for case in chunk]
    cases.sort(key=lambda c: c.key)
    return VerificationReport(
        suite=name,
        params={k: (list(v) if isinstance(v, tuple) else v) for k, v in params.items()},
        cases=cases,
        wall_time=time.perf_counter() - start,
    )


def suite_names() -> list[str]:
    return sorted(SUITES)
