"""Pair-distinguishing sets, twin classes, and the covering constraint system.

For a truncation parameter k, the distinguishing set of a vertex pair {x, y}
is the set of vertices z whose truncated distances to x and to y differ.  A
vertex set (or a fractional weighting) resolves the graph when every pair's
distinguishing set is hit (or carries mass >= 1).

Two independent computations of the distinguishing set are provided: a
definition scan over all z, and a neighborhood-ball identity
``(N_k[x] u N_k[y]) - union_i (N_i(x) n N_i(y))``.  The verification
operations recompute pair sets from scratch and never reuse the reduced
system, so solver and checker cannot share a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import (
    DistanceMatrix,
    Graph,
    GraphInputError,
    ball,
    bfs_apsp,
    diameter,
    is_connected,
    shell,
)


def r_k_pair(dm: DistanceMatrix, k: int, x: int, y: int) -> frozenset[int]:
    """Distinguishing set of {x, y}: all z with min(d(x,z),k+1) != min(d(y,z),k+1)."""
    if x == y:
        raise ValueError("distinguishing set needs two distinct vertices")
    if k < 1:
        raise ValueError(f"truncation parameter must be >= 1, got {k}")
    kk = k + 1
    dx, dy = dm.d[x], dm.d[y]
    out = []
    for z in range(dm.n):
        a, b = dx[z], dy[z]
        if a is None or b is None:
            raise GraphInputError("distinguishing sets need a connected graph")
        if min(a, kk) != min(b, kk):
            out.append(z)
    return frozenset(out)


def r_k_pair_neighborhood_form(dm: DistanceMatrix, k: int, x: int, y: int) -> frozenset[int]:
    """Same set as :func:`r_k_pair`, computed via balls and shells."""
    if x == y:
        raise ValueError("distinguishing set needs two distinct vertices")
    if k < 1:
        raise ValueError(f"truncation parameter must be >= 1, got {k}")
    out = set(ball(dm, k, x) | ball(dm, k, y))
    for i in range(1, k + 1):
        out -= shell(dm, i, x) & shell(dm, i, y)
    return frozenset(out)


def twin_classes(g: Graph) -> list[tuple[int, ...]]:
    """Equivalence classes of the twin relation N(x)-{y} = N(y)-{x}.

    Each class induces a clique or an independent set.  Classes are sorted
    by smallest member.
    """
    nbr = [set(a) for a in g.adj]
    parent = list(range(g.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(g.n):
        for y in range(x + 1, g.n):
            if nbr[x] - {y} == nbr[y] - {x}:
                parent[find(x)] = find(y)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted((tuple(sorted(vs)) for vs in groups.values()), key=lambda c: c[0])


@dataclass(frozen=True)
class ConstraintSystem:
    """Deduplicated, dominance-reduced family of pair-distinguishing sets.

    ``constraints[i]`` is a sorted vertex tuple; ``pairs[i]`` is the
    lexicographically smallest pair whose distinguishing set it is.  No two
    constraints are equal and none contains another, so the covering LP/ILP
    feasible regions are unchanged by the reduction.  ``untruncated`` records
    that k is at least diameter-1, i.e. truncation is inert.
    """

    n: int
    k: int
    constraints: tuple[tuple[int, ...], ...]
    pairs: tuple[tuple[int, int], ...]
    untruncated: bool = False

    def __len__(self) -> int:
        return len(self.constraints)

    @property
    def masks(self) -> tuple[int, ...]:
        return _masks_of(self.constraints)

    def key(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        """Canonical identity of the covering system (ignores provenance)."""
        return (self.n, self.constraints)


@lru_cache(maxsize=None)
def _masks_of(constraints: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    out = []
    for c in constraints:
        m = 0
        for v in c:
            m |= 1 << v
        out.append(m)
    return tuple(out)


def raw_pair_sets(g: Graph, k: int):
    """Yield ((x, y), distinguishing set) for every vertex pair, unreduced."""
    dm = bfs_apsp(g)
    for x in range(g.n):
        for y in range(x + 1, g.n):
            yield (x, y), r_k_pair(dm, k, x, y)


@lru_cache(maxsize=4096)
def constraint_system(g: Graph, k: int) -> ConstraintSystem:
    """All pair sets, deduplicated then pruned of supersets of other sets."""
    if not is_connected(g):
        raise GraphInputError("constraint system needs a connected graph")
    if g.n < 2:
        raise GraphInputError("constraint system needs order >= 2")
    if k < 1:
        raise ValueError(f"truncation parameter must be >= 1, got {k}")
    first_pair: dict[frozenset[int], tuple[int, int]] = {}
    for pair, rset in raw_pair_sets(g, k):
        if rset not in first_pair:
            first_pair[rset] = pair
    distinct = sorted(first_pair, key=lambda s: (len(s), sorted(s)))
    masks = []
    for s in distinct:
        m = 0
        for v in s:
            m |= 1 << v
        masks.append(m)
    keep: list[int] = []
    for i, m in enumerate(masks):
        dominated = False
        for j in keep:
            sub = masks[j]
            if sub != m and (m & sub) == sub:
                dominated = True
                break
        if not dominated:
            keep.append(i)
    constraints = tuple(tuple(sorted(distinct[i])) for i in keep)
    pairs = tuple(first_pair[distinct[i]] for i in keep)
    return ConstraintSystem(
        n=g.n,
        k=k,
        constraints=constraints,
        pairs=pairs,
        untruncated=k >= diameter(g) - 1,
    )


def check_resolving_set(g: Graph, k: int, s) -> bool:
    """True iff s hits every pair's distinguishing set (computed from scratch)."""
    chosen = frozenset(s)
    if any(not (0 <= v < g.n) for v in chosen):
        raise ValueError("resolving set contains an id outside the vertex range")
    return all(chosen & rset for _, rset in raw_pair_sets(g, k))


def check_resolving_function(g: Graph, k: int, weights) -> bool:
    """True iff every pair's distinguishing set carries mass >= 1.

    ``weights`` maps vertices to exact rationals in [0, 1]; missing vertices
    count as 0.  Values outside [0, 1] are rejected.
    """
    w = dict(weights)
    for v, val in w.items():
        if not (0 <= val <= 1):
            raise ValueError(f"weight {val} at vertex {v} lies outside [0,1]")
    zero = 0
    return all(sum((w.get(z, zero) for z in rset), zero) >= 1 for _, rset in raw_pair_sets(g, k))
