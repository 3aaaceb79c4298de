"""Deterministic constructors for the graph families under study.

Canonical labelings (the verification harness depends on these):

* ``path``/``cycle``: vertices 0..n-1 in traversal order.
* ``grid(s, t)``: row i in 1..s, column j in 1..t maps to id (i-1)*t + (j-1).
* ``wheel(n)``/``fan(n)``: hub is the last id (wheel takes the total order n
  and wraps a cycle of length n-1; fan takes the path length n and has order
  n+1).
* ``petersen``: the ten 2-subsets of {0..4} in lexicographic order, adjacent
  when disjoint.
* ``spider``: center 0, then each leg's vertices outward, legs in input order.
* ``leaf_cluster_caterpillar(x, alpha)``: spine path 0..x-1, then the alpha
  pendant leaves of spine vertex i occupy x + i*alpha .. x + (i+1)*alpha - 1.
* ``complete_multipartite``/``blowup``: block vertices are consecutive, blocks
  in input order.

Random generation uses Python's Mersenne Twister (``random.Random(seed)``
with ``randrange``/``random``), which is stable across platforms: the same
64-bit seed always yields the same graph.
"""

from __future__ import annotations

import heapq
import random

from .graph import Graph, GraphInputError, from_edge_list, is_connected, join


def path(n: int) -> Graph:
    if n < 1:
        raise GraphInputError(f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphInputError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphInputError(f"complete graph needs n >= 1, got {n}")
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def grid(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise GraphInputError(f"grid needs s,t >= 1, got ({s},{t})")
    edges = []
    for i in range(s):
        for j in range(t):
            v = i * t + j
            if j + 1 < t:
                edges.append((v, v + 1))
            if i + 1 < s:
                edges.append((v, v + t))
    return from_edge_list(s * t, edges)


def petersen() -> Graph:
    pairs = [(a, b) for a in range(5) for b in range(a + 1, 5)]
    idx = {p: i for i, p in enumerate(pairs)}
    edges = []
    for p in pairs:
        for q in pairs:
            if p < q and not (set(p) & set(q)):
                edges.append((idx[p], idx[q]))
    return from_edge_list(10, edges)


def wheel(n: int) -> Graph:
    """Wheel of total order n (a cycle of length n-1 joined to a hub)."""
    if n < 5:
        raise GraphInputError(f"wheel needs order n >= 5, got {n}")
    return join(cycle(n - 1), complete(1))


def fan(n: int) -> Graph:
    """Fan on a path of length n plus a hub; total order n+1."""
    if n < 1:
        raise GraphInputError(f"fan needs path length n >= 1, got {n}")
    return join(path(n), complete(1))


def complete_multipartite(parts: list[int]) -> Graph:
    if len(parts) < 2:
        raise GraphInputError("complete multipartite graph needs at least 2 parts")
    if any(p < 1 for p in parts):
        raise GraphInputError(f"part sizes must be positive, got {parts}")
    n = sum(parts)
    block = []
    start = 0
    for p in parts:
        block.append(range(start, start + p))
        start += p
    edges = []
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            edges += [(u, v) for u in block[a] for v in block[b]]
    return from_edge_list(n, edges)


def spider(leg_lengths: list[int]) -> Graph:
    """One center vertex with a path of each given length attached."""
    if len(leg_lengths) < 3:
        raise GraphInputError("spider needs at least 3 legs so the center is a major vertex")
    if any(l < 1 for l in leg_lengths):
        raise GraphInputError(f"leg lengths must be positive, got {leg_lengths}")
    edges = []
    nxt = 1
    for length in leg_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edge_list(nxt, edges)


def leaf_cluster_caterpillar(x: int, alpha: int) -> Graph:
    """Spine path of x vertices, each carrying alpha pendant leaves.

    Every vertex is either a spine vertex with terminal degree alpha >= 3 or
    a leaf adjacent to its spine vertex.
    """
    if x < 1:
        raise GraphInputError(f"spine length must be >= 1, got {x}")
    if alpha < 3:
        raise GraphInputError(f"need alpha >= 3 leaves per spine vertex, got {alpha}")
    edges = [(i, i + 1) for i in range(x - 1)]
    for i in range(x):
        for j in range(alpha):
            edges.append((i, x + i * alpha + j))
    return from_edge_list(x + x * alpha, edges)


def subdivided_star(x: int, s: int) -> Graph:
    """Star with x legs, the first s of which are subdivided once."""
    if x < 3:
        raise GraphInputError(f"star needs x >= 3 legs, got {x}")
    if not (0 <= s <= x):
        raise GraphInputError(f"number of subdivided edges must be in [0,{x}], got {s}")
    return spider([2] * s + [1] * (x - s))


def blowup(h: Graph, assignment: list[tuple[str, int]]) -> Graph:
    """Replace each vertex of h by a clique or independent set of size >= 2.

    Cross edges appear exactly between blocks whose template vertices are
    adjacent in h.  Every twin equivalence class of the result has size >= 2.
    """
    if len(assignment) != h.n:
        raise GraphInputError(f"need one (kind, size) per template vertex, got {len(assignment)} for n={h.n}")
    if not is_connected(h):
        raise GraphInputError("blowup template must be connected")
    for kind, size in assignment:
        if kind not in ("clique", "independent"):
            raise GraphInputError(f"unknown block kind {kind!r}")
        if size < 2:
            raise GraphInputError(f"block sizes must be >= 2, got {size}")
    block = []
    start = 0
    for _, size in assignment:
        block.append(range(start, start + size))
        start += size
    edges = []
    for u, (kind, _) in enumerate(assignment):
        if kind == "clique":
            edges += [(a, b) for a in block[u] for b in block[u] if a < b]
    for u, v in h.edges():
        edges += [(a, b) for a in block[u] for b in block[v]]
    return from_edge_list(start, edges)


def gap_construction(m: int) -> tuple[Graph, Graph, dict[int, int]]:
    """Complete graph H on m(m+1)/2 vertices inside a diameter-2 host G.

    H's vertices are grouped into blocks V_1..V_m with |V_i| = i (block t of
    size t occupies consecutive ids).  G adds apex vertices u_1..u_m at the
    end; u_i is adjacent to all of V_i and to the i-th vertex of every later
    block.  The apexes form a resolving set of G, so the fractional dimension
    of the subgraph H exceeds that of G by a factor growing with m.
    """
    if m < 3:
        raise GraphInputError(f"gap construction needs m >= 3, got {m}")
    nh = m * (m + 1) // 2
    offset = [0]
    for i in range(1, m + 1):
        offset.append(offset[-1] + i)

    def w(i: int, t: int) -> int:
        # t-th vertex (1-based) of block V_i
        return offset[i - 1] + t - 1

    h = complete(nh)
    edges = list(h.edges())
    for i in range(1, m + 1):
        u = nh + i - 1
        for t in range(1, i + 1):
            edges.append((u, w(i, t)))
        for j in range(i + 1, m + 1):
            edges.append((u, w(j, i)))
    g = from_edge_list(nh + m, edges)
    return h, g, {v: v for v in range(nh)}


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a seeded Pruefer sequence."""
    if n < 2:
        raise GraphInputError(f"random tree needs n >= 2, got {n}")
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaf_heap = sorted(v for v in range(n) if degree[v] == 1)
    heapq.heapify(leaf_heap)
    for v in seq:
        u = heapq.heappop(leaf_heap)
        edges.append((u, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaf_heap, v)
    a = heapq.heappop(leaf_heap)
    b = heapq.heappop(leaf_heap)
    edges.append((a, b))
    return from_edge_list(n, edges)


def random_connected(n: int, p, seed: int) -> Graph:
    """Seeded G(n, p) conditioned on connectivity (resamples until connected)."""
    if n < 2:
        raise GraphInputError(f"random connected graph needs n >= 2, got {n}")
    p = float(p)
    if not (0 < p <= 1):
        raise GraphInputError(f"edge probability must be in (0,1], got {p}")
    rng = random.Random(seed)
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = from_edge_list(n, edges)
        if is_connected(g):
            return g
