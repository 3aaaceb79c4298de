"""Simple undirected graphs with exact unweighted shortest-path machinery.

Vertices are dense 0-based integers.  Graphs are immutable after
construction and safe to share across workers.  Disconnected graphs are
representable (they are needed as building blocks), but the dimension
solvers reject them at entry.
"""

from __future__ import annotations

import io
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path


class GraphInputError(ValueError):
    """Raised for malformed graph construction input."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus sorted adjacency tuples.

    Invariants: no self-loops, no duplicate edges, symmetric adjacency,
    vertex ids exactly 0..n-1.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


def from_edge_list(n: int, edges) -> Graph:
    """Build a Graph from (u, v) pairs; deduplicates, symmetrizes.

    Rejects out-of-range endpoints and self-loops with a diagnostic naming
    the offending edge.
    """
    if n < 1:
        raise GraphInputError(f"vertex count must be >= 1, got {n}")
    seen: set[tuple[int, int]] = set()
    for e in edges:
        u, v = e
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphInputError(f"edge ({u},{v}) has an endpoint outside [0,{n})")
        if u == v:
            raise GraphInputError(f"self-loop ({u},{v}) is not allowed")
        seen.add((min(u, v), max(u, v)))
    nbr: list[set[int]] = [set() for _ in range(n)]
    for u, v in seen:
        nbr[u].add(v)
        nbr[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbr))


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances.  Unreachable pairs hold the sentinel ``None``.

    The sentinel is a dedicated marker, never a large integer, so truncation
    can never silently connect components.
    """

    n: int
    d: tuple[tuple[int | None, ...], ...]

    def dist(self, x: int, y: int) -> int | None:
        return self.d[x][y]


def _bfs_row(adj, s: int) -> tuple[int | None, ...]:
    dist: list[int | None] = [None] * len(adj)
    dist[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        du = dist[u]
        for v in adj[u]:
            if dist[v] is None:
                dist[v] = du + 1
                q.append(v)
    return tuple(dist)


@lru_cache(maxsize=4096)
def bfs_apsp(g: Graph) -> DistanceMatrix:
    """Exact hop distances from every vertex by repeated BFS."""
    return DistanceMatrix(g.n, tuple(_bfs_row(g.adj, s) for s in range(g.n)))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return None not in bfs_apsp(g).d[0]


def diameter(g: Graph) -> int:
    """Largest pairwise distance; rejects disconnected graphs."""
    dm = bfs_apsp(g)
    best = 0
    for row in dm.d:
        for val in row:
            if val is None:
                raise GraphInputError("diameter is undefined for a disconnected graph")
            if val > best:
                best = val
    return best


def truncated_distance(dm: DistanceMatrix, k: int, x: int, y: int) -> int:
    """min(d(x,y), k+1): distances beyond k+1 are indistinguishable."""
    if k < 1:
        raise ValueError(f"truncation parameter must be >= 1, got {k}")
    d = dm.d[x][y]
    if d is None:
        raise GraphInputError(f"pair ({x},{y}) is unreachable; truncation undefined")
    return min(d, k + 1)


def ball(dm: DistanceMatrix, k: int, v: int) -> frozenset[int]:
    """Closed ball: vertices at distance <= k from v."""
    row = dm.d[v]
    return frozenset(w for w in range(dm.n) if row[w] is not None and row[w] <= k)


def shell(dm: DistanceMatrix, k: int, v: int) -> frozenset[int]:
    """Vertices at distance exactly k from v."""
    row = dm.d[v]
    return frozenset(w for w in range(dm.n) if row[w] == k)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every edge between the two sides.

    Vertices of g keep their ids; vertices of h are shifted by g.n.
    """
    n = g.n + h.n
    edges = list(g.edges())
    edges += [(u + g.n, v + g.n) for u, v in h.edges()]
    edges += [(u, w + g.n) for u in range(g.n) for w in range(h.n)]
    return from_edge_list(n, edges)


# --- edge-list text format -------------------------------------------------
#
# First line ``n m``, then m lines ``u v`` (0-based, whitespace-separated,
# order-insensitive).  The writer emits edges with u < v, sorted
# lexicographically.


def write_edge_list(g: Graph, target) -> None:
    text = to_edge_list_text(g)
    if isinstance(target, (str, Path)):
        Path(target).write_text(text)
    else:
        target.write(text)


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(source) -> Graph:
    if isinstance(source, (str, Path)):
        text = Path(source).read_text()
    elif isinstance(source, io.IOBase) or hasattr(source, "read"):
        text = source.read()
    else:
        raise TypeError("expected a path or a readable file object")
    return from_edge_list_text(text)


def from_edge_list_text(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise GraphInputError("edge-list input needs a header line 'n m'")
    try:
        n, m = int(tokens[0]), int(tokens[1])
    except ValueError as exc:
        raise GraphInputError(f"malformed header: {tokens[:2]}") from exc
    body = tokens[2:]
    if len(body) != 2 * m:
        raise GraphInputError(f"expected {2 * m} endpoint tokens for m={m}, got {len(body)}")
    try:
        edges = [(int(body[2 * i]), int(body[2 * i + 1])) for i in range(m)]
    except ValueError as exc:
        raise GraphInputError("non-integer endpoint in edge list") from exc
    return from_edge_list(n, edges)
