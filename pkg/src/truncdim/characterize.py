"""Structural predicates for the dimension equalities, plus tree profiles.

Every predicate here is purely structural (degrees, walks, twin classes);
none of them calls a solver.  The verification harness tests each predicate
against the solver-computed equality it characterizes, so the two sides of
each biconditional are genuinely independent computations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphInputError, bfs_apsp, is_connected
from .resolve import twin_classes


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def is_path_graph(g: Graph) -> bool:
    return is_tree(g) and all(g.degree(v) <= 2 for v in range(g.n))


@dataclass
class TreeProfile:
    """Leaf/major-vertex structure of a tree.

    ``terminal[v]`` lists the leaves whose nearest major vertex is v (their
    walks to v avoid every other major vertex).  ``m1``/``m2`` split the
    exterior major vertices by terminal degree one / at least two.  Degree-2
    vertices are ``exterior`` when they lie on a leaf-to-major walk and
    ``interior`` otherwise.  ``subtree[v]`` is v together with all vertices
    on the walks between v and its terminal leaves.
    """

    leaves: tuple[int, ...]
    majors: tuple[int, ...]
    terminal: dict[int, tuple[int, ...]]
    exterior_majors: tuple[int, ...]
    m1: tuple[int, ...]
    m2: tuple[int, ...]
    exterior_deg2: tuple[int, ...]
    interior_deg2: tuple[int, ...]
    subtree: dict[int, frozenset[int]]
    sigma: int
    ex: int
    ex1: int

    def ter(self, v: int) -> int:
        return len(self.terminal.get(v, ()))


def tree_profile(t: Graph) -> TreeProfile:
    """Complete leaf/major profile of a tree of order >= 2."""
    if not is_tree(t):
        raise GraphInputError("tree profile needs a tree")
    if t.n < 2:
        raise GraphInputError("tree profile needs order >= 2")
    deg = [t.degree(v) for v in range(t.n)]
    leaves = tuple(v for v in range(t.n) if deg[v] == 1)
    majors = tuple(v for v in range(t.n) if deg[v] >= 3)
    major_set = set(majors)

    terminal: dict[int, list[int]] = {v: [] for v in majors}
    on_terminal_walk: set[int] = set()
    walk_of: dict[int, list[int]] = {}
    for leaf in leaves:
        if not major_set:
            break
        walk = [leaf]
        prev, cur = None, leaf
        while cur not in major_set:
            nxt = next(w for w in t.adj[cur] if w != prev)
            prev, cur = cur, nxt
            walk.append(cur)
        terminal[cur].append(leaf)
        walk_of[leaf] = walk
        on_terminal_walk.update(walk[:-1])  # everything strictly before the major

    exterior_majors = tuple(v for v in majors if terminal[v])
    m1 = tuple(v for v in exterior_majors if len(terminal[v]) == 1)
    m2 = tuple(v for v in exterior_majors if len(terminal[v]) >= 2)
    exterior_deg2 = tuple(
        v for v in range(t.n) if deg[v] == 2 and v in on_terminal_walk
    )
    interior_deg2 = tuple(
        v for v in range(t.n) if deg[v] == 2 and v not in on_terminal_walk
    )
    subtree = {
        v: frozenset({v}.union(*(walk_of[leaf] for leaf in terminal[v])))
        for v in exterior_majors
    }
    return TreeProfile(
        leaves=leaves,
        majors=majors,
        terminal={v: tuple(ls) for v, ls in terminal.items()},
        exterior_majors=exterior_majors,
        m1=m1,
        m2=m2,
        exterior_deg2=exterior_deg2,
        interior_deg2=interior_deg2,
        subtree=subtree,
        sigma=len(leaves),
        ex=len(exterior_majors),
        ex1=len(m1),
    )


def is_short_path(g: Graph, k: int) -> bool:
    """True iff g is a path of order 2..k+2 (the graphs of fractional dimension 1)."""
    return is_path_graph(g) and 2 <= g.n <= k + 2


def all_twin_classes_ge2(g: Graph) -> bool:
    """True iff every twin class has size >= 2.

    These are exactly the blowups of a connected template by cliques and
    independent sets of size >= 2, i.e. the graphs whose fractional
    dimension attains n/2 for every truncation.
    """
    if not is_connected(g):
        raise GraphInputError("twin-class characterization needs a connected graph")
    if g.n < 2:
        raise GraphInputError("twin-class characterization needs order >= 2")
    return all(len(c) >= 2 for c in twin_classes(g))


def tree_dim1f_eq_dimf(t: Graph) -> bool:
    """Decides whether truncation at 1 changes the fractional dimension of a tree.

    Holds exactly for the paths of order 2..3 and for trees whose vertices
    are all either leaves or major vertices with >= 2 adjacent terminal
    leaves.
    """
    profile = tree_profile(t)
    if profile.ex == 0:
        return t.n in (2, 3)
    return profile.ex >= 1 and set(profile.m2) | set(profile.leaves) == set(range(t.n))


def tree_dim1_eq_dim(t: Graph) -> bool:
    """Decides whether truncation at 1 changes the metric dimension of a tree.

    Holds for paths of order 2..3 and for stars with >= 3 legs, each leg of
    length 1 or 2, and at least one leg of length 1 (a star with at most
    x-1 of its x edges subdivided once).
    """
    if is_path_graph(t):
        return t.n in (2, 3)
    profile = tree_profile(t)
    if len(profile.majors) != 1:
        return False
    center = profile.majors[0]
    short_legs = 0
    for s in t.adj[center]:
        if t.degree(s) == 1:
            short_legs += 1
        elif t.degree(s) == 2:
            tail = next(w for w in t.adj[s] if w != center)
            if t.degree(tail) != 1:
                return False
        else:
            return False
    return short_legs >= 1


def tree_single_major_kf_eq_f(t: Graph, k: int) -> bool:
    """For a tree with exactly one exterior major vertex: truncation at k is
    inert for the fractional dimension iff every terminal leaf lies within
    distance k of that vertex."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    profile = tree_profile(t)
    if profile.ex != 1:
        raise ValueError(f"predicate needs exactly one exterior major vertex, found {profile.ex}")
    v = profile.exterior_majors[0]
    dm = bfs_apsp(t)
    return all(dm.d[v][leaf] <= k for leaf in profile.terminal[v])


_GRID_EXCEPTIONS = {(2, 2), (3, 2), (4, 2), (3, 3)}


def grid_dim1f_eq_dimf(s: int, t: int) -> bool:
    """The four grids whose fractional dimension survives truncation at 1."""
    if t < 2 or s < t:
        raise ValueError(f"grid predicate needs s >= t >= 2, got ({s},{t})")
    return (s, t) in _GRID_EXCEPTIONS
