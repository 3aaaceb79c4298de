"""Exact optimization over covering constraint systems.

Two solvers, both fully rational (no floats, no tolerances):

* a simplex for the fractional relaxation ``min sum(x) : x >= 0, each
  constraint carries mass >= 1``, run with Bland's anti-cycling rule on the
  packing dual so the all-zero basis is immediately feasible.  Every solve
  returns a primal witness together with a dual vector of equal value, and
  both are re-verified from scratch, so optimality is certified by weak
  duality rather than trusted from the pivoting;

* a branch-and-bound hitting-set search for the integer problem, branching
  on the vertices of the smallest uncovered constraint, pruning with the
  incumbent against a disjoint-constraint packing bound and the ceiling of
  the residual LP optimum.

Upper bounds x <= 1 are omitted from the LP on purpose: with 0/1 rows and
unit right-hand sides, capping any coordinate at 1 keeps feasibility without
raising the objective, so some optimal vertex has all values in [0, 1].  The
claim is asserted on every witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

from .graph import Graph, GraphInputError, diameter, is_connected
from .rational import Rational, rat_ceil
from .resolve import (
    ConstraintSystem,
    check_resolving_function,
    check_resolving_set,
    constraint_system,
)

_ZERO = mpq(0)
_ONE = mpq(1)

# depth limit below which branch-and-bound nodes pay for an exact LP bound
# when the cheap packing bound fails to prune
_LP_BOUND_DEPTH = 2


class SizeLimitError(RuntimeError):
    """Raised instead of ever returning a heuristic answer on large input."""


class WitnessError(AssertionError):
    """A solver produced a witness that failed independent re-verification."""


@dataclass(frozen=True)
class FractionalWitness:
    """Optimal fractional weighting: values[v] is the mass on vertex v."""

    values: tuple[Rational, ...]
    total: Rational

    def as_dict(self) -> dict[int, Rational]:
        return dict(enumerate(self.values))


@dataclass(frozen=True)
class IntegerWitness:
    """Optimal (or, for the greedy bound, feasible) resolving vertex set."""

    vertices: frozenset[int]
    size: int


def _lp_masks(n: int, masks) -> tuple[Rational, list[Rational], list[Rational]]:
    """Exact optimum of min sum(x), x >= 0, sum over each mask >= 1.

    Returns (optimum, primal x, dual y).  Solved as the packing dual
    ``max sum(y), A^T y <= 1, y >= 0`` whose slack basis is feasible, using
    Bland's smallest-index rule; the primal witness is read off the final
    reduced costs of the slack columns.
    """
    m = len(masks)
    if m == 0:
        raise ValueError("covering system must be nonempty")
    if any(mask == 0 for mask in masks):
        raise ValueError("covering system contains an empty constraint")
    # tableau in min-form for the dual: minimize -sum(y)
    # rows: n equations  A^T y + s = 1 ; columns: m structural + n slacks
    ncols = m + n
    rows: list[list[Rational]] = []
    for i in range(n):
        bit = 1 << i
        row = [_ONE if masks[j] & bit else _ZERO for j in range(m)]
        row += [_ONE if t == i else _ZERO for t in range(n)]
        row.append(_ONE)
        rows.append(row)
    cost = [-_ONE] * m + [_ZERO] * n
    red = list(cost) + [_ZERO]  # reduced-cost row, rhs cell = -objective
    basis = [m + i for i in range(n)]

    while True:
        enter = -1
        for j in range(ncols):
            if red[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave, best = -1, None
        for i in range(n):
            a = rows[i][enter]
            if a > 0:
                r = rows[i][-1] / a
                if best is None or r < best or (r == best and basis[i] < basis[leave]):
                    best, leave = r, i
        if leave < 0:
            raise ArithmeticError("packing dual is unbounded; covering system is infeasible")
        piv_row = rows[leave]
        piv = piv_row[enter]
        if piv != 1:
            piv_row = [v / piv for v in piv_row]
            rows[leave] = piv_row
        for i in range(n):
            if i != leave:
                f = rows[i][enter]
                if f:
                    cur = rows[i]
                    rows[i] = [a - f * b for a, b in zip(cur, piv_row)]
        f = red[enter]
        if f:
            red = [a - f * b for a, b in zip(red, piv_row)]
        basis[leave] = enter

    x = [red[m + i] for i in range(n)]
    y = [_ZERO] * m
    for i, b in enumerate(basis):
        if b < m:
            y[b] = rows[i][-1]
    opt = sum(y, _ZERO)

    # weak-duality certificate, checked from scratch
    if sum(x, _ZERO) != opt:
        raise WitnessError("primal/dual objective values differ")
    if any(v < 0 for v in x) or any(v < 0 for v in y):
        raise WitnessError("negative coordinate in LP certificate")
    for mask in masks:
        s = _ZERO
        mm = mask
        while mm:
            low = mm & -mm
            s += x[low.bit_length() - 1]
            mm ^= low
        if s < 1:
            raise WitnessError("LP witness leaves a constraint uncovered")
    for i in range(n):
        bit = 1 << i
        s = sum((y[j] for j in range(m) if masks[j] & bit), _ZERO)
        if s > 1:
            raise WitnessError("LP dual violates a packing constraint")
    return opt, x, y


def simplex_min_exact(system: ConstraintSystem) -> FractionalWitness:
    """Certified optimum of the covering LP of a constraint system."""
    opt, x, _ = _lp_masks(system.n, system.masks)
    return FractionalWitness(values=tuple(x), total=opt)


def covering_lp_value(system: ConstraintSystem) -> Rational:
    return _cached_lp_value(system.n, system.masks)


@lru_cache(maxsize=65536)
def _cached_lp_value(n: int, masks: tuple[int, ...]) -> Rational:
    return _lp_masks(n, masks)[0]


def greedy_upper_bound(system: ConstraintSystem) -> IntegerWitness:
    """Feasible hitting set by max-coverage greedy (ties to the lowest id)."""
    masks = list(system.masks)
    n = system.n
    chosen: list[int] = []
    uncovered = [mask for mask in masks if mask]
    while uncovered:
        best_v, best_c = -1, 0
        for v in range(n):
            bit = 1 << v
            c = sum(1 for mask in uncovered if mask & bit)
            if c > best_c:
                best_c, best_v = c, v
        chosen.append(best_v)
        bit = 1 << best_v
        uncovered = [mask for mask in uncovered if not (mask & bit)]
    return IntegerWitness(vertices=frozenset(chosen), size=len(chosen))


def _packing_bound(uncovered: list[int]) -> int:
    """Count of pairwise-disjoint uncovered constraints (each needs its own vertex)."""
    used = 0
    count = 0
    for mask in uncovered:
        if not (mask & used):
            count += 1
            used |= mask
    return count


def _min_hitting_set(n: int, masks: tuple[int, ...], incumbent: list[int]) -> list[int]:
    """Exact minimum hitting set by depth-first branch and bound.

    ``incumbent`` is a feasible solution; the search branches on the
    constraint with the fewest available vertices, trying its vertices in
    order of residual coverage (ties to the lowest id), and excluding each
    tried vertex from later siblings.  Bounds: disjoint packing always, the
    residual LP ceiling near the root.
    """
    best = list(incumbent)

    def residual_lp_bound(uncovered: tuple[int, ...]) -> int:
        return rat_ceil(_cached_lp_value(n, uncovered))

    def rec(uncovered: list[int], allowed: int, chosen: list[int], depth: int) -> None:
        nonlocal best
        # propagate constraints with a single available vertex
        while True:
            if not uncovered:
                if len(chosen) < len(best):
                    best = chosen
                return
            if len(chosen) + 1 >= len(best):
                return
            forced = 0
            for mask in uncovered:
                avail = mask & allowed
                if avail == 0:
                    return  # infeasible branch
                if avail & (avail - 1) == 0:
                    forced = avail
                    break
            if not forced:
                break
            chosen = chosen + [forced.bit_length() - 1]
            uncovered = [mask for mask in uncovered if not (mask & forced)]
        lb = len(chosen) + _packing_bound(uncovered)
        if lb >= len(best):
            return
        # the LP bound dominates the packing bound but costs a solve; pay for
        # it only near the root and only when it could close the gap
        if depth <= _LP_BOUND_DEPTH and len(best) - lb <= 2:
            lb = len(chosen) + residual_lp_bound(tuple(sorted(mask & allowed for mask in uncovered)))
            if lb >= len(best):
                return
        # branch on the smallest available constraint (first in canonical order on ties)
        sel, sel_size = 0, None
        for mask in uncovered:
            avail = mask & allowed
            size = avail.bit_count()
            if sel_size is None or size < sel_size:
                sel, sel_size = avail, size
        vs = []
        mm = sel
        while mm:
            low = mm & -mm
            vs.append(low.bit_length() - 1)
            mm ^= low
        cover = {v: sum(1 for mask in uncovered if mask & (1 << v)) for v in vs}
        vs.sort(key=lambda v: (-cover[v], v))
        remaining = allowed
        for v in vs:
            bit = 1 << v
            rest = [mask for mask in uncovered if not (mask & bit)]
            rec(rest, remaining & ~bit, chosen + [v], depth + 1)
            remaining &= ~bit

    order = sorted((mask for mask in masks), key=lambda mask: (mask.bit_count(), mask))
    rec(order, (1 << n) - 1, [], 0)
    return best


def dim_k_exact(g: Graph, k: int, limit: int = 64) -> IntegerWitness:
    """Provably minimum k-truncated resolving set via branch and bound.

    Refuses graphs above ``limit`` vertices outright rather than ever
    degrading to a heuristic answer.
    """
    _validate(g, k)
    if g.n > limit:
        raise SizeLimitError(f"branch and bound refuses n={g.n} > limit={limit}")
    system = constraint_system(g, k)
    seed = greedy_upper_bound(system)
    best = _min_hitting_set(g.n, system.masks, sorted(seed.vertices))
    witness = IntegerWitness(vertices=frozenset(best), size=len(best))
    if not check_resolving_set(g, k, witness.vertices):
        raise WitnessError("integer witness failed independent re-verification")
    return witness


def dim_kf(g: Graph, k: int) -> FractionalWitness:
    """Certified fractional k-truncated dimension with re-verified witness."""
    _validate(g, k)
    witness = simplex_min_exact(constraint_system(g, k))
    if any(v > 1 for v in witness.values):
        raise WitnessError("LP witness exceeds 1 on some vertex")
    if not (1 <= witness.total <= mpq(g.n, 2)):
        raise WitnessError(f"optimum {witness.total} outside [1, n/2]")
    if not check_resolving_function(g, k, witness.as_dict()):
        raise WitnessError("fractional witness failed independent re-verification")
    return witness


def dim_f(g: Graph) -> FractionalWitness:
    """Untruncated fractional dimension: truncation at the diameter is inert."""
    if not is_connected(g):
        raise GraphInputError("fractional dimension needs a connected graph")
    if g.n < 2:
        raise GraphInputError("fractional dimension needs order >= 2")
    return dim_kf(g, max(1, diameter(g)))


def _validate(g: Graph, k: int) -> None:
    if not is_connected(g):
        raise GraphInputError("dimension solvers need a connected graph")
    if g.n < 2:
        raise GraphInputError("dimension solvers need order >= 2")
    if k < 1:
        raise ValueError(f"truncation parameter must be >= 1, got {k}")
