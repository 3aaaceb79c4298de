"""Closed-form values of the truncated fractional and integer dimensions.

Each function returns a :class:`FormulaValue`: either an exact rational or a
closed rational interval for the parameter ranges where only two-sided
bounds are known.  Interval results never silently collapse to a point;
callers must handle both kinds.  Every value carries the branch of the case
analysis that produced it, so a failing comparison reports which branch
disagreed.

Conventions: ``fan_kf(n, k)`` indexes by the path order of the fan (total
order n+1); ``wheel_kf(n, k)`` indexes by the cycle order of the wheel
(total order n+1).  The ``wheel`` generator, by contrast, takes the total
order; the harness maps between the two.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .characterize import tree_profile
from .graph import Graph
from .rational import Rational, fmt, rat_ceil


@dataclass(frozen=True)
class FormulaValue:
    """Exact value (lo == hi) or closed interval [lo, hi] with provenance."""

    lo: Rational
    hi: Rational
    branch: str = ""

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Rational:
        if not self.is_exact:
            raise ValueError(f"interval {self} has no single value")
        return self.lo

    def contains(self, q) -> bool:
        return self.lo <= q <= self.hi

    def __str__(self) -> str:
        if self.is_exact:
            return fmt(self.lo)
        return f"{fmt(self.lo)}..{fmt(self.hi)}"


def exact(value, branch: str = "") -> FormulaValue:
    q = mpq(value)
    return FormulaValue(q, q, branch)


def interval(lo, hi, branch: str = "") -> FormulaValue:
    return FormulaValue(mpq(lo), mpq(hi), branch)


def path_kf(n: int, k: int) -> FormulaValue:
    """Fractional k-truncated dimension of the path on n vertices."""
    _check(n >= 2, f"path formula needs n >= 2, got {n}")
    _check(k >= 1, f"k must be >= 1, got {k}")
    if n <= k + 2:
        return exact(1, "n <= k+2")
    if n <= 2 * k + 3:
        return exact(mpq(6 + 2 * k - n, 5 + 2 * k - n), "k+3 <= n <= 2k+3")
    period = 2 * k + 2
    r = n % period
    ceil_term = rat_ceil(mpq(n, period))
    if r == 1:
        return exact(mpq(n + k, period), "n % (2k+2) == 1")
    if 2 <= r <= k + 2:
        return exact(ceil_term, "n % (2k+2) in 2..k+2")
    return interval(ceil_term, mpq(2 * ceil_term + 1, 2), "n % (2k+2) in {0} u k+3..2k+1")


def cycle_kf(n: int, k: int) -> FormulaValue:
    """Fractional k-truncated dimension of the cycle on n vertices."""
    _check(n >= 3, f"cycle formula needs n >= 3, got {n}")
    _check(k >= 1, f"k must be >= 1, got {k}")
    if n <= 2 * k + 3:
        if n % 2 == 1:
            return exact(mpq(n, n - 1), "n <= 2k+3, n odd")
        return exact(mpq(n, n - 2), "n <= 2k+3, n even")
    return exact(mpq(n, 2 * (k + 1)), "n >= 2k+4")


def fan_kf(n: int, k: int) -> FormulaValue:
    """Fan over a path of order n plus a hub; independent of k (diameter <= 2)."""
    _check(n >= 1, f"fan formula needs path order n >= 1, got {n}")
    _check(k >= 1, f"k must be >= 1, got {k}")
    if n <= 3:
        return exact(mpq(n + 1, 2), "n in 1..3")
    if n <= 5:
        return exact(mpq(5, 3), "n in {4,5}")
    r = n % 4
    if r in (1, 3):
        return exact(mpq(n + 1, 4), "n >= 6, n % 4 in {1,3}")
    if r == 2:
        return exact(mpq(n + 2, 4), "n >= 6, n % 4 == 2")
    return interval(mpq(n, 4), mpq(n + 2, 4), "n >= 8, n % 4 == 0")


def wheel_kf(n: int, k: int) -> FormulaValue:
    """Wheel over a cycle of order n plus a hub; independent of k (diameter <= 2)."""
    _check(n >= 3, f"wheel formula needs cycle order n >= 3, got {n}")
    _check(k >= 1, f"k must be >= 1, got {k}")
    if n <= 4:
        return exact(2, "n in {3,4}")
    if n == 5:
        return exact(mpq(3, 2), "n == 5")
    return exact(mpq(n, 4), "n >= 6")


def multipartite_f(parts) -> FormulaValue:
    """Complete multipartite graph; value depends on the singleton-part count."""
    parts = list(parts)
    _check(len(parts) >= 2, f"need >= 2 parts, got {parts}")
    _check(all(p >= 1 for p in parts), f"part sizes must be positive, got {parts}")
    n = sum(parts)
    singletons = sum(1 for p in parts if p == 1)
    if singletons == 1:
        return exact(mpq(n - 1, 2), "exactly one singleton part")
    return exact(mpq(n, 2), "no or several singleton parts")


def petersen_kf(k: int) -> FormulaValue:
    _check(k >= 1, f"k must be >= 1, got {k}")
    return exact(mpq(5, 3), "petersen, any k")


def grid_f(s: int, t: int) -> FormulaValue:
    _check(s >= 2 and t >= 2, f"grid formula needs s,t >= 2, got ({s},{t})")
    return exact(2, "grid, untruncated")


def tree_f(t: Graph) -> FormulaValue:
    """Untruncated fractional dimension of a tree: (leaves - single-terminal majors)/2."""
    profile = tree_profile(t)
    return exact(mpq(profile.sigma - profile.ex1, 2), "tree profile")


def tree_dim(t: Graph) -> int:
    """Untruncated metric dimension of a non-path tree: leaves - exterior majors."""
    profile = tree_profile(t)
    if profile.ex == 0:
        raise ValueError("tree dimension formula does not apply to paths")
    return profile.sigma - profile.ex


def path_cycle_dim_k(n: int, k: int, family: str) -> int:
    """Exact k-truncated dimension of a path or cycle by residue case analysis."""
    _check(k >= 1, f"k must be >= 1, got {k}")
    if family == "path":
        _check(n >= 2, f"path needs n >= 2, got {n}")
        if n <= k + 2:
            return 1
        if n <= 3 * k + 3:
            return 2
    elif family == "cycle":
        _check(n >= 3, f"cycle needs n >= 3, got {n}")
        if n <= 3 * k + 3:
            return 2
    else:
        raise ValueError(f"family must be 'path' or 'cycle', got {family!r}")
    period = 3 * k + 2
    r = n % period
    mid_lo = k + 3
    mid_hi = -(-(3 * k + 5) // 2) - 1  # ceil((3k+5)/2) - 1
    if mid_lo <= r <= mid_hi:
        return (2 * n + 4 * k - 1) // period
    return (2 * n + 3 * k - 1) // period


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)
