"""Exhaustive enumeration of the basic feasible solutions of a covering LP.

Independent check of the simplex: enumerate every vertex of
``{x >= 0 : sum of x over each constraint >= 1}`` and take the minimum of
the objective over them.  The polyhedron is homogenized to a pointed cone in
R^{n+1} and built by the double description method, inserting one halfspace
at a time and combining adjacent extreme rays across the cut.  All
arithmetic is exact (integer ray vectors, canonicalized by gcd); adjacency
uses the standard combinatorial test (no third ray's tight set contains the
candidates' common tight set), vectorized over bit-packed tight sets.

The recession cone of a covering polyhedron is the nonnegative orthant, so
rays never affect the minimum; only the vertices matter.
"""

from __future__ import annotations

import math

import numpy as np
from gmpy2 import mpq

from .rational import Rational

def _pack(masks: list[int], width: int) -> np.ndarray:
    out = np.zeros((len(masks), width), dtype=np.uint64)
    for i, m in enumerate(masks):
        for w in range(width):
            out[i, w] = (m >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    return out


def enumerate_lp_vertices(n: int, masks) -> list[tuple[Rational, ...]]:
    """All vertices of {x >= 0 : sum_{i in mask} x_i >= 1 for each mask}."""
    masks = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    if any(m == 0 for m in masks):
        raise ValueError("empty covering constraint: polyhedron is empty")
    d = n + 1  # homogeneous coordinates (x0, x1..xn)
    halfspaces: list[tuple[int, ...]] = []
    for i in range(d):
        coeff = [0] * d
        coeff[i] = 1
        halfspaces.append(tuple(coeff))
    for m in masks:
        coeff = [-1] + [1 if (m >> i) & 1 else 0 for i in range(n)]
        halfspaces.append(tuple(coeff))
    total_hs = len(halfspaces)
    width = (total_hs + 63) // 64

    # start from the orthant cone: extreme rays are the coordinate directions
    rays: list[tuple[int, ...]] = []
    tight: list[int] = []
    for i in range(d):
        vec = [0] * d
        vec[i] = 1
        rays.append(tuple(vec))
        tight.append(((1 << d) - 1) ^ (1 << i))

    def exact_tight(vec: tuple[int, ...], upto: int) -> int:
        t = 0
        for h in range(upto):
            coeff = halfspaces[h]
            s = sum(c * v for c, v in zip(coeff, vec) if c)
            if s == 0:
                t |= 1 << h
        return t

    for hid in range(d, total_hs):
        coeff = halfspaces[hid]
        support = [i for i, c in enumerate(coeff) if c]
        vals = [sum(coeff[i] * r[i] for i in support) for r in rays]
        pos = [i for i, s in enumerate(vals) if s > 0]
        neg = [i for i, s in enumerate(vals) if s < 0]
        if not neg:
            for i, s in enumerate(vals):
                if s == 0:
                    tight[i] |= 1 << hid
            continue
        packed = _pack(tight, width)
        min_common = d - 2
        new_rays: list[tuple[int, ...]] = []
        pos_idx = np.array(pos, dtype=np.intp)
        t_pos = packed[pos_idx]
        for i in neg:
            common = t_pos & packed[i]
            pc = np.bitwise_count(common).sum(axis=1)
            for j in np.nonzero(pc >= min_common)[0]:
                cm = common[j]
                covers = ((packed & cm) == cm).all(axis=1)
                if int(covers.sum()) != 2:
                    continue
                ip = pos[int(j)]
                sp, sm = vals[ip], vals[i]
                rp, rm = rays[ip], rays[i]
                vec = tuple(sp * b - sm * a for a, b in zip(rp, rm))
                g = math.gcd(*vec)
                if g > 1:
                    vec = tuple(v // g for v in vec)
                new_rays.append(vec)
        kept_rays, kept_tight = [], []
        for i, s in enumerate(vals):
            if s > 0:
                kept_rays.append(rays[i])
                kept_tight.append(tight[i])
            elif s == 0:
                kept_rays.append(rays[i])
                kept_tight.append(tight[i] | (1 << hid))
        for vec in new_rays:
            kept_rays.append(vec)
            kept_tight.append(exact_tight(vec, hid + 1))
        rays, tight = kept_rays, kept_tight

    vertices = []
    for vec in rays:
        if vec[0] > 0:
            x0 = vec[0]
            vertices.append(tuple(mpq(v, x0) for v in vec[1:]))
    return vertices


def lp_vertex_minimum(n: int, masks) -> tuple[Rational, int]:
    """(min objective over all basic feasible solutions, vertex count)."""
    vertices = enumerate_lp_vertices(n, masks)
    best = min(sum(v, mpq(0)) for v in vertices)
    return best, len(vertices)
