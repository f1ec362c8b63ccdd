"""Exact convex hull volume for small lattice point sets (beneath-beyond).

Points are integer tuples; all arithmetic is on Python ints and Fractions.
The hull is grown one point at a time; every simplex conv(p, F) for a facet
F strictly visible from the new point p is added to the volume.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

MAX_DIM = 4


class DimensionCapError(ValueError):
    pass


def _det(rows: list[list]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * _det(minor)
    return total


def _sub(p, q):
    return [a - b for a, b in zip(p, q)]


def _rank(vectors: list[list]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _normal(points: Sequence[Sequence[int]]) -> list[int]:
    """Normal vector of the hyperplane through d points in dimension d."""
    base = points[0]
    diffs = [_sub(p, base) for p in points[1:]]
    d = len(base)
    normal = []
    for j in range(d):
        minor = [row[:j] + row[j + 1 :] for row in diffs]
        normal.append((-1) ** j * _det(minor))
    return normal


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


class _Facet:
    __slots__ = ("verts", "normal", "offset")

    def __init__(self, verts: tuple, pts: list, interior2: list, scale: int):
        self.verts = verts
        n = _normal([pts[v] for v in verts])
        off = _dot(n, pts[verts[0]])
        # interior point is stored scaled by `scale`; orient it to the negative side
        if _dot(n, interior2) > off * scale:
            n = [-x for x in n]
            off = -off
        self.normal = n
        self.offset = off

    def visible(self, p) -> bool:
        return _dot(self.normal, p) > self.offset


def hull_volume_and_vertices(points: Iterable[Sequence[int]]) -> tuple[Fraction, list[tuple]]:
    """Euclidean volume of conv(points) and a superset of its vertices.

    Lower-dimensional hulls have volume 0; in that case every input point is
    returned as a potential vertex.
    """
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise ValueError("empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points of mixed dimension")
    if d > MAX_DIM:
        raise DimensionCapError(f"volume computation is capped at dimension {MAX_DIM}, got {d}")
    if d == 1:
        lo, hi = pts[0][0], pts[-1][0]
        return Fraction(hi - lo), [pts[0], pts[-1]] if hi != lo else [pts[0]]
    # far points first: they are likely vertices, so fewer boundary points get inserted
    total = [sum(p[k] for p in pts) for k in range(d)]
    npts = len(pts)
    pts.sort(key=lambda p: (-sum((npts * x - c) ** 2 for x, c in zip(p, total)), p))
    # greedy affinely independent start simplex
    simplex = [0]
    for i in range(1, len(pts)):
        cand = simplex + [i]
        if _rank([_sub(pts[j], pts[cand[0]]) for j in cand[1:]]) == len(cand) - 1:
            simplex = cand
            if len(simplex) == d + 1:
                break
    if len(simplex) < d + 1:
        return Fraction(0), pts
    scale = d + 1
    interior = [sum(pts[i][k] for i in simplex) for k in range(d)]  # centroid * scale
    vol6 = abs(_det([_sub(pts[i], pts[simplex[0]]) for i in simplex[1:]]))
    facets = [_Facet(tuple(sorted(f)), pts, interior, scale) for f in combinations(simplex, d)]
    in_simplex = set(simplex)
    for idx, p in enumerate(pts):
        if idx in in_simplex:
            continue
        visible = [f for f in facets if f.visible(p)]
        if not visible:
            continue
        ridge_count: dict[tuple, int] = {}
        for f in visible:
            vol6 += abs(_det([_sub(pts[v], p) for v in f.verts]))
            for ridge in combinations(f.verts, d - 1):
                ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
        vis_ids = {id(f) for f in visible}
        facets = [f for f in facets if id(f) not in vis_ids]
        for ridge, cnt in ridge_count.items():
            if cnt == 1:
                facets.append(_Facet(tuple(sorted(ridge + (idx,))), pts, interior, scale))
    verts = sorted({v for f in facets for v in f.verts})
    return Fraction(vol6, factorial(d)), [pts[v] for v in verts]


def hull_volume(points: Iterable[Sequence[int]]) -> Fraction:
    return hull_volume_and_vertices(points)[0]


def minkowski_sum(a: Iterable[Sequence[int]], b: Iterable[Sequence[int]]) -> set[tuple]:
    return {tuple(x + y for x, y in zip(p, q)) for p in a for q in b}
