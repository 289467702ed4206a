"""Lattice polytopes given by generators, with exact membership and brute-force IDP checks."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .exact import convex_combination, rank

Point = tuple[int, ...]


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of finitely many integer points in Z^m."""

    m: int
    generators: tuple[Point, ...]

    def __post_init__(self):
        gens = tuple(sorted({tuple(int(x) for x in g) for g in self.generators}))
        if not gens:
            raise ValueError("a polytope needs at least one generator")
        if any(len(g) != self.m for g in gens):
            raise ValueError(f"all generators must have length {self.m}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_points(cls, points: Iterable[Sequence[int]]) -> "LatticePolytope":
        pts = [tuple(p) for p in points]
        if not pts:
            raise ValueError("a polytope needs at least one generator")
        return cls(len(pts[0]), tuple(pts))

    @cached_property
    def vertex_set(self) -> tuple[Point, ...]:
        gens = self.generators
        if len(gens) <= 2:
            return gens
        # unique maximizers of a linear functional are vertices; use them to discard
        # most generators with small LPs before falling back to the full test
        seeds = set()
        for d in _directions(self.m):
            vals = [sum(a * b for a, b in zip(d, g)) for g in gens]
            top = max(vals)
            if vals.count(top) == 1:
                seeds.add(gens[vals.index(top)])
        found = sorted(seeds)
        m = self.m
        centroid = [sum(g[i] for g in gens) / len(gens) for i in range(m)]
        # far-from-centroid first, so vertices tend to be found before the points they cover
        rest = sorted((g for g in gens if g not in seeds),
                      key=lambda g: (-sum((g[i] - centroid[i]) ** 2 for i in range(m)), g))
        for v in rest:
            if convex_combination(found, v) is not None:
                continue
            if convex_combination([g for g in gens if g != v], v) is None:
                found.append(v)
        return tuple(sorted(found))

    @cached_property
    def _linear_bounds(self) -> list[tuple[tuple[int, ...], int, int]]:
        # (subset, min, max) of the coordinate sum over each nonempty subset; necessary conditions only
        out = []
        for size in range(1, self.m + 1):
            for idx in combinations(range(self.m), size):
                vals = [sum(g[i] for i in idx) for g in self.generators]
                out.append((idx, min(vals), max(vals)))
        return out

    def to_json(self) -> dict:
        return {"m": self.m, "generators": [list(g) for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> "LatticePolytope":
        return cls(int(data["m"]), tuple(tuple(g) for g in data["generators"]))


@lru_cache(maxsize=None)
def _directions(m: int) -> tuple[tuple[int, ...], ...]:
    dirs = set()
    for size in range(1, m + 1):
        for idx in combinations(range(m), size):
            d = tuple(int(i in idx) for i in range(m))
            dirs.add(d)
            dirs.add(tuple(-x for x in d))
    rng = random.Random(m)
    for _ in range(8 * m):
        dirs.add(tuple(rng.randint(-97, 97) for _ in range(m)))
    return tuple(sorted(dirs))


@dataclass(frozen=True)
class IdpReport:
    holds: bool
    checked_t_max: int
    witness: tuple[int, Point] | None = None
    checked: tuple[int, ...] = field(default=())

    def __post_init__(self):
        assert (self.witness is None) == self.holds

    def to_json(self) -> dict:
        w = None if self.witness is None else {"t": self.witness[0], "point": list(self.witness[1])}
        return {"holds": self.holds, "checked_t_max": self.checked_t_max, "witness": w}


def _check_dim(p: LatticePolytope, q: Sequence) -> None:
    if len(q) != p.m:
        raise ValueError(f"point {tuple(q)} has dimension {len(q)}, polytope has {p.m}")


def contains_point(p: LatticePolytope, q: Sequence[int | Fraction]) -> bool:
    """Exact test that q is a convex combination of the generators."""
    _check_dim(p, q)
    if tuple(q) in p.generators:
        return True
    return convex_combination(p.vertex_set, q) is not None


def vertices(p: LatticePolytope) -> set[Point]:
    return set(p.vertex_set)


def _candidates(p: LatticePolytope) -> Iterator[Point]:
    # bounding box scan pruned by the coordinate-sum range
    m = p.m
    gens = p.generators
    lo = [min(g[i] for g in gens) for i in range(m)]
    hi = [max(g[i] for g in gens) for i in range(m)]
    sums = [sum(g) for g in gens]
    smin, smax = min(sums), max(sums)
    rest_lo = [sum(lo[i:]) for i in range(m + 1)]
    rest_hi = [sum(hi[i:]) for i in range(m + 1)]
    bounds = p._linear_bounds
    cur = [0] * m

    def rec(i, s):
        if i == m:
            pt = tuple(cur)
            if all(bmin <= sum(pt[j] for j in idx) <= bmax for idx, bmin, bmax in bounds):
                yield pt
            return
        for v in range(lo[i], hi[i] + 1):
            ns = s + v
            if ns + rest_lo[i + 1] > smax:
                break
            if ns + rest_hi[i + 1] < smin:
                continue
            cur[i] = v
            yield from rec(i + 1, ns)

    yield from rec(0, 0)


def lattice_points(p: LatticePolytope, known_inside: Iterable[Point] = ()) -> set[Point]:
    """All integer points of the hull.

    ``known_inside`` may list points already known to lie in the hull (for
    instance sums of lattice points of a smaller dilate); they skip the LP.
    """
    known = set(known_inside) | set(p.generators)
    verts = p.vertex_set
    out = set()
    for q in _candidates(p):
        if q in known or convex_combination(verts, q) is not None:
            out.add(q)
    return out


def dilate(p: LatticePolytope, t: int) -> LatticePolytope:
    if t < 1:
        raise ValueError("dilation factor must be >= 1")
    return LatticePolytope(p.m, tuple(tuple(t * x for x in g) for g in p.generators))


def sumset(a: Iterable[Point], b: Iterable[Point]) -> set[Point]:
    b = list(b)
    return {tuple(x + y for x, y in zip(u, v)) for u in a for v in b}


def minkowski_power_points(points: Iterable[Sequence[int]], t: int) -> set[Point]:
    """All sums of t points drawn (with repetition) from ``points``."""
    if t < 1:
        raise ValueError("t must be >= 1")
    base = {tuple(p) for p in points}
    acc = set(base)
    for _ in range(t - 1):
        acc = sumset(acc, base)
    return acc


def dimension(p: LatticePolytope) -> int:
    g0 = p.generators[0]
    return rank([[x - y for x, y in zip(g, g0)] for g in p.generators[1:]])


def default_t_max(p: LatticePolytope) -> int:
    return max(2, dimension(p) - 1)


def idp_check(p: LatticePolytope, t_max: int | None = None) -> IdpReport:
    """Check tP ∩ Z^m == (P ∩ Z^m)^{+t} for t = 2..t_max, stopping at the first failure."""
    if t_max is None:
        t_max = default_t_max(p)
    if t_max < 2:
        raise ValueError("t_max must be >= 2")
    base = lattice_points(p)
    acc = set(base)
    checked = []
    for t in range(2, t_max + 1):
        acc = sumset(acc, base)
        # vertices of tP are t times those of P
        tp = dilate(LatticePolytope(p.m, p.vertex_set), t)
        verts = tp.generators
        for q in _candidates(tp):
            if q not in acc and convex_combination(verts, q) is not None:
                return IdpReport(False, t, (t, q), tuple(checked))
        checked.append(t)
    return IdpReport(True, t_max, None, tuple(checked))
