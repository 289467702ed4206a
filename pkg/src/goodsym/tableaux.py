"""Semistandard Young tableaux: enumeration, contents, Kostka numbers, row-bounded skew counts."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .partition import Partition, contains


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        # trailing empty rows carry no information
        while rows and not rows[-1]:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        ncols = len(self.rows[0]) if self.rows else 0
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(ncols)]

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> "Tableau":
        height = max((len(c) for c in cols), default=0)
        return cls(tuple(tuple(c[i] for c in cols if len(c) > i) for i in range(height)))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def is_ssyt(t: Tableau, m: int | None = None) -> bool:
    shape = t.shape
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        return False
    for r, row in enumerate(t.rows):
        for j, x in enumerate(row):
            if x < 1 or (m is not None and x > m):
                return False
            if j and row[j - 1] > x:
                return False
            if r and t.rows[r - 1][j] >= x:
                return False
    return True


def enumerate_ssyt(shape: Sequence[int], m: int,
                   content: Sequence[int] | None = None) -> Iterator[Tableau]:
    """Yield SSYT of ``shape`` with entries in 1..m, lexicographic in the row-reading word.

    If ``content`` is given only tableaux with that content are produced
    (used to count Kostka numbers without materializing every tableau).
    """
    shape = tuple(x for x in shape if x)
    if len(shape) > m:
        return
    cells = [(r, j) for r, n in enumerate(shape) for j in range(n)]
    col_len = [sum(1 for n in shape if n > j) for j in range(shape[0] if shape else 0)]
    grid = [[0] * n for n in shape]
    remaining = list(content) + [0] * (m - len(content)) if content is not None else None
    if remaining is not None and sum(remaining) != len(cells):
        return

    def rec(k):
        if k == len(cells):
            yield Tableau(tuple(tuple(row) for row in grid))
            return
        r, j = cells[k]
        lo = 1
        if j:
            lo = grid[r][j - 1]
        if r:
            lo = max(lo, grid[r - 1][j] + 1)
        hi = m - (col_len[j] - r - 1)
        for v in range(lo, hi + 1):
            if remaining is not None:
                if not remaining[v - 1]:
                    continue
                remaining[v - 1] -= 1
            grid[r][j] = v
            yield from rec(k + 1)
            if remaining is not None:
                remaining[v - 1] += 1
        grid[r][j] = 0

    yield from rec(0)


def content_of(t: Tableau, m: int) -> tuple[int, ...]:
    counts = [0] * m
    for row in t.rows:
        for x in row:
            if not 1 <= x <= m:
                raise ValueError(f"entry {x} outside 1..{m}")
            counts[x - 1] += 1
    return tuple(counts)


def kostka(shape: Sequence[int], content: Sequence[int]) -> int:
    if sum(shape) != sum(content):
        raise ValueError(f"size mismatch: |{tuple(shape)}| != sum{tuple(content)}")
    return sum(1 for _ in enumerate_ssyt(shape, len(content), content))


def _skew_row_bounded(lam: Sequence[int], mu: Sequence[int]) -> Iterator[list[list[int | None]]]:
    n = max(len(lam), len(mu))
    lam = list(lam) + [0] * (n - len(lam))
    mu = list(mu) + [0] * (n - len(mu))
    grid: list[list[int | None]] = [[None] * lam[r] for r in range(n)]
    cells = [(r, j) for r in range(n) for j in range(mu[r], lam[r])]

    def rec(k):
        if k == len(cells):
            yield grid
            return
        r, j = cells[k]
        lo, hi = 1, r  # row r+1 (1-based) draws from [1, r]
        if j > mu[r]:
            lo = grid[r][j - 1]
        if r and mu[r - 1] <= j < lam[r - 1]:
            lo = max(lo, grid[r - 1][j] + 1)
        for v in range(lo, hi + 1):
            grid[r][j] = v
            yield from rec(k + 1)
        grid[r][j] = None

    yield from rec(0)


def skew_row_bounded_count(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of SSYT of skew shape lam/mu whose row-i entries lie in [1, i-1]."""
    if len(lam) != len(mu):
        n = max(len(lam), len(mu))
        lam = tuple(lam) + (0,) * (n - len(lam))
        mu = tuple(mu) + (0,) * (n - len(mu))
    if not contains(lam, mu):
        return 0
    return sum(1 for _ in _skew_row_bounded(lam, mu))


def column_split(t: Tableau, t_parts: int) -> list[Tableau]:
    """Split t into t_parts tableaux; the j-th takes the columns j' with j' = j (mod t_parts).

    Columns are 1-indexed, so part 1 gets columns 1, t+1, 2t+1, ...
    """
    if t_parts < 1:
        raise ValueError("t_parts must be >= 1")
    cols = t.columns()
    return [Tableau.from_columns(cols[j::t_parts]) for j in range(t_parts)]


def shape_partition(t: Tableau, m: int) -> Partition:
    return Partition(t.shape + (0,) * (m - len(t.shape)))
