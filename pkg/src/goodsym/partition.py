"""Partitions with a fixed number of parts, dominance/containment orders and box chains."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import accumulate, permutations
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of nonnegative ints, zero-padded to the number of variables."""

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(int(x) for x in parts)
        if any(x < 0 for x in parts):
            raise ValueError(f"partition {parts} has a negative part")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition {parts} is not weakly decreasing")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return sum(1 for x in self if x)

    def pad(self, m: int) -> "Partition":
        if self.length > m:
            raise ValueError(f"{tuple(self)} has more than {m} nonzero parts")
        nz = tuple(x for x in self if x)
        return Partition(nz + (0,) * (m - len(nz)))

    def scale(self, t: int) -> "Partition":
        return Partition(t * x for x in self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


class Comparison(enum.Enum):
    EQUAL = "equal"
    LESS = "less"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def _same_length(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {tuple(a)} vs {tuple(b)}")


def dominance_compare(beta: Sequence[int], alpha: Sequence[int]) -> Comparison:
    """Compare two equal-size partitions in dominance order, from beta's point of view."""
    _same_length(beta, alpha)
    if sum(beta) != sum(alpha):
        raise ValueError(f"size mismatch: |{tuple(beta)}| != |{tuple(alpha)}|")
    ge = le = True
    for sb, sa in zip(accumulate(beta), accumulate(alpha)):
        ge &= sb >= sa
        le &= sb <= sa
    if ge and le:
        return Comparison.EQUAL
    if ge:
        return Comparison.GREATER
    if le:
        return Comparison.LESS
    return Comparison.INCOMPARABLE


def dominates(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    return dominance_compare(beta, alpha) in (Comparison.EQUAL, Comparison.GREATER)


def contains(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    """Componentwise order: beta_i >= alpha_i for every i."""
    _same_length(beta, alpha)
    return all(b >= a for b, a in zip(beta, alpha))


@dataclass(frozen=True)
class BoxChain:
    steps: tuple[Partition, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(Partition(s) for s in self.steps))

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    @property
    def alpha(self) -> Partition:
        return self.steps[0]

    @property
    def beta(self) -> Partition:
        return self.steps[-1]


def _require_contains(alpha: Sequence[int], beta: Sequence[int]) -> None:
    if not contains(beta, alpha):
        raise ValueError(f"{tuple(beta)} does not contain {tuple(alpha)}")


def next_box_row(current: Sequence[int], beta: Sequence[int]) -> int | None:
    """Northmost row where a box can be added staying a partition inside beta, or None."""
    for r in range(len(current)):
        if current[r] < beta[r] and (r == 0 or current[r] < current[r - 1]):
            return r
    return None


def generate_chain(alpha: Sequence[int], beta: Sequence[int]) -> BoxChain:
    alpha, beta = Partition(alpha), Partition(beta)
    _require_contains(alpha, beta)
    steps = [alpha]
    cur = list(alpha)
    while (r := next_box_row(cur, beta)) is not None:
        cur[r] += 1
        steps.append(Partition(cur))
    assert steps[-1] == beta
    return BoxChain(tuple(steps))


@dataclass(frozen=True)
class ChainCheck:
    ok: bool
    index: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_chain(chain: BoxChain | Sequence[Sequence[int]], alpha: Sequence[int],
                beta: Sequence[int]) -> ChainCheck:
    """Validate a chain step by step against the northmost-row box-addition rule.

    On failure ``index`` is the first offending position in the chain.
    """
    steps = [tuple(s) for s in chain]
    alpha, beta = tuple(alpha), tuple(beta)
    if not steps:
        return ChainCheck(False, 0, "empty chain")
    if any(len(s) != len(alpha) for s in steps) or len(alpha) != len(beta):
        return ChainCheck(False, 0, "length mismatch")
    if steps[0] != alpha:
        return ChainCheck(False, 0, f"chain starts at {steps[0]}, expected {alpha}")
    if not contains(beta, alpha):
        return ChainCheck(False, 0, f"{beta} does not contain {alpha}")
    for i in range(1, len(steps)):
        prev, cur = steps[i - 1], steps[i]
        if any(cur[k] < cur[k + 1] for k in range(len(cur) - 1)) or min(cur) < 0:
            return ChainCheck(False, i, f"{cur} is not a partition")
        if not (contains(cur, alpha) and cur != alpha and contains(beta, cur)):
            return ChainCheck(False, i, f"{cur} is not strictly above alpha and inside beta")
        r = next_box_row(prev, beta)
        if r is None:
            return ChainCheck(False, i, f"no box can be added to {prev}")
        expected = list(prev)
        expected[r] += 1
        if list(cur) != expected:
            return ChainCheck(False, i, f"{prev} -> {cur} does not add a box in northmost row {r + 1}")
    if steps[-1] != beta:
        return ChainCheck(False, len(steps) - 1, f"chain ends at {steps[-1]}, expected {beta}")
    return ChainCheck(True)


def subchain(alpha: Sequence[int], beta: Sequence[int]) -> list[Partition]:
    """Coarse chain alpha, (b1,a2,..), (b1,b2,a3,..), ..., beta; m+1 entries, repeats kept."""
    alpha, beta = Partition(alpha), Partition(beta)
    _require_contains(alpha, beta)
    m = len(alpha)
    out = [alpha]
    for i in range(1, m):
        out.append(Partition(beta[:i] + alpha[i:]))
    out.append(beta)
    return out


def sort_decreasing(p: Sequence[int]) -> Partition:
    if any(x < 0 for x in p):
        raise ValueError(f"negative entry in {tuple(p)}")
    return Partition(sorted(p, reverse=True))


def sm_orbit(lam: Sequence[int]) -> set[tuple[int, ...]]:
    """Distinct rearrangements of lam."""
    return set(permutations(tuple(lam)))


def partitions_of(n: int, m: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n with at most m parts, padded to length m, in reverse lex order."""
    if max_part is None:
        max_part = n

    def rec(rem, slots, cap):
        if slots == 0:
            if rem == 0:
                yield ()
            return
        for first in range(min(rem, cap), -1, -1):
            if first * slots < rem:
                break
            for tail in rec(rem - first, slots - 1, first):
                yield (first,) + tail

    for p in rec(n, m, max_part):
        yield Partition(p)


def containment_interval(lower: Sequence[int], upper: Sequence[int]) -> list[Partition]:
    """Partitions mu with lower <= mu <= upper componentwise."""
    lower, upper = tuple(lower), tuple(upper)
    _same_length(lower, upper)
    out: list[Partition] = []

    def rec(prefix):
        i = len(prefix)
        if i == len(lower):
            out.append(Partition(prefix))
            return
        hi = upper[i] if i == 0 else min(upper[i], prefix[-1])
        for v in range(lower[i], hi + 1):
            rec(prefix + (v,))

    rec(())
    return out
