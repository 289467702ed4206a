"""Concrete Schur combinations: dual Grothendieck polynomials, chain sums, a fixed worked example."""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Sequence

from .partition import Partition, containment_interval, dominates, generate_chain, partitions_of
from .symfunc import SchurCombination
from .tableaux import skew_row_bounded_count


def dual_grothendieck(lam: Sequence[int], m: int) -> SchurCombination:
    """g_lam = sum over mu of f_lam^mu s_mu, truncated to partitions with at most m parts."""
    lam = Partition(lam).pad(m)
    terms = []
    # f_lam^mu can only be nonzero for mu inside lam
    for mu in containment_interval((0,) * m, lam):
        c = skew_row_bounded_count(lam, mu)
        if c:
            terms.append((c, mu))
    return SchurCombination(m, terms)


def chain_sum(alpha: Sequence[int], beta: Sequence[int]) -> SchurCombination:
    chain = generate_chain(alpha, beta)
    return SchurCombination(len(chain.alpha), [(1, lam) for lam in chain])


def alternating_chain_sum(alpha: Sequence[int], beta: Sequence[int]) -> SchurCombination:
    chain = generate_chain(alpha, beta)
    return SchurCombination(len(chain.alpha), [((-1) ** i, lam) for i, lam in enumerate(chain)])


# s_{310} - (3 s_{320} + 6 s_{311}) + (3 s_{330} + 18 s_{321}) - (18 s_{331} + 4 s_{322})
#   + 44 s_{332} - 55 s_{333}, the inflated Grothendieck polynomial G_{2,(3,1,0)}
_G2_310 = [
    (1, (3, 1, 0)),
    (-3, (3, 2, 0)), (-6, (3, 1, 1)),
    (3, (3, 3, 0)), (18, (3, 2, 1)),
    (-18, (3, 3, 1)), (-4, (3, 2, 2)),
    (44, (3, 3, 2)),
    (-55, (3, 3, 3)),
]


def example_g2_310() -> SchurCombination:
    return SchurCombination(3, _G2_310)


class FamilyKind(str, enum.Enum):
    DUAL_GROTHENDIECK = "dual_grothendieck"
    CHAIN_SUM = "chain_sum"
    ALTERNATING_CHAIN_SUM = "alternating_chain_sum"
    EXAMPLE_G2_310 = "example_g2_310"


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    m: int | None = None
    partition: tuple[int, ...] | None = None
    alpha: tuple[int, ...] | None = None
    beta: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", FamilyKind(self.kind))
        if self.kind is FamilyKind.DUAL_GROTHENDIECK:
            if self.partition is None:
                raise ValueError("dual_grothendieck needs a partition")
            m = self.m if self.m is not None else len(self.partition)
            if Partition(self.partition).length > m:
                raise ValueError(f"partition {self.partition} has more than {m} parts")
        elif self.kind in (FamilyKind.CHAIN_SUM, FamilyKind.ALTERNATING_CHAIN_SUM):
            if self.alpha is None or self.beta is None:
                raise ValueError(f"{self.kind.value} needs alpha and beta")
            if len(self.alpha) != len(self.beta):
                raise ValueError("alpha and beta must have the same length")

    def build(self) -> SchurCombination:
        if self.kind is FamilyKind.DUAL_GROTHENDIECK:
            m = self.m if self.m is not None else len(self.partition)
            return dual_grothendieck(self.partition, m)
        if self.kind is FamilyKind.CHAIN_SUM:
            return chain_sum(self.alpha, self.beta)
        if self.kind is FamilyKind.ALTERNATING_CHAIN_SUM:
            return alternating_chain_sum(self.alpha, self.beta)
        return example_g2_310()

    def to_json(self) -> dict:
        out = {"kind": self.kind.value}
        for k in ("m", "partition", "alpha", "beta"):
            v = getattr(self, k)
            if v is not None:
                out[k] = list(v) if isinstance(v, tuple) else v
        return out

    @classmethod
    def from_json(cls, data: dict) -> "FamilySpec":
        tup = lambda v: None if v is None else tuple(int(x) for x in v)  # noqa: E731
        return cls(data["kind"], data.get("m"), tup(data.get("partition")),
                   tup(data.get("alpha")), tup(data.get("beta")))


def random_good_combination(rng: random.Random, m: int = 3, max_size: int = 9,
                            max_coeff: int = 9, extra_terms: bool = True) -> SchurCombination:
    """Random good combination: a northmost-row chain from a random alpha <= beta with
    positive coefficients, optionally padded with dominated partitions in each bracket."""
    size = rng.randint(0, max_size)
    beta = rng.choice(list(partitions_of(size, m)))
    alpha = rng.choice(containment_interval((0,) * m, beta))
    terms = []
    for lam in generate_chain(alpha, beta):
        terms.append((rng.randint(1, max_coeff), lam))
        if extra_terms:
            below = [mu for mu in partitions_of(lam.size, m) if mu != lam and dominates(lam, mu)]
            for mu in rng.sample(below, rng.randint(0, min(2, len(below)))):
                terms.append((rng.randint(1, max_coeff), mu))
    return SchurCombination(m, terms)


def random_combination(rng: random.Random, m: int = 3, max_size: int = 6,
                       max_terms: int = 4, max_coeff: int = 5) -> SchurCombination:
    """Random combination with signed coefficients; not necessarily good, possibly zero."""
    pool = [lam for s in range(max_size + 1) for lam in partitions_of(s, m)]
    k = rng.randint(1, min(max_terms, len(pool)))
    terms = [(rng.choice([-1, 1]) * rng.randint(1, max_coeff), lam) for lam in rng.sample(pool, k)]
    return SchurCombination(m, terms)
