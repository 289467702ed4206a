"""Sparse integer polynomials and linear combinations of Schur polynomials."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby
from typing import Iterable, Iterator, Mapping, Sequence

from .partition import Partition, sm_orbit
from .tableaux import content_of, enumerate_ssyt

Exponent = tuple[int, ...]


class SparsePolynomial:
    """Polynomial in m variables stored as {exponent vector: nonzero int}."""

    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = ()):
        self.m = m
        acc: dict[Exponent, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != m:
                raise ValueError(f"exponent {exp} does not have length {m}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            acc[exp] = acc.get(exp, 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def __getitem__(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.m == other.m and self._terms == other._terms

    def __hash__(self):
        return hash((self.m, tuple(self._terms.items())))

    def _check(self, other: "SparsePolynomial") -> None:
        if self.m != other.m:
            raise ValueError(f"variable count mismatch: {self.m} vs {other.m}")

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check(other)
        return SparsePolynomial(self.m, list(self) + list(other))

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-1) * other

    def __rmul__(self, c: int) -> "SparsePolynomial":
        return SparsePolynomial(self.m, [(e, c * v) for e, v in self])

    def __repr__(self) -> str:
        if not self._terms:
            return f"SparsePolynomial(m={self.m}, 0)"
        body = " + ".join(f"{c}*x^{e}" for e, c in self)
        return f"SparsePolynomial(m={self.m}, {body})"

    @classmethod
    def constant(cls, c: int, m: int) -> "SparsePolynomial":
        return cls(m, {(0,) * m: c})

    def to_json(self) -> list[dict]:
        return [{"exponent": list(e), "coeff": str(c)} for e, c in self]

    @classmethod
    def from_json(cls, data: list[dict], m: int | None = None) -> "SparsePolynomial":
        if m is None:
            if not data:
                raise ValueError("cannot infer m from an empty term list")
            m = len(data[0]["exponent"])
        return cls(m, [(d["exponent"], int(d["coeff"])) for d in data])


@dataclass(frozen=True)
class SchurTerm:
    coeff: int
    partition: Partition


class SchurCombination:
    """Sum of C_mu * s_mu(x_1..x_m) with distinct partitions and nonzero integer C_mu."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Iterable[tuple[int, Sequence[int]]] = ()):
        self.m = m
        acc: dict[Partition, int] = {}
        for c, lam in terms:
            lam = Partition(lam)
            if len(lam) != m:
                lam = lam.pad(m)
            acc[lam] = acc.get(lam, 0) + int(c)
        ordered = sorted(acc.items(), key=lambda kv: (kv[0].size, tuple(-x for x in kv[0])))
        self.terms: tuple[SchurTerm, ...] = tuple(SchurTerm(c, lam) for lam, c in ordered if c)

    def __iter__(self) -> Iterator[SchurTerm]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurCombination):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __repr__(self) -> str:
        body = " + ".join(f"{t.coeff}*s{tuple(t.partition)}" for t in self.terms) or "0"
        return f"SchurCombination(m={self.m}, {body})"

    def coefficient(self, lam: Sequence[int]) -> int:
        lam = tuple(lam)
        return next((t.coeff for t in self.terms if t.partition == lam), 0)

    @property
    def partitions(self) -> list[Partition]:
        return [t.partition for t in self.terms]

    def to_json(self) -> dict:
        return {"m": self.m,
                "terms": [{"coeff": str(t.coeff), "partition": list(t.partition)} for t in self.terms]}

    @classmethod
    def from_json(cls, data: dict) -> "SchurCombination":
        return cls(int(data["m"]), [(int(t["coeff"]), t["partition"]) for t in data["terms"]])


@dataclass(frozen=True)
class Bracket:
    degree: int
    terms: tuple[SchurTerm, ...]

    @property
    def partitions(self) -> list[Partition]:
        return [t.partition for t in self.terms]


@lru_cache(maxsize=None)
def _schur_terms(lam: tuple[int, ...], m: int) -> tuple[tuple[Exponent, int], ...]:
    counts = Counter(content_of(t, m) for t in enumerate_ssyt(lam, m))
    return tuple(sorted(counts.items()))


def expand_schur(lam: Sequence[int], m: int) -> SparsePolynomial:
    """s_lam(x_1..x_m) as a sum of x^T over semistandard tableaux T."""
    lam = Partition(lam)
    if lam.length > m:
        return SparsePolynomial(m)
    lam = lam.pad(m)
    return SparsePolynomial(m, _schur_terms(tuple(lam), m))


def expand_combination(f: SchurCombination | Iterable[SchurTerm], m: int | None = None) -> SparsePolynomial:
    if m is None:
        m = f.m
    acc: dict[Exponent, int] = {}
    for t in f:
        for e, c in _schur_terms(tuple(t.partition), m):
            acc[e] = acc.get(e, 0) + t.coeff * c
    return SparsePolynomial(m, acc)


def support(f: SparsePolynomial) -> set[Exponent]:
    return {e for e, _ in f}


def brackets(f: SchurCombination) -> list[Bracket]:
    """Group terms by |mu|, ascending degree."""
    out = []
    for deg, grp in groupby(sorted(f.terms, key=lambda t: t.partition.size), key=lambda t: t.partition.size):
        out.append(Bracket(deg, tuple(grp)))
    return out


def is_symmetric(f: SparsePolynomial) -> bool:
    for e, c in f:
        for p in sm_orbit(e):
            if f[p] != c:
                return False
    return True


def to_schur_basis(f: SparsePolynomial) -> SchurCombination:
    """Invert the Kostka expansion by peeling off lex-largest (hence dominance-maximal) partitions."""
    if not is_symmetric(f):
        raise ValueError("polynomial is not symmetric")
    m = f.m
    rest = f
    terms = []
    while rest:
        lead = max(e for e, _ in rest if all(e[i] >= e[i + 1] for i in range(m - 1)))
        c = rest[lead]
        terms.append((c, lead))
        rest = rest - c * expand_schur(lead, m)
    return SchurCombination(m, terms)
