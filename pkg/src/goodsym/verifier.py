"""SNP, goodness conditions and the good-implies-SNP-and-IDP check."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .partition import (BoxChain, Partition, check_chain, containment_interval, dominates,
                        sm_orbit, sort_decreasing, subchain)
from .polytope import IdpReport, LatticePolytope, idp_check, lattice_points
from .symfunc import SchurCombination, SparsePolynomial, brackets, expand_combination, expand_schur, support

Point = tuple[int, ...]


class ZeroPolynomialError(ValueError):
    """The polynomial (or the expansion of a combination) is identically zero."""


class TheoremViolation(RuntimeError):
    """A proven implication failed; this points at a bug, not at bad input."""


def _pts(points) -> list[list[int]]:
    return [list(p) for p in sorted(points)]


@dataclass(frozen=True)
class SnpReport:
    holds: bool
    missing_points: frozenset[Point] = frozenset()

    def to_json(self) -> dict:
        return {"holds": self.holds, "missing_points": _pts(self.missing_points)}


@dataclass(frozen=True)
class ConditionA:
    holds: bool
    degree: int | None = None
    missing_point: Point | None = None

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        return {"holds": self.holds, "failing_degree": self.degree,
                "missing_point": None if self.missing_point is None else list(self.missing_point)}


@dataclass(frozen=True)
class ConditionB:
    holds: bool
    chain: BoxChain | None = None
    reason: str = ""

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        return {"holds": self.holds,
                "chain": None if self.chain is None else [list(p) for p in self.chain],
                "reason": self.reason}


@dataclass(frozen=True)
class ConditionBPrime:
    holds: bool
    lower: Partition | None = None
    upper: Partition | None = None

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        return {"holds": self.holds,
                "lower": None if self.lower is None else list(self.lower),
                "upper": None if self.upper is None else list(self.upper)}


@dataclass(frozen=True)
class GoodnessReport:
    condition_a: ConditionA
    condition_a_prime: bool
    condition_b: ConditionB
    condition_b_prime: ConditionBPrime

    @property
    def good(self) -> bool:
        return self.condition_a.holds and self.condition_b.holds

    def to_json(self) -> dict:
        return {"good": self.good,
                "condition_a": self.condition_a.to_json(),
                "condition_a_prime": {"holds": self.condition_a_prime},
                "condition_b": self.condition_b.to_json(),
                "condition_b_prime": self.condition_b_prime.to_json()}


def newton_polytope(f: SparsePolynomial) -> LatticePolytope:
    if not f:
        raise ZeroPolynomialError("the zero polynomial has no Newton polytope")
    return LatticePolytope(f.m, tuple(support(f)))


def check_snp(f: SparsePolynomial) -> SnpReport:
    supp = support(f)
    newton = newton_polytope(f)
    missing = lattice_points(newton, known_inside=supp) - supp
    return SnpReport(not missing, frozenset(missing))


def check_condition_a(f: SchurCombination) -> ConditionA:
    """Each bracket's support must equal the union of the supports of its Schur terms."""
    for br in brackets(f):
        got = support(expand_combination(br.terms, f.m))
        union = set().union(*(support(expand_schur(t.partition, f.m)) for t in br.terms))
        missing = union - got
        if missing:
            return ConditionA(False, br.degree, min(missing))
    return ConditionA(True)


def check_condition_a_prime(f: SchurCombination) -> bool:
    for br in brackets(f):
        signs = {t.coeff > 0 for t in br.terms}
        if len(signs) > 1:
            return False
    return True


def bracket_maximum(parts: Sequence[Partition]) -> Partition | None:
    """The member dominating every other member, if there is one."""
    for cand in parts:
        if all(dominates(cand, other) for other in parts):
            return cand
    return None


def check_condition_b(f: SchurCombination) -> ConditionB:
    brs = brackets(f)
    if not brs:
        return ConditionB(False, None, "empty combination")
    maxima = []
    for br in brs:
        top = bracket_maximum(br.partitions)
        if top is None:
            return ConditionB(False, None, f"bracket of degree {br.degree} has no dominance maximum")
        maxima.append(top)
    alpha, beta = maxima[0], maxima[-1]
    res = check_chain(maxima, alpha, beta)
    if not res:
        return ConditionB(False, None, f"maxima do not form a northmost-row chain: {res.reason}")
    return ConditionB(True, BoxChain(tuple(maxima)))


def check_condition_b_prime(f: SchurCombination) -> ConditionBPrime:
    parts = f.partitions
    if not parts:
        return ConditionBPrime(False)
    lower = Partition(min(col) for col in zip(*parts))
    upper = Partition(max(col) for col in zip(*parts))
    if set(containment_interval(lower, upper)) == set(parts):
        return ConditionBPrime(True, lower, upper)
    return ConditionBPrime(False)


def check_good(f: SchurCombination) -> GoodnessReport:
    rep = GoodnessReport(check_condition_a(f), check_condition_a_prime(f),
                         check_condition_b(f), check_condition_b_prime(f))
    if rep.condition_a_prime and not rep.condition_a:
        raise TheoremViolation("same-sign brackets but condition (a) fails")
    if rep.condition_b_prime:
        chain = rep.condition_b.chain
        if chain is None or (chain.alpha, chain.beta) != (rep.condition_b_prime.lower,
                                                          rep.condition_b_prime.upper):
            raise TheoremViolation("interval support but condition (b) chain missing or mismatched")
    return rep


def rado_containment(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """Whether Newton(s_alpha) lies inside Newton(s_beta), decided by dominance."""
    return dominates(beta, alpha)


def schur_membership(p: Sequence[int], lam: Sequence[int]) -> bool:
    """Whether the integer point p lies in Newton(s_lam)."""
    if any(x < 0 for x in p):
        raise ValueError(f"negative entry in {tuple(p)}")
    if sum(p) != sum(lam):
        return False
    return dominates(lam, sort_decreasing(p))


def orbit_polytope(lam: Sequence[int]) -> LatticePolytope:
    return LatticePolytope(len(lam), tuple(sm_orbit(lam)))


def newton_of_combination(f: SchurCombination) -> LatticePolytope:
    """Newton polytope of a combination satisfying (b), built from orbits of the coarse subchain."""
    b = check_condition_b(f)
    if not b:
        raise ValueError(f"condition (b) fails: {b.reason}")
    gens = set()
    for lam in subchain(b.chain.alpha, b.chain.beta):
        gens |= sm_orbit(lam)
    return LatticePolytope(f.m, tuple(gens))


@dataclass
class TheoremReport:
    goodness: GoodnessReport
    snp: SnpReport
    idp: IdpReport
    violations: list[str] = field(default_factory=list)

    @property
    def good(self) -> bool:
        return self.goodness.good

    def raise_for_violation(self) -> None:
        if self.violations:
            raise TheoremViolation("; ".join(self.violations))

    def to_json(self) -> dict:
        out = self.goodness.to_json()
        out["snp"] = self.snp.to_json()
        out["idp"] = self.idp.to_json()
        out["violations"] = list(self.violations)
        return out


def verify_good_theorem(f: SchurCombination, t_max: int | None = None) -> TheoremReport:
    """Run the goodness checks, SNP and IDP; a good f failing SNP or IDP is recorded as a violation."""
    expansion = expand_combination(f)
    if not expansion:
        raise ZeroPolynomialError("combination expands to the zero polynomial")
    goodness = check_good(f)
    snp = check_snp(expansion)
    direct = newton_polytope(expansion)
    violations = []
    if goodness.good:
        newton = newton_of_combination(f)
        if newton.vertex_set != direct.vertex_set:
            violations.append(f"THEOREM-VIOLATION: subchain orbits {newton.vertex_set} "
                              f"differ from expansion vertices {direct.vertex_set}")
    else:
        newton = direct
    idp = idp_check(newton, t_max)
    if goodness.good:
        if not snp.holds:
            violations.append(f"THEOREM-VIOLATION: good combination misses lattice points "
                              f"{_pts(snp.missing_points)}")
        if not idp.holds:
            violations.append(f"THEOREM-VIOLATION: good combination fails IDP at {idp.witness}")
    return TheoremReport(goodness, snp, idp, violations)
