"""End-to-end acceptance criteria; one PASS/FAIL line per criterion is printed in the terminal summary."""
import functools
import random
from collections import Counter

from goodsym.families import dual_grothendieck, example_g2_310, random_good_combination
from goodsym.partition import Partition, containment_interval, dominates, sm_orbit, subchain
from goodsym.polytope import (LatticePolytope, contains_point, idp_check, lattice_points,
                              minkowski_power_points, vertices)
from goodsym.symfunc import SchurCombination, expand_combination, expand_schur, support
from goodsym.verifier import (check_good, check_snp, newton_of_combination, newton_polytope,
                              verify_good_theorem)

from conftest import G_POINTS, P_POINTS, S310I_CHAIN, all_partitions, orbit_hull

RESULTS: dict[int, tuple[str, bool]] = {}


def criterion(number, title):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*a, **kw):
            RESULTS[number] = (title, False)
            fn(*a, **kw)
            RESULTS[number] = (title, True)
        return wrapper
    return deco


def combo(*terms, m=3):
    return SchurCombination(m, terms)


@criterion(1, "s_(3,1,0) in three variables is the 12-term polynomial")
def test_c01_schur_expansion():
    expected = {p: 1 for p in sm_orbit((3, 1, 0))}
    expected.update({p: 1 for p in sm_orbit((2, 2, 0))})
    expected.update({p: 2 for p in sm_orbit((2, 1, 1))})
    f = expand_schur((3, 1, 0), 3)
    assert dict(f) == expected and len(expected) == 12


@criterion(2, "P has the 12 listed lattice points and 6 vertices")
def test_c02_lattice_points_of_P():
    p = LatticePolytope.from_points(P_POINTS)
    assert lattice_points(p) == set(P_POINTS)
    assert vertices(p) == sm_orbit((3, 1, 0)) and len(vertices(p)) == 6


@criterion(3, "P is IDP for t = 2, 3 and (9,2,1) is a sum of three lattice points")
def test_c03_idp_of_P():
    p = LatticePolytope.from_points(P_POINTS)
    rep = idp_check(p, 3)
    assert rep.holds and rep.checked == (2, 3)
    assert (9, 2, 1) in minkowski_power_points(lattice_points(p), 3)
    assert (9, 2, 1) in lattice_points(LatticePolytope.from_points([tuple(3 * x for x in q) for q in P_POINTS]))


@criterion(4, "G fails IDP at t = 2 with witness (1,1,1)")
def test_c04_G_not_idp():
    rep = idp_check(LatticePolytope.from_points(G_POINTS), 2)
    assert not rep.holds and rep.witness == (2, (1, 1, 1))


@criterion(5, "worked example is good with the expected chain; SNP and IDP (t <= 3) hold")
def test_c05_worked_example():
    f = example_g2_310()
    rep = check_good(f)
    assert rep.good
    assert [tuple(x) for x in rep.condition_b.chain] == S310I_CHAIN
    poly = expand_combination(f)
    assert check_snp(poly).holds
    assert idp_check(newton_polytope(poly), 3).holds


@criterion(6, "s_310 - s_220 fails SNP at (2,2,0), same Newton polytope as s_310, which is IDP")
def test_c06_difference():
    poly = expand_combination(combo((1, (3, 1, 0)), (-1, (2, 2, 0))))
    rep = check_snp(poly)
    assert not rep.holds and (2, 2, 0) in rep.missing_points
    newt, ref = newton_polytope(poly), newton_polytope(expand_schur((3, 1, 0), 3))
    assert vertices(newt) == vertices(ref) and lattice_points(newt) == lattice_points(ref)
    assert all(contains_point(newt, q) == contains_point(ref, q)
               for q in lattice_points(LatticePolytope.from_points([(0, 0, 0), (4, 0, 0), (0, 4, 0), (0, 0, 4)])))
    assert idp_check(newt, 3).holds


@criterion(7, "SNP holds on s_310+s_311+s_321 and fails at (6,5,2) on the six-term sum")
def test_c07_snp_sums():
    good = expand_combination(combo((1, (3, 1, 0)), (1, (3, 1, 1)), (1, (3, 2, 1))))
    assert check_snp(good).holds
    six = [(6, 4, 0), (6, 4, 1), (6, 4, 2), (6, 4, 3), (6, 5, 3), (6, 6, 3)]
    bad = check_snp(expand_combination(combo(*[(1, lam) for lam in six])))
    assert not bad.holds and (6, 5, 2) in bad.missing_points


@criterion(8, "dominance agrees with Newton polytope containment (size <= 8, m <= 4)")
def test_c08_rado_sweep():
    discrepancies, pairs = [], 0
    for m in range(1, 5):
        for n in range(9):
            parts = [lam for mm, lam in all_partitions(n, m) if mm == m and lam.size == n]
            hulls = {lam: orbit_hull(lam) for lam in parts}
            for a in parts:
                for b in parts:
                    pairs += 1
                    hull = all(contains_point(hulls[b], q) for q in sm_orbit(a))
                    if hull != dominates(b, a):
                        discrepancies.append((a, b))
    assert pairs > 800 and discrepancies == []


@criterion(9, "support of s_lambda equals the lattice points of the orbit hull (|lambda| <= 8, m <= 4)")
def test_c09_orbit_saturation():
    bad = [lam for m, lam in all_partitions(8, 4)
           if support(expand_schur(lam, m)) != lattice_points(orbit_hull(lam))]
    assert bad == []


@criterion(10, "200 random good combinations pass the theorem check with t_max = 3")
def test_c10_random_good_combinations():
    rng = random.Random(20261015)
    failures = []
    for i in range(200):
        f = random_good_combination(rng, m=3, max_size=9)
        rep = verify_good_theorem(f, 3)
        if not rep.good or rep.violations:
            failures.append((i, f.to_json(), rep.violations))
    assert failures == []


@criterion(11, "dual Grothendieck supports are intervals and good; g_22, g_31 are SNP and IDP")
def test_c11_dual_grothendieck():
    for m, lam in all_partitions(8, 4):
        g = dual_grothendieck(lam, m)
        low = Partition((lam[0],) + (0,) * (m - 1)) if m else lam
        assert set(g.partitions) == set(containment_interval(low, lam)), lam
        assert check_good(g).good, lam
    for lam in [(2, 2), (3, 1)]:
        for m in (2, 3):
            g = dual_grothendieck(lam, m)
            poly = expand_combination(g)
            assert check_snp(poly).holds
            assert idp_check(newton_polytope(poly), 3).holds


@criterion(12, "subchain of (3,1,0) < (3,3,3) and Newton polytope from its orbits")
def test_c12_subchain_newton():
    assert [tuple(x) for x in subchain((3, 1, 0), (3, 3, 3))] == [(3, 1, 0), (3, 1, 0), (3, 3, 0), (3, 3, 3)]
    newt = newton_of_combination(example_g2_310())
    orbits = sm_orbit((3, 1, 0)) | sm_orbit((3, 3, 0)) | sm_orbit((3, 3, 3))
    assert vertices(newt) == orbits
    assert vertices(newton_polytope(expand_combination(example_g2_310()))) == orbits
    assert Counter(map(sum, orbits)) == Counter({4: 6, 6: 3, 9: 1})
