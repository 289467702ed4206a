"""Recompute the worked examples and print each verdict next to its expected value."""
from goodsym import families, partition, polytope, symfunc, verifier

P = [(3, 1, 0), (3, 0, 1), (1, 0, 3), (0, 1, 3), (0, 3, 1), (1, 3, 0),
     (2, 2, 0), (2, 0, 2), (0, 2, 2), (2, 1, 1), (1, 1, 2), (1, 2, 1)]
G = [(0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 2, 1)]


def row(label, got, expected):
    mark = "ok " if got == expected else "BAD"
    print(f"[{mark}] {label}: {got}")
    return got == expected


def main() -> int:
    ok = True
    s310 = symfunc.expand_schur((3, 1, 0), 3)
    ok &= row("terms of s_310 in 3 variables", len(s310), 12)
    p = polytope.LatticePolytope.from_points(P)
    ok &= row("lattice points of P", len(polytope.lattice_points(p)), 12)
    ok &= row("P is IDP up to t=3", polytope.idp_check(p, 3).holds, True)
    g = polytope.idp_check(polytope.LatticePolytope.from_points(G), 2)
    ok &= row("G IDP witness", g.witness, (2, (1, 1, 1)))

    f = families.example_g2_310()
    rep = verifier.verify_good_theorem(f, 3)
    ok &= row("example is good", rep.good, True)
    ok &= row("example chain", [tuple(x) for x in rep.goodness.condition_b.chain],
              [(3, 1, 0), (3, 2, 0), (3, 3, 0), (3, 3, 1), (3, 3, 2), (3, 3, 3)])
    ok &= row("example SNP / IDP", (rep.snp.holds, rep.idp.holds), (True, True))
    ok &= row("subchain", [tuple(x) for x in partition.subchain((3, 1, 0), (3, 3, 3))],
              [(3, 1, 0), (3, 1, 0), (3, 3, 0), (3, 3, 3)])

    diff = symfunc.expand_combination(symfunc.SchurCombination(3, [(1, (3, 1, 0)), (-1, (2, 2, 0))]))
    ok &= row("s_310 - s_220 missing points", sorted(verifier.check_snp(diff).missing_points),
              [(0, 2, 2), (2, 0, 2), (2, 2, 0)])
    six = symfunc.SchurCombination(3, [(1, lam) for lam in
                                       [(6, 4, 0), (6, 4, 1), (6, 4, 2), (6, 4, 3), (6, 5, 3), (6, 6, 3)]])
    miss = verifier.check_snp(symfunc.expand_combination(six)).missing_points
    ok &= row("six-term sum misses (6,5,2)", (6, 5, 2) in miss, True)
    ok &= row("g_22 in 2 variables", families.dual_grothendieck((2, 2), 2).to_json()["terms"],
              [{"coeff": "1", "partition": [2, 0]}, {"coeff": "1", "partition": [2, 1]},
               {"coeff": "1", "partition": [2, 2]}])
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
