"""Write degree slices of a Newton polytope as CSV, for plotting in barycentric coordinates.

Usage: export_plot_data.py [--kind example_g2_310|dual_grothendieck ...] [--out FILE]
Rows: degree, x1..xm, in_support, vertex.
"""
import argparse
import csv
import sys

from goodsym.families import FamilySpec
from goodsym.polytope import lattice_points, vertices
from goodsym.symfunc import expand_combination, support
from goodsym.verifier import newton_polytope


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kind", default="example_g2_310")
    ap.add_argument("--m", type=int)
    ap.add_argument("--partition", type=lambda s: tuple(int(x) for x in s.split(",")))
    ap.add_argument("--out")
    args = ap.parse_args(argv)
    f = FamilySpec(args.kind, args.m, args.partition).build()
    poly = expand_combination(f)
    supp, newt = support(poly), newton_polytope(poly)
    verts = vertices(newt)
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["degree"] + [f"x{i + 1}" for i in range(f.m)] + ["in_support", "vertex"])
    for q in sorted(lattice_points(newt, known_inside=supp), key=lambda q: (sum(q), q)):
        w.writerow([sum(q), *q, int(q in supp), int(q in verts)])
    if out is not sys.stdout:
        out.close()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
