"""Command-line front end.

Exit status: 0 when a verdict was computed (whatever it is), 1 on bad input,
2 when a good combination violates SNP or IDP (an internal error).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .families import FamilyKind, FamilySpec, random_combination
from .partition import Partition, check_chain, generate_chain, subchain
from .polytope import LatticePolytope, dimension, idp_check, lattice_points, vertices
from .symfunc import SchurCombination, SparsePolynomial, expand_combination
from .verifier import (TheoremViolation, ZeroPolynomialError, check_good, check_snp, newton_polytope,
                       rado_containment, verify_good_theorem)

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2
THREADS_ENV = "GOODSYM_THREADS"


class InputError(ValueError):
    pass


def _read_input(args) -> object:
    if getattr(args, "json", None) is not None:
        text = args.json
    elif getattr(args, "infile", None) and args.infile != "-":
        with open(args.infile) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON: {e}") from e


def _parse_vector(text: str) -> list[int]:
    try:
        v = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed vector {text!r}") from e
    if not isinstance(v, list) or not all(isinstance(x, int) for x in v):
        raise InputError(f"expected an integer array, got {text!r}")
    return v


def _combination(data) -> SchurCombination:
    if isinstance(data, dict) and "terms" in data:
        return SchurCombination.from_json(data)
    if isinstance(data, dict) and "kind" in data:
        return FamilySpec.from_json(data).build()
    raise InputError("expected a SchurCombination ({'m', 'terms'}) or FamilySpec ({'kind', ...})")


def _polynomial(data) -> SparsePolynomial:
    """Accept a SparsePolynomial list, a SchurCombination or a FamilySpec."""
    if isinstance(data, list):
        return SparsePolynomial.from_json(data)
    return expand_combination(_combination(data))


def _polytope(data) -> LatticePolytope:
    if isinstance(data, dict) and "generators" in data:
        return LatticePolytope.from_json(data)
    f = _polynomial(data)
    return newton_polytope(f)


def _points_csv(rows: Sequence[tuple[str, Sequence[int]]], m: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["kind", "degree"] + [f"x{i + 1}" for i in range(m)])
    for kind, p in rows:
        w.writerow([kind, sum(p)] + list(p))
    return buf.getvalue()


def cmd_expand(args):
    f = _polynomial(_read_input(args))
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"x{i + 1}" for i in range(f.m)] + ["coeff"])
        for e, c in f:
            w.writerow(list(e) + [c])
        return buf.getvalue()
    return f.to_json()


def cmd_newton(args):
    p = _polytope(_read_input(args))
    verts = sorted(vertices(p))
    pts = sorted(lattice_points(p))
    if args.format == "csv":
        return _points_csv([("vertex", v) for v in verts] + [("lattice_point", q) for q in pts], p.m)
    return {"m": p.m, "dimension": dimension(p),
            "vertices": [list(v) for v in verts], "lattice_points": [list(q) for q in pts]}


def cmd_snp(args):
    f = _polynomial(_read_input(args))
    rep = check_snp(f)
    if args.format == "csv":
        return _points_csv([("missing", q) for q in sorted(rep.missing_points)], f.m)
    return rep.to_json()


def cmd_idp(args):
    return idp_check(_polytope(_read_input(args)), args.t_max).to_json()


def cmd_good(args):
    return check_good(_combination(_read_input(args))).to_json()


def cmd_verify(args):
    rep = verify_good_theorem(_combination(_read_input(args)), args.t_max)
    return rep.to_json(), (EXIT_VIOLATION if rep.violations else EXIT_OK)


def cmd_chain(args):
    alpha, beta = Partition(_parse_vector(args.alpha)), Partition(_parse_vector(args.beta))
    chain = generate_chain(alpha, beta)
    return {"alpha": list(alpha), "beta": list(beta),
            "chain": [list(p) for p in chain],
            "valid": bool(check_chain(chain, alpha, beta)),
            "subchain": [list(p) for p in subchain(alpha, beta)]}


def cmd_family(args):
    if args.kind is None:
        spec = FamilySpec.from_json(_read_input(args))
    else:
        vec = lambda s: None if s is None else tuple(_parse_vector(s))  # noqa: E731
        spec = FamilySpec(args.kind, args.m, vec(args.partition), vec(args.alpha), vec(args.beta))
    return spec.build().to_json()


def cmd_rado(args):
    alpha, beta = Partition(_parse_vector(args.alpha)), Partition(_parse_vector(args.beta))
    return {"alpha": list(alpha), "beta": list(beta), "contained": rado_containment(alpha, beta)}


def _search_one(job):
    seed, i, m, max_size, t_max = job
    rng = random.Random(f"{seed}:{i}")
    f = random_combination(rng, m=m, max_size=max_size)
    poly = expand_combination(f)
    if not poly:
        return {"index": i, "zero": True}
    snp = check_snp(poly)
    out = {"index": i, "zero": False, "snp": snp.holds}
    if snp.holds:
        idp = idp_check(newton_polytope(poly), t_max)
        out["idp"] = idp.holds
        if not idp.holds:
            out["combination"] = f.to_json()
            out["witness"] = idp.to_json()["witness"]
    return out


def cmd_search(args):
    jobs = [(args.seed, i, args.m, args.max_size, args.t_max) for i in range(args.samples)]
    threads = int(os.environ.get(THREADS_ENV, "1"))
    if threads > 1:
        with ProcessPoolExecutor(threads) as ex:
            results = list(ex.map(_search_one, jobs))
    else:
        results = [_search_one(j) for j in jobs]
    snp = [r for r in results if r.get("snp")]
    cands = [{"index": r["index"], "combination": r["combination"], "witness": r["witness"]}
             for r in snp if not r["idp"]]
    return {"seed": args.seed, "samples": args.samples, "m": args.m, "max_size": args.max_size,
            "t_max": args.t_max, "zero_polynomials": sum(r["zero"] for r in results),
            "snp_count": len(snp), "candidates": cands}


def _add_input(p):
    p.add_argument("--in", dest="infile", help="input JSON file (default: stdin)")
    p.add_argument("--json", help="inline JSON input")


def _t_max(text: str) -> int:
    t = int(text)
    if t < 2:
        raise argparse.ArgumentTypeError("--t-max must be >= 2")
    return t


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="goodsym", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn, formats, helptext in [
        ("expand", cmd_expand, ("json", "csv"), "expand a Schur combination into monomials"),
        ("newton", cmd_newton, ("json", "csv"), "vertices and lattice points of a Newton polytope"),
        ("snp", cmd_snp, ("json", "csv"), "saturated Newton polytope check"),
        ("idp", cmd_idp, ("json",), "integer decomposition property up to --t-max"),
        ("good", cmd_good, ("json",), "conditions (a), (a'), (b), (b')"),
        ("verify", cmd_verify, ("json",), "goodness plus SNP and IDP, flags theorem violations"),
    ]:
        p = sub.add_parser(name, help=helptext)
        _add_input(p)
        p.add_argument("--format", choices=formats, default="json")
        if name in ("idp", "verify"):
            p.add_argument("--t-max", type=_t_max, default=None)
        p.set_defaults(func=fn)

    p = sub.add_parser("chain", help="northmost-row chain and coarse subchain")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("family", help="materialize a family of Schur combinations")
    _add_input(p)
    p.add_argument("--kind", choices=[k.value for k in FamilyKind])
    p.add_argument("--m", type=int)
    p.add_argument("--partition")
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("rado", help="Newton(s_alpha) inside Newton(s_beta)?")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_rado)

    p = sub.add_parser("search", help="random search for SNP polynomials whose Newton polytope fails IDP")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--max-size", type=int, default=5)
    p.add_argument("--t-max", type=_t_max, default=2)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_search)
    return ap


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except TheoremViolation as e:
        print(f"THEOREM-VIOLATION: {e}", file=stderr)
        return EXIT_VIOLATION
    except (InputError, ZeroPolynomialError, ValueError, KeyError, TypeError, OSError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_INPUT
    status = EXIT_OK
    if isinstance(result, tuple):
        result, status = result
    if isinstance(result, str):
        stdout.write(result)
    else:
        stdout.write(json.dumps(result) + "\n")
    if status == EXIT_VIOLATION:
        print("; ".join(result.get("violations", [])), file=stderr)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
