"""Random search for SNP polynomials whose Newton polytope fails IDP.

Thin wrapper over ``goodsym search``; set GOODSYM_THREADS for parallel runs.
A hit is only a candidate: IDP is checked for t up to --t-max, nothing more.
"""
import sys

from goodsym.cli import run

if __name__ == "__main__":
    raise SystemExit(run(["search", *sys.argv[1:]]))
