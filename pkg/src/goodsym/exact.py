"""Exact rational linear algebra: Phase-I simplex feasibility and rank."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def _as_integer_system(generators, q):
    # scale q to integers so the whole tableau is integral
    qf = [Fraction(x) for x in q]
    den = lcm(*(x.denominator for x in qf))
    rows = [[den * g[i] for g in generators] for i in range(len(q))]
    rhs = [int(x * den) for x in qf]
    rows.append([den] * len(generators))
    rhs.append(den)
    return rows, rhs


def convex_combination(generators: Sequence[Sequence[int]], q: Sequence) -> list[Fraction] | None:
    """Weights c >= 0 with sum(c) = 1 and sum(c_k * g_k) = q, or None if q is outside the hull.

    Phase-I simplex on [G; 1] c = [q; 1] with one artificial per row and
    Bland's rule. Pivoting is integer-preserving (every tableau entry is an
    integer over a common positive denominator), so the arithmetic is exact
    and stays in Python ints.
    """
    k = len(generators)
    if k == 0:
        return None
    rows, rhs = _as_integer_system(generators, q)
    nrows = len(rows)
    for r in range(nrows):
        if rhs[r] < 0:
            rows[r] = [-x for x in rows[r]]
            rhs[r] = -rhs[r]
    ncols = k + nrows
    # tableau rows: [weights | artificials | rhs]; last row is the Phase-I cost row
    tab = [rows[r] + [int(r == s) for s in range(nrows)] + [rhs[r]] for r in range(nrows)]
    cost = [-sum(rows[r][j] for r in range(nrows)) for j in range(k)] + [0] * nrows + [-sum(rhs)]
    tab.append(cost)
    basis = [k + r for r in range(nrows)]
    denom = 1

    while True:
        crow = tab[nrows]
        enter = next((j for j in range(ncols) if crow[j] < 0), None)
        if enter is None:
            break
        leave = None
        for r in range(nrows):
            a = tab[r][enter]
            if a > 0:
                if leave is None:
                    leave = r
                    continue
                lhs_ = tab[r][-1] * tab[leave][enter]
                rhs_ = tab[leave][-1] * a
                if lhs_ < rhs_ or (lhs_ == rhs_ and basis[r] < basis[leave]):
                    leave = r
        if leave is None:  # cannot happen: the Phase-I objective is bounded below by 0
            raise ArithmeticError("unbounded Phase-I")
        prow = tab[leave]
        piv = prow[enter]
        for r in range(nrows + 1):
            if r == leave:
                continue
            row = tab[r]
            f = row[enter]
            if f:
                tab[r] = [(piv * x - f * y) // denom for x, y in zip(row, prow)]
            elif piv != denom:
                tab[r] = [piv * x // denom for x in row]
        denom = piv
        basis[leave] = enter

    if tab[nrows][-1] != 0:
        return None
    weights = [Fraction(0)] * k
    for r, b in enumerate(basis):
        if b < k:
            weights[b] = Fraction(tab[r][-1], denom)
    return weights


def rank(vectors: Sequence[Sequence]) -> int:
    mat = [[Fraction(x) for x in v] for v in vectors]
    if not mat:
        return 0
    ncols = len(mat[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(r + 1, len(mat)):
            f = mat[i][c] / mat[r][c]
            if f:
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return r
