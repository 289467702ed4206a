import itertools

import hypothesis
import pytest

from goodsym.partition import partitions_of, sm_orbit
from goodsym.polytope import LatticePolytope

hypothesis.settings.register_profile("ci", max_examples=60, deadline=None)
hypothesis.settings.load_profile("ci")

P_POINTS = [(3, 1, 0), (3, 0, 1), (1, 0, 3), (0, 1, 3), (0, 3, 1), (1, 3, 0),
            (2, 2, 0), (2, 0, 2), (0, 2, 2),
            (2, 1, 1), (1, 1, 2), (1, 2, 1)]
G_POINTS = [(0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 2, 1)]
S310I_CHAIN = [(3, 1, 0), (3, 2, 0), (3, 3, 0), (3, 3, 1), (3, 3, 2), (3, 3, 3)]


@pytest.fixture
def P():
    return LatticePolytope.from_points(P_POINTS)


@pytest.fixture
def G():
    return LatticePolytope.from_points(G_POINTS)


def all_partitions(max_size, max_m):
    for m in range(1, max_m + 1):
        for n in range(max_size + 1):
            for lam in partitions_of(n, m):
                yield m, lam


def brute_ssyt(shape, m):
    """All SSYT by filtering every filling of the diagram; independent of the enumerator."""
    shape = [x for x in shape if x]
    cells = [(r, j) for r, n in enumerate(shape) for j in range(n)]
    out = []
    for vals in itertools.product(range(1, m + 1), repeat=len(cells)):
        g = dict(zip(cells, vals))
        if all((j == 0 or g[r, j - 1] <= g[r, j]) and (r == 0 or g[r - 1, j] < g[r, j])
               for r, j in cells):
            out.append([[g[r, j] for j in range(n)] for r, n in enumerate(shape)])
    return out


def orbit_hull(lam):
    return LatticePolytope(len(lam), tuple(sm_orbit(lam)))


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        title, ok = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}")
