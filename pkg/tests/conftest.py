import math
from fractions import Fraction

import numpy as np
import pytest

from quotientwalk import builtin, reduce_graph, spectral_atoms
from quotientwalk.graph import Graph

CYCLE_SIZES = (3, 4, 5, 6, 7, 8, 51, 64)

FIXTURE_IDS = ["s3-two-gen", "s3-three-gen", "fig1"] + [f"cycle-{n}" for n in CYCLE_SIZES]


def load_fixture(fid):
    if fid.startswith("cycle-"):
        return builtin("cycle", int(fid.split("-")[1]))
    return builtin(fid)


class Reduced:
    def __init__(self, fid):
        self.fixture = load_fixture(fid)
        self.graph = self.fixture.graph
        self.strat, self.jacobi = reduce_graph(self.graph, self.fixture.generators, self.fixture.root)
        self.atoms = spectral_atoms(self.jacobi)


_cache = {}


def reduced(fid):
    if fid not in _cache:
        _cache[fid] = Reduced(fid)
    return _cache[fid]


@pytest.fixture(params=FIXTURE_IDS)
def any_fixture(request):
    return reduced(request.param)


@pytest.fixture
def ex1():
    return reduced("s3-two-gen")


@pytest.fixture
def ex2():
    return reduced("s3-three-gen")


def exact_moments(g: Graph, root_orbit, upto):
    """<phi_0|A^m|phi_0> for m = 0..upto by integer walk counting on the full graph."""
    vec = [0] * g.n
    for v in root_orbit:
        vec[v] = 1
    out = []
    for _ in range(upto + 1):
        out.append(Fraction(sum(vec[v] for v in root_orbit), len(root_orbit)))
        vec = [sum(vec[w] for w in g.neighbors(v)) for v in range(g.n)]
    return out


def star_plus_pendant():
    """Star with centre 0 and leaves 1, 2, 3, plus a pendant vertex 4 hanging off leaf 1."""
    return Graph(5, frozenset({(0, 1), (0, 2), (0, 3), (1, 4)}))


TIMES64 = np.linspace(0.0, 4 * math.pi, 64)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
