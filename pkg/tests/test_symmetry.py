import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from quotientwalk import builtin
from quotientwalk.families import FIG1_EDGES
from quotientwalk.graph import Graph, Permutation, PermutationError, compose
from quotientwalk.symmetry import (NotAutomorphism, StratificationInvalid, close_subgroup,
                                   is_automorphism, orbit_partition, stratify)

from conftest import FIXTURE_IDS, reduced, star_plus_pendant

FIG1 = Graph(4, FIG1_EDGES)


def test_fig1_sigma_is_automorphism():
    assert is_automorphism(FIG1, Permutation.parse("(0 2)(1 3)", 4))


def test_fig1_tau_is_not_automorphism():
    tau = Permutation.parse("(0 1 2)", 4)
    assert not is_automorphism(FIG1, tau)
    # the witness: 1~4 maps to 2~4 (1-based), which is missing
    assert FIG1.has_edge(0, 3) and not FIG1.has_edge(tau(0), tau(3))


def test_identity_is_automorphism():
    for fid in FIXTURE_IDS:
        g = reduced(fid).graph
        assert is_automorphism(g, Permutation.identity(g.n))


def test_is_automorphism_length_mismatch():
    with pytest.raises(PermutationError):
        is_automorphism(FIG1, Permutation.identity(3))


def test_close_subgroup_trivial():
    assert close_subgroup([], 4) == [Permutation.identity(4)]


def test_close_subgroup_order_two():
    s = Permutation.parse("(0 2)(1 3)", 4)
    assert close_subgroup([s]) == [Permutation.identity(4), s]


def test_close_subgroup_generates_s3():
    brute = {Permutation(p) for p in itertools.permutations(range(3))}
    H = close_subgroup([Permutation.parse("(0 1 2)", 3), Permutation.parse("(0 1)", 3)])
    assert len(H) == 6 and set(H) == brute
    assert H[0].is_identity()


def test_close_subgroup_is_closed():
    H = close_subgroup([Permutation.parse("(0 1 2 3)", 5), Permutation.parse("(3 4)", 5)])
    Hs = set(H)
    assert len(H) == 120
    assert all(compose(a, b) in Hs for a in H[:20] for b in H[:20])
    assert all(a.inverse() in Hs for a in H)


def test_orbits_s3_two_gen():
    r = reduced("s3-two-gen")
    lab = {name: i for i, name in enumerate(r.graph.labels)}
    orbits = orbit_partition(r.graph, r.fixture.generators)
    expected = [{"e"}, {"r1", "r2"}, {"r1r2", "r2r1"}, {"r2r1r2"}]
    assert sorted(map(set, orbits), key=min) == sorted(
        ({lab[x] for x in o} for o in expected), key=min)


def test_orbits_identity_singletons():
    g = builtin("cycle", 6).graph
    assert orbit_partition(g, [Permutation.identity(6)]) == [(v,) for v in range(6)]
    assert orbit_partition(g, []) == [(v,) for v in range(6)]


def test_orbits_c5_reflection():
    f = builtin("cycle", 5)
    assert orbit_partition(f.graph, f.generators) == [(0,), (1, 4), (2, 3)]


def test_orbits_reject_non_automorphism():
    with pytest.raises(NotAutomorphism):
        orbit_partition(FIG1, [Permutation.parse("(0 1 2)", 4)])


def test_orbits_independent_of_generator_order():
    g = builtin("s3-three-gen").graph
    gens = [p for p in close_subgroup(builtin("s3-three-gen").generators)]
    rng = random.Random(7)
    base = orbit_partition(g, gens)
    for _ in range(10):
        rng.shuffle(gens)
        assert orbit_partition(g, gens) == base


def test_orbit_of_full_group_equals_orbit_of_generators():
    f = builtin("s3-three-gen")
    assert orbit_partition(f.graph, close_subgroup(f.generators)) == orbit_partition(f.graph, f.generators)


def test_stratify_s3_two_gen():
    r = reduced("s3-two-gen")
    names = [[r.graph.labels[v] for v in o] for o in r.strat.orbits]
    assert names == [["e"], ["r1", "r2"], ["r1r2", "r2r1"], ["r2r1r2"]]
    assert r.strat.d == 3


def test_stratify_s3_three_gen():
    r = reduced("s3-three-gen")
    names = [sorted(r.graph.labels[v] for v in o) for o in r.strat.orbits]
    assert names == [["e"], ["r1", "r2", "r3"], ["r1r2", "r2r1"]]
    assert r.strat.d == 2


def test_stratify_c4_singletons_merge_into_distance_levels():
    g = builtin("cycle", 4).graph
    s = stratify(g, [(v,) for v in range(4)], root=0)
    assert s.orbits == ((0,), (1, 3), (2,))
    assert s.d == 2
    s2 = stratify(g, [(v,) for v in range(4)], root=2)
    assert s2.orbits == ((2,), (1, 3), (0,))


def test_stratify_orbit_spanning_levels():
    g = builtin("cycle", 6).graph
    with pytest.raises(StratificationInvalid) as err:
        stratify(g, [(0,), (1, 2), (3,), (4,), (5,)], root=0)
    assert err.value.condition == "a"


def test_stratify_unreachable():
    g = Graph(3, [(0, 1)])
    with pytest.raises(StratificationInvalid) as err:
        stratify(g, [(0,), (1,), (2,)], root=0)
    assert err.value.condition == "a"


def test_stratify_non_constant_kappa_minus():
    # root orbit {1, 2}: the centre 0 has two neighbours there, pendant 4 only one
    g = star_plus_pendant()
    with pytest.raises(StratificationInvalid, match="kappa_minus") as err:
        stratify(g, [(1, 2), (0,), (3,), (4,)], root=1)
    assert err.value.condition == "c"


def test_stratify_non_constant_kappa_plus():
    # distance levels from leaf 2: {2}, {0}, {1, 3}, {4}; only leaf 1 continues to 4
    with pytest.raises(StratificationInvalid, match="kappa_plus"):
        stratify(star_plus_pendant(), [(v,) for v in range(5)], root=2)


def test_stratify_non_constant_kappa_zero():
    # star K_{1,3} with one leaf-leaf edge: leaves 1, 2 see one sibling, leaf 3 none
    g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    with pytest.raises(StratificationInvalid, match="kappa_zero") as err:
        stratify(g, [(v,) for v in range(4)], root=0)
    assert err.value.condition == "c"


def test_stratify_rejects_bad_partition():
    with pytest.raises(ValueError):
        stratify(FIG1, [(0, 1), (2,)], root=0)


@pytest.mark.parametrize("fid", FIXTURE_IDS)
def test_stratification_invariants(fid):
    r = reduced(fid)
    s, g = r.strat, r.graph
    assert sum(s.sizes) == g.n
    assert s.root in s.orbits[0]
    for i, o in enumerate(s.orbits):
        assert all(s.orbit_of[v] == i for v in o)
    assert all(abs(s.orbit_of[a] - s.orbit_of[b]) <= 1 for a, b in g.edges)


@settings(max_examples=60)
@given(st.sampled_from(["s3-two-gen", "s3-three-gen", "fig1", "cycle-7", "cycle-8"]), st.data())
def test_automorphisms_closed_under_composition(fid, data):
    r = reduced(fid)
    auts = close_subgroup(list(r.fixture.generators) + _extra_automorphisms(r))
    p = data.draw(st.sampled_from(auts))
    q = data.draw(st.sampled_from(auts))
    assert is_automorphism(r.graph, p) and is_automorphism(r.graph, q)
    assert is_automorphism(r.graph, compose(p, q))


def _extra_automorphisms(r):
    if r.fixture.name.startswith("cycle"):
        n = r.graph.n
        return [Permutation(tuple((i + 1) % n for i in range(n)))]
    return []
