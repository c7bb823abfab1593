import itertools
import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from quotientwalk import builtin
from quotientwalk.families import FIG1_EDGES
from quotientwalk.graph import (CayleyError, CayleySpec, Graph, Permutation, PermutationError,
                                build_cayley, compose, degree, inverse, load_graph, load_perms,
                                perms_to_dict, save_graph)


def perms(n):
    return st.permutations(list(range(n))).map(lambda p: Permutation(tuple(p)))


def test_compose_identity():
    q = Permutation((2, 0, 3, 1))
    assert compose(Permutation.identity(4), q) == q
    assert compose(q, Permutation.identity(4)) == q


def test_compose_involution_squared():
    sigma = Permutation.parse("(0 2)(1 3)", 4)
    assert compose(sigma, sigma).is_identity()


def test_compose_order_convention():
    # (12) after (23), 1-based; by hand: 0->0->1, 1->2->2, 2->1->0
    p = Permutation.parse("(0 1)", 3)
    q = Permutation.parse("(1 2)", 3)
    assert compose(p, q).images == (1, 2, 0)
    assert compose(q, p).images == (2, 0, 1)


def test_compose_length_mismatch():
    with pytest.raises(PermutationError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_permutation_rejects_non_bijection():
    with pytest.raises(PermutationError):
        Permutation((0, 0, 1))


@pytest.mark.parametrize("text,n,images", [
    ("(0 2)(1 3)", 4, (2, 3, 0, 1)),
    ("(0,1,2)", 3, (1, 2, 0)),
    ("(012)", 3, (1, 2, 0)),
    ("()", 2, (0, 1)),
])
def test_parse_cycles(text, n, images):
    p = Permutation.parse(text, n)
    assert p.images == images
    assert Permutation.parse(str(p), n) == p


@pytest.mark.parametrize("text", ["(0 1", "0 1", "(0 5)", "(0 1)(1 2)"])
def test_parse_rejects(text):
    with pytest.raises(PermutationError):
        Permutation.parse(text, 3)


@given(perms(6), perms(6), perms(6))
def test_compose_associative(p, q, r):
    assert compose(p, compose(q, r)) == compose(compose(p, q), r)


@given(perms(7))
def test_compose_with_inverse(p):
    assert compose(p, inverse(p)).is_identity()
    assert compose(inverse(p), p).is_identity()


def test_graph_structure_invariants():
    g = Graph(4, [(1, 0), (0, 1), (2, 3)])
    assert g.edges == {(0, 1), (2, 3)}
    A = g.adjacency()
    assert (A == A.T).all() and not A.diagonal().any()
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


def test_degree_examples():
    assert degree(Graph(1, []), 0) == 0
    fig1 = Graph(4, FIG1_EDGES)
    assert degree(fig1, 0) == 3
    with pytest.raises(IndexError):
        degree(fig1, 4)


def test_s3_two_gen_is_hexagon():
    g = builtin("s3-two-gen").graph
    assert g.n == 6
    assert all(degree(g, v) == 2 for v in range(g.n))
    # connected 2-regular on 6 vertices = one 6-cycle
    seen, stack = {0}, [0]
    while stack:
        for w in g.neighbors(stack.pop()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    assert len(seen) == 6
    lab = {g.labels[i]: i for i in range(6)}
    assert g.has_edge(lab["e"], lab["r1"]) and g.has_edge(lab["e"], lab["r2"])
    assert g.has_edge(lab["r1"], lab["r2r1"]) and g.has_edge(lab["r2"], lab["r1r2"])


def test_s3_three_gen_is_3_regular():
    g = builtin("s3-three-gen").graph
    assert g.n == 6 and len(g.edges) == 9
    assert all(degree(g, v) == 3 for v in range(6))


def test_cycle_c5():
    g = builtin("cycle", 5).graph
    assert g.edges == {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}


@pytest.mark.parametrize("name,n,k", [("s3-two-gen", None, 2), ("s3-three-gen", None, 3),
                                      ("cycle", 3, 2), ("cycle", 10, 2)])
def test_cayley_regular_of_degree_R(name, n, k):
    g = builtin(name, n).graph
    assert {degree(g, v) for v in range(g.n)} == {k}


def _s3():
    return tuple(Permutation(p) for p in itertools.permutations(range(3)))


def test_cayley_rejects_identity_generator():
    elems = _s3()
    with pytest.raises(CayleyError, match="identity"):
        build_cayley(CayleySpec(elems, (0,)))


def test_cayley_rejects_non_inverse_closed():
    elems = _s3()
    three_cycle = elems.index(Permutation((1, 2, 0)))
    with pytest.raises(CayleyError, match="inverse"):
        build_cayley(CayleySpec(elems, (three_cycle,)))


def test_cayley_rejects_non_group():
    elems = _s3()[:4]
    with pytest.raises(CayleyError):
        build_cayley(CayleySpec(elems, (1,)))


def test_graph_json_roundtrip(tmp_path):
    g = builtin("s3-two-gen").graph
    path = tmp_path / "g.json"
    save_graph(g, path)
    raw = json.loads(path.read_text())
    assert set(raw) == {"n", "edges", "labels"}
    assert load_graph(path) == g


def test_perm_file_roundtrip(tmp_path):
    ps = [Permutation((1, 0, 2)), Permutation((0, 2, 1))]
    path = tmp_path / "p.json"
    path.write_text(json.dumps(perms_to_dict(ps, 3)))
    assert load_perms(path) == ps
    path.write_text(json.dumps({"n": 4, "perms": [[1, 0, 2]]}))
    with pytest.raises(PermutationError):
        load_perms(path)
