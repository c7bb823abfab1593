"""Built-in graphs together with the automorphism subgroups used to reduce them.

Each builder returns a :class:`Fixture`: the graph, generators of the
subgroup ``H`` and the default root vertex.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import CayleySpec, Graph, Permutation, build_cayley, compose


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    generators: tuple[Permutation, ...]
    root: int = 0


def _s3():
    """S3 on points {0,1,2} with r1=(0 1), r2=(1 2) and vertex labels as words."""
    e = Permutation.identity(3)
    r1 = Permutation.from_cycles([[0, 1]], 3)
    r2 = Permutation.from_cycles([[1, 2]], 3)
    elems = [e, r1, r2, compose(r1, r2), compose(r2, r1), compose(r2, compose(r1, r2))]
    labels = ["e", "r1", "r2", "r1r2", "r2r1", "r2r1r2"]
    return elems, labels


def conjugation_action(elements, c: Permutation) -> Permutation:
    """Vertex permutation induced by ``g -> c g c^-1`` on a list of group elements."""
    index = {p: i for i, p in enumerate(elements)}
    cinv = c.inverse()
    return Permutation(tuple(index[compose(c, compose(g, cinv))] for g in elements))


def s3_two_gen() -> Fixture:
    """Cayley graph of S3 for R = {(12), (23)}: a hexagon.

    ``H`` is conjugation by (13), which swaps r1<->r2 and r1r2<->r2r1.
    """
    elems, labels = _s3()
    g = build_cayley(CayleySpec(tuple(elems), (1, 2), tuple(labels)))
    h = conjugation_action(elems, elems[5])
    return Fixture("s3-two-gen", g, (h,))


def s3_three_gen() -> Fixture:
    """Cayley graph of S3 for R = {(12), (23), (13)}: the complete bipartite K_{3,3}.

    ``H`` is the full conjugation action of S3, whose orbits are the identity,
    the transpositions and the two 3-cycles.
    """
    elems, labels = _s3()
    labels[5] = "r3"
    g = build_cayley(CayleySpec(tuple(elems), (1, 2, 5), tuple(labels)))
    gens = (conjugation_action(elems, elems[1]), conjugation_action(elems, elems[2]))
    return Fixture("s3-three-gen", g, gens)


def cycle(n: int) -> Fixture:
    """Cycle C_n as the Cayley graph of Z_n with R = {1, n-1}, reduced by k <-> n-k."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    rot = [Permutation(tuple((i + k) % n for i in range(n))) for k in range(n)]
    g = build_cayley(CayleySpec(tuple(rot), (1, n - 1)))
    reflection = Permutation(tuple((-k) % n for k in range(n)))
    return Fixture(f"cycle-{n}", g, (reflection,))


# 1-based labels: 1~2, 2~3, 3~4, 4~1, 1~3.
FIG1_EDGES = ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2))


def fig1() -> Fixture:
    """Four-cycle with one chord; ``H`` is generated by (0 2)(1 3)."""
    g = Graph(4, frozenset(FIG1_EDGES), ("1", "2", "3", "4"))
    return Fixture("fig1", g, (Permutation.parse("(0 2)(1 3)", 4),))


BUILTINS = {
    "s3-two-gen": s3_two_gen,
    "s3-three-gen": s3_three_gen,
    "cycle": cycle,
    "fig1": fig1,
}


def builtin(name: str, n: int | None = None) -> Fixture:
    try:
        make = BUILTINS[name]
    except KeyError:
        raise ValueError(f"unknown builtin {name!r}; choose from {sorted(BUILTINS)}") from None
    if name == "cycle":
        if n is None:
            raise ValueError("builtin 'cycle' needs n")
        return make(n)
    return make()
