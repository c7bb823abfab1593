"""Automorphism checks, subgroup closure, orbit partitions and stratification."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, Permutation, PermutationError, compose


class NotAutomorphism(ValueError):
    """A supplied permutation does not preserve adjacency."""


class StratificationInvalid(ValueError):
    """The orbit partition does not give a tridiagonal (Jacobi) quotient.

    ``condition`` is one of ``"a"`` (orbit not at a single distance from the
    root orbit), ``"b"`` (edge skipping a level) or ``"c"`` (neighbour counts
    not constant on a level).
    """

    def __init__(self, condition: str, message: str):
        super().__init__(f"condition ({condition}): {message}")
        self.condition = condition


def is_automorphism(g: Graph, p: Permutation) -> bool:
    if len(p) != g.n:
        raise PermutationError(f"permutation on {len(p)} points, graph has {g.n} vertices")
    # p is a bijection, so mapping E into E is enough for E <-> E.
    return all(g.has_edge(p(a), p(b)) for a, b in g.edges)


def close_subgroup(gens: Sequence[Permutation], n: int | None = None) -> list[Permutation]:
    """Smallest group containing ``gens``, identity first, the rest sorted by images."""
    gens = [p if isinstance(p, Permutation) else Permutation(tuple(p)) for p in gens]
    if n is None:
        if not gens:
            raise ValueError("need n to close an empty generating set")
        n = len(gens[0])
    if any(len(p) != n for p in gens):
        raise PermutationError("generators act on different point sets")
    e = Permutation.identity(n)
    # In a finite group the inverse is a positive power, so closing under
    # composition with the generators suffices.
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = compose(s, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    rest = sorted((p for p in seen if p != e), key=lambda p: p.images)
    return [e] + rest


def orbit_partition(g: Graph, H: Iterable[Permutation]) -> list[tuple[int, ...]]:
    """Orbits of the group generated by ``H``, each sorted, listed by smallest vertex."""
    H = list(H)
    for p in H:
        if not is_automorphism(g, p):
            raise NotAutomorphism(f"{p} is not an automorphism")
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in H:
        for v in range(g.n):
            a, b = find(v), find(p(v))
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted((tuple(vs) for vs in groups.values()), key=lambda o: o[0])


@dataclass(frozen=True)
class Stratification:
    """Ordered strata ``O_0 .. O_d`` with ``root`` in ``O_0``."""

    orbits: tuple[tuple[int, ...], ...]
    root: int
    orbit_of: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.orbits) - 1

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)


def _check_partition(n: int, orbits) -> list[tuple[int, ...]]:
    orbits = [tuple(sorted(int(v) for v in o)) for o in orbits]
    flat = [v for o in orbits for v in o]
    if any(len(o) == 0 for o in orbits):
        raise ValueError("empty orbit")
    if sorted(flat) != list(range(n)):
        raise ValueError("orbits do not partition the vertex set")
    return orbits


def stratify(g: Graph, orbits: Sequence[Sequence[int]], root: int = 0) -> Stratification:
    """Order orbits by distance from the root's orbit and validate the result.

    Orbits at the same distance are merged into one stratum (with the
    trivial subgroup this yields the distance partition).  Raises
    :class:`StratificationInvalid` when the strata do not support a Jacobi
    reduction.
    """
    orbits = _check_partition(g.n, orbits)
    if not 0 <= root < g.n:
        raise IndexError(f"root {root} out of range")
    start = next(o for o in orbits if root in o)

    dist = [-1] * g.n
    queue = deque(start)
    for v in start:
        dist[v] = 0
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)

    level_of_orbit = []
    for o in orbits:
        ds = {dist[v] for v in o}
        if -1 in ds:
            raise StratificationInvalid("a", f"orbit {o} is not reachable from the root orbit")
        if len(ds) != 1:
            raise StratificationInvalid("a", f"orbit {o} spans distances {sorted(ds)}")
        level_of_orbit.append(ds.pop())

    depth = max(level_of_orbit)
    strata = [[] for _ in range(depth + 1)]
    for o, lvl in zip(orbits, level_of_orbit):
        strata[lvl].extend(o)
    strata = tuple(tuple(sorted(s)) for s in strata)
    orbit_of = [0] * g.n
    for i, s in enumerate(strata):
        for v in s:
            orbit_of[v] = i

    for a, b in g.edges:
        if abs(orbit_of[a] - orbit_of[b]) > 1:
            raise StratificationInvalid("b", f"edge {(a, b)} joins strata {orbit_of[a]} and {orbit_of[b]}")

    for name, offset in (("kappa_minus", -1), ("kappa_zero", 0), ("kappa_plus", 1)):
        for i, s in enumerate(strata):
            j = i + offset
            if not 0 <= j <= depth:
                continue
            counts = {v: sum(1 for w in g.neighbors(v) if orbit_of[w] == j) for v in s}
            if len(set(counts.values())) > 1:
                raise StratificationInvalid(
                    "c", f"{name} not constant on stratum {i}: {counts}")

    return Stratification(strata, root, tuple(orbit_of))

