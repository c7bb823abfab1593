"""Permutations, simple undirected graphs and Cayley-graph construction.

Vertices are dense 0-based indices.  Permutations act on vertex indices and
compose right-to-left: ``compose(p, q)(i) == p(q(i))``, i.e. ``q`` is
applied first.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np


class PermutationError(ValueError):
    """Raised for malformed permutations or incompatible lengths."""


class CayleyError(ValueError):
    """Raised when a group / generating set cannot define an undirected Cayley graph."""


@dataclass(frozen=True)
class Permutation:
    """A bijection on ``{0, ..., n-1}`` stored by its images."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise PermutationError(f"not a bijection on 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], n: int) -> Permutation:
        images = list(range(n))
        seen: set[int] = set()
        for cycle in cycles:
            for v in cycle:
                if not 0 <= v < n:
                    raise PermutationError(f"point {v} outside 0..{n - 1}")
                if v in seen:
                    raise PermutationError(f"point {v} appears in more than one cycle")
                seen.add(v)
            for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, n: int) -> Permutation:
        """Parse cycle notation such as ``"(0 2)(1 3)"`` or ``"(0,1,2)"``.

        Points are 0-based.  A cycle written without separators, e.g.
        ``"(012)"``, is read digit by digit, which is only unambiguous for
        ``n <= 10``.
        """
        text = text.strip()
        if text in ("", "()", "e", "id"):
            return cls.identity(n)
        if re.fullmatch(r"(\([^()]*\)\s*)+", text) is None:
            raise PermutationError(f"cannot parse cycle notation {text!r}")
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", text):
            tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
            if len(tokens) == 1 and len(tokens[0]) > 1:
                if n > 10:
                    raise PermutationError(
                        f"ambiguous cycle {body!r}: separate points with spaces when n > 10")
                tokens = list(tokens[0])
            try:
                cycles.append([int(t) for t in tokens])
            except ValueError:
                raise PermutationError(f"non-integer point in cycle {body!r}") from None
        return cls.from_cycles(cycles, n)

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        out, seen = [], set()
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p o q``, the permutation applying ``q`` first and then ``p``."""
    if len(p) != len(q):
        raise PermutationError(f"length mismatch: {len(p)} vs {len(q)}")
    return Permutation(tuple(p.images[i] for i in q.images))


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def _normalize_edges(n: int, edges: Iterable[Sequence[int]]) -> frozenset[tuple[int, int]]:
    out = set()
    for e in edges:
        a, b = (int(x) for x in e)
        if a == b:
            raise ValueError(f"self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"edge {(a, b)} outside 0..{n - 1}")
        out.add((min(a, b), max(a, b)))
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored once as ``(a, b)`` with ``a < b``; the adjacency matrix
    is therefore symmetric with a zero diagonal by construction.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[str, ...] | None = None
    _nbrs: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != self.n:
                raise ValueError(f"{len(labels)} labels for {self.n} vertices")
            object.__setattr__(self, "labels", labels)
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        object.__setattr__(self, "_nbrs", tuple(tuple(sorted(x)) for x in nbrs))

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._nbrs[v]

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def adjacency(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=np.int64)
        for a, b in self.edges:
            A[a, b] = A[b, a] = 1
        return A

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range 0..{self.n - 1}")

    def to_dict(self) -> dict:
        d = {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> Graph:
        return cls(int(d["n"]), d["edges"], d.get("labels"))


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


@dataclass(frozen=True)
class CayleySpec:
    """A finite permutation group with a chosen generating set.

    ``generating_set`` holds indices into ``group_elements``.
    """

    group_elements: tuple[Permutation, ...]
    generating_set: tuple[int, ...]
    labels: tuple[str, ...] | None = None


def build_cayley(spec: CayleySpec) -> Graph:
    """Undirected Cayley graph: ``g ~ h`` iff ``h o g^-1`` lies in the generating set."""
    elems = list(spec.group_elements)
    if not elems:
        raise CayleyError("empty group")
    index = {p: i for i, p in enumerate(elems)}
    if len(index) != len(elems):
        raise CayleyError("repeated group element")
    n = len(elems[0])
    if any(len(p) != n for p in elems):
        raise CayleyError("group elements act on different point sets")
    if Permutation.identity(n) not in index:
        raise CayleyError("group has no identity element")
    for p in elems:
        if p.inverse() not in index:
            raise CayleyError(f"group not closed under inverse at {p}")
        for q in elems:
            if compose(p, q) not in index:
                raise CayleyError(f"group not closed under composition: {p} o {q}")

    gens = set(spec.generating_set)
    for r in gens:
        if not 0 <= r < len(elems):
            raise CayleyError(f"generator index {r} out of range")
        if elems[r].is_identity():
            raise CayleyError("identity in generating set")
        if index[elems[r].inverse()] not in gens:
            raise CayleyError(f"generating set not inverse-closed at {elems[r]}")

    edges = set()
    for gi, g in enumerate(elems):
        ginv = g.inverse()
        for hi, h in enumerate(elems):
            if index[compose(h, ginv)] in gens:
                edges.add((min(gi, hi), max(gi, hi)))
    return Graph(len(elems), frozenset(edges), spec.labels)


def load_graph(path: str | Path) -> Graph:
    with open(path) as f:
        return Graph.from_dict(json.load(f))


def save_graph(g: Graph, path: str | Path):
    with open(path, "w") as f:
        json.dump(g.to_dict(), f)


def perms_from_dict(d: dict) -> list[Permutation]:
    n = int(d["n"])
    perms = [Permutation(tuple(p)) for p in d["perms"]]
    for p in perms:
        if len(p) != n:
            raise PermutationError(f"permutation {list(p.images)} has length {len(p)}, expected {n}")
    return perms


def perms_to_dict(perms: Sequence[Permutation], n: int) -> dict:
    return {"n": n, "perms": [list(p.images) for p in perms]}


def load_perms(path: str | Path) -> list[Permutation]:
    with open(path) as f:
        return perms_from_dict(json.load(f))
