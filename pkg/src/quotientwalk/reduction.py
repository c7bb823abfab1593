"""Quantum decomposition of the adjacency matrix and the Jacobi (quotient) chain.

Index map: ``omega[i]`` is the squared hopping weight between strata ``i``
and ``i+1``; ``alpha[i]`` is the loop weight of stratum ``i``.  In 1-based
terms ``omega[i-1] == omega_i`` and ``alpha[i] == alpha_{i+1}``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from .graph import Graph
from .symmetry import Stratification, orbit_partition, stratify


@dataclass(frozen=True)
class QuantumDecomposition:
    a_plus: np.ndarray
    a_minus: np.ndarray
    a_zero: np.ndarray


def quantum_decompose(g: Graph, s: Stratification) -> QuantumDecomposition:
    """Split ``A`` into raising, lowering and level-preserving parts.

    Entry ``(beta, alpha)`` goes to ``a_plus`` when ``beta`` sits one stratum
    above ``alpha``, to ``a_minus`` one below, and to ``a_zero`` on the same
    stratum.
    """
    n = g.n
    parts = {+1: np.zeros((n, n), dtype=np.int64),
             -1: np.zeros((n, n), dtype=np.int64),
             0: np.zeros((n, n), dtype=np.int64)}
    for a, b in g.edges:
        for src, dst in ((a, b), (b, a)):
            parts[s.orbit_of[dst] - s.orbit_of[src]][dst, src] = 1
    return QuantumDecomposition(parts[+1], parts[-1], parts[0])


def _as_fraction(x) -> Fraction:
    if isinstance(x, float) and not math.isfinite(x):
        raise ValueError(f"non-finite Jacobi entry {x!r}")
    return Fraction(x)


def _to_json_number(x: Fraction):
    return int(x) if x.denominator == 1 else str(x)


@dataclass(frozen=True)
class JacobiData:
    """Szegő–Jacobi sequences of a stratified graph, stored exactly."""

    omega: tuple[Fraction, ...]
    alpha: tuple[Fraction, ...]

    def __post_init__(self):
        omega = tuple(_as_fraction(w) for w in self.omega)
        alpha = tuple(_as_fraction(a) for a in self.alpha)
        if len(alpha) != len(omega) + 1:
            raise ValueError(f"need len(alpha) == len(omega) + 1, got {len(alpha)} and {len(omega)}")
        if any(w <= 0 for w in omega):
            raise ValueError(f"omega must be positive (broken chain): {omega}")
        if any(a < 0 for a in alpha):
            raise ValueError(f"alpha must be nonnegative: {alpha}")
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "alpha", alpha)

    @property
    def d(self) -> int:
        return len(self.omega)

    @property
    def dim(self) -> int:
        return len(self.alpha)

    def omega_array(self) -> np.ndarray:
        return np.array([float(w) for w in self.omega], dtype=float)

    def alpha_array(self) -> np.ndarray:
        return np.array([float(a) for a in self.alpha], dtype=float)

    def omega_products(self) -> np.ndarray:
        """``[1, w1, w1 w2, ..., w1...wd]`` as floats (computed exactly first)."""
        out, acc = [1.0], Fraction(1)
        for w in self.omega:
            acc *= w
            out.append(float(acc))
        return np.array(out)

    def to_dict(self) -> dict:
        return {"omega": [_to_json_number(w) for w in self.omega],
                "alpha": [_to_json_number(a) for a in self.alpha]}

    @classmethod
    def from_dict(cls, d: dict) -> JacobiData:
        return cls(tuple(d["omega"]), tuple(d["alpha"]))

    @classmethod
    def from_values(cls, omega: Sequence, alpha: Sequence) -> JacobiData:
        return cls(tuple(omega), tuple(alpha))


def load_jacobi(path: str | Path) -> JacobiData:
    with open(path) as f:
        return JacobiData.from_dict(json.load(f))


def jacobi_sequences(g: Graph, s: Stratification) -> JacobiData:
    """Read ``omega`` and ``alpha`` off the neighbour counts of each stratum.

    ``omega_{i+1} = (|O_{i+1}| / |O_i|) * kappa_minus^2`` where
    ``kappa_minus`` counts the neighbours in ``O_i`` of a vertex of
    ``O_{i+1}``; ``alpha_{i+1}`` counts the neighbours in ``O_i`` of a
    vertex of ``O_i``.  :func:`stratify` guarantees both counts are constant.
    """
    orbit_of = s.orbit_of

    def count(v, level):
        return sum(1 for w in g.neighbors(v) if orbit_of[w] == level)

    omega = []
    for i in range(s.d):
        beta = s.orbits[i + 1][0]
        k_minus = count(beta, i)
        omega.append(Fraction(len(s.orbits[i + 1]), len(s.orbits[i])) * k_minus ** 2)
    alpha = [Fraction(count(o[0], i)) for i, o in enumerate(s.orbits)]
    return JacobiData(tuple(omega), tuple(alpha))


def quotient_matrix(j: JacobiData) -> np.ndarray:
    """Symmetric tridiagonal matrix with diagonal ``alpha`` and off-diagonal ``sqrt(omega)``."""
    off = np.sqrt(j.omega_array())
    return np.diag(j.alpha_array()) + np.diag(off, 1) + np.diag(off, -1)


def stratum_vectors(s: Stratification, n: int) -> np.ndarray:
    """Columns are the unit vectors ``|O_m|^{-1/2} sum_{v in O_m} |v>``."""
    phi = np.zeros((n, s.d + 1))
    for m, o in enumerate(s.orbits):
        phi[list(o), m] = 1.0 / math.sqrt(len(o))
    return phi


def reduce_graph(g: Graph, generators, root: int = 0) -> tuple[Stratification, JacobiData]:
    """Orbit partition under ``<generators>``, stratification, and Jacobi sequences."""
    s = stratify(g, orbit_partition(g, generators), root)
    return s, jacobi_sequences(g, s)
