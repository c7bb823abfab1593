"""Continuous-time quantum walk amplitudes on the strata of a reduced graph.

The Hamiltonian is the adjacency matrix (hbar = 1) and the walker starts in
``|phi_0>``.  :func:`amplitudes` evaluates the quadrature formula

    q_m(t) = (w_1 ... w_m)^{-1/2} sum_l A_l exp(-i x_l t) P_m(x_l)

while :func:`oracle_amplitudes` diagonalises the full adjacency matrix and
serves as ground truth.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .reduction import JacobiData, stratum_vectors
from .spectra import SpectralAtoms, check_atoms, eval_P_all
from .symmetry import Stratification


def time_grid(start: float = 0.0, stop: float = 4 * math.pi, count: int = 256) -> np.ndarray:
    if count < 1:
        raise ValueError("count must be >= 1")
    if stop < start:
        raise ValueError("stop must be >= start")
    return np.linspace(start, stop, count)


@dataclass(frozen=True)
class AmplitudeSeries:
    """``amplitudes[m, k]`` is ``q_m(times[k])``."""

    times: np.ndarray
    amplitudes: np.ndarray

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def total_probability(self) -> np.ndarray:
        return self.probabilities.sum(axis=0)

    def to_dict(self) -> dict:
        return {
            "times": self.times.tolist(),
            "re": self.amplitudes.real.tolist(),
            "im": self.amplitudes.imag.tolist(),
        }


def amplitudes(j: JacobiData, atoms: SpectralAtoms, times) -> AmplitudeSeries:
    check_atoms(j, atoms)
    times = np.atleast_1d(np.asarray(times, dtype=float))
    P = eval_P_all(j, atoms.nodes, j.d)                     # (d+1, L)
    phases = np.exp(-1j * np.outer(atoms.nodes, times))     # (L, T)
    q = (P * atoms.weights) @ phases
    q /= np.sqrt(j.omega_products())[:, None]
    return AmplitudeSeries(times, q)


def vertex_amplitudes(s: Stratification, series: AmplitudeSeries) -> np.ndarray:
    """Spread each stratum amplitude evenly: vertex ``v`` in ``O_m`` gets ``q_m / sqrt(|O_m|)``."""
    if series.amplitudes.shape[0] != len(s.orbits):
        raise ValueError(
            f"{series.amplitudes.shape[0]} amplitude rows for {len(s.orbits)} strata")
    sizes = np.array(s.sizes, dtype=float)
    idx = np.array(s.orbit_of)
    return series.amplitudes[idx] / np.sqrt(sizes[idx])[:, None]


def average_probability(j: JacobiData, atoms: SpectralAtoms, m: int) -> float:
    """Long-time average of ``|q_m(t)|^2``; valid for distinct nodes."""
    if not 0 <= m <= j.d:
        raise IndexError(f"stratum {m} outside 0..{j.d}")
    Pm = eval_P_all(j, atoms.nodes, m)[m]
    return float(np.sum(atoms.weights ** 2 * Pm ** 2) / j.omega_products()[m])


def oracle_amplitudes(g: Graph, s: Stratification, times, hamiltonian=None) -> AmplitudeSeries:
    """``<phi_m| exp(-iHt) |phi_0>`` by dense diagonalisation of the full graph.

    ``hamiltonian`` defaults to the adjacency matrix; any real symmetric
    ``n x n`` matrix may be passed instead.
    """
    times = np.atleast_1d(np.asarray(times, dtype=float))
    H = g.adjacency().astype(float) if hamiltonian is None else np.asarray(hamiltonian, dtype=float)
    if H.shape != (g.n, g.n):
        raise ValueError(f"hamiltonian shape {H.shape} does not match {g.n} vertices")
    lam, V = np.linalg.eigh(H)
    coeffs = V.T @ stratum_vectors(s, g.n)                  # (n, d+1)
    evolved = coeffs[:, :1] * np.exp(-1j * np.outer(lam, times))
    return AmplitudeSeries(times, coeffs.T @ evolved)


def max_deviation(a: AmplitudeSeries, b: AmplitudeSeries) -> float:
    if a.amplitudes.shape != b.amplitudes.shape:
        raise ValueError("amplitude series have different shapes")
    return float(np.max(np.abs(a.amplitudes - b.amplitudes)))
