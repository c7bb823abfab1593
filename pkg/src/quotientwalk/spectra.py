"""Orthogonal polynomials of a Jacobi chain and its atomic spectral distribution.

The polynomials follow

    P_0 = 1,  P_1 = x - alpha_1,
    P_{n+1} = (x - alpha_{n+1}) P_n - omega_n P_{n-1},

and the associated family ``Q^(1)`` uses the same recursion with every
coefficient shifted by one.  Nodes and weights of the spectral measure come
from the eigendecomposition of the quotient matrix (Golub-Welsch); the
continued fraction and the ``Q/P`` ratio are kept as independent checks.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .reduction import JacobiData

MERGE_RTOL = 1e-8
POLE_ATOL = 1e-12


class SpectralError(ArithmeticError):
    """Recovered atoms fail a consistency check."""


class PoleError(ZeroDivisionError):
    """Evaluation point lies on (or within 1e-12 of) a node of the measure."""


def _poly_table(alpha, omega, x, upto):
    """Rows ``0..upto`` of the three-term recursion evaluated at ``x``."""
    x = np.asarray(x)
    dtype = np.result_type(x, float)
    rows = np.empty((upto + 1,) + x.shape, dtype=dtype)
    rows[0] = 1
    if upto >= 1:
        rows[1] = x - alpha[0]
    for k in range(1, upto):
        rows[k + 1] = (x - alpha[k]) * rows[k] - omega[k - 1] * rows[k - 1]
    return rows


def eval_P_all(j: JacobiData, x, upto: int | None = None) -> np.ndarray:
    """``P_0(x) .. P_upto(x)`` stacked along axis 0 (``upto`` defaults to d+1)."""
    upto = j.dim if upto is None else upto
    if not 0 <= upto <= j.dim:
        raise IndexError(f"P index {upto} outside 0..{j.dim}")
    return _poly_table(j.alpha_array(), j.omega_array(), x, upto)


def eval_P(j: JacobiData, m: int, x):
    if not 0 <= m <= j.dim:
        raise IndexError(f"P index {m} outside 0..{j.dim}")
    return eval_P_all(j, x, m)[m]


def eval_Q1(j: JacobiData, m: int, x):
    if not 0 <= m <= j.d:
        raise IndexError(f"Q1 index {m} outside 0..{j.d}")
    return _poly_table(j.alpha_array()[1:], j.omega_array()[1:], x, m)[m]


def eval_P_derivative(j: JacobiData, m: int, x):
    """``P_m'(x)`` by differentiating the recursion."""
    if not 0 <= m <= j.dim:
        raise IndexError(f"P index {m} outside 0..{j.dim}")
    alpha, omega = j.alpha_array(), j.omega_array()
    x = np.asarray(x)
    p_prev, p = np.ones_like(x, dtype=np.result_type(x, float)), x - alpha[0]
    dp_prev, dp = np.zeros_like(p_prev), np.ones_like(p_prev)
    if m == 0:
        return dp_prev
    for k in range(1, m):
        p_prev, p, dp_prev, dp = (
            p,
            (x - alpha[k]) * p - omega[k - 1] * p_prev,
            dp,
            p + (x - alpha[k]) * dp - omega[k - 1] * dp_prev,
        )
    return dp


@dataclass(frozen=True)
class SpectralAtoms:
    """``mu = sum_l weights[l] * delta(x - nodes[l])`` with sorted distinct nodes."""

    nodes: np.ndarray
    weights: np.ndarray

    def moment(self, m: int) -> float:
        return float(np.sum(self.weights * self.nodes ** m))

    def to_dict(self) -> dict:
        return {"nodes": self.nodes.tolist(), "weights": self.weights.tolist()}

    @classmethod
    def from_dict(cls, d: dict) -> SpectralAtoms:
        return cls(np.asarray(d["nodes"], dtype=float), np.asarray(d["weights"], dtype=float))


def save_atoms(atoms: SpectralAtoms, path: str | Path):
    with open(path, "w") as f:
        json.dump(atoms.to_dict(), f)


def check_atoms(j: JacobiData, atoms: SpectralAtoms, *, mass_tol=1e-10, moment_tol=1e-9):
    """Raise :class:`SpectralError` unless ``atoms`` is a probability measure
    whose first two moments match the chain."""
    w, x = atoms.weights, atoms.nodes
    if len(w) != len(x) or len(x) == 0:
        raise SpectralError("nodes and weights must be non-empty and of equal length")
    if np.any(w <= 0):
        raise SpectralError(f"non-positive weight in {w}")
    if np.any(np.diff(x) <= 0):
        raise SpectralError("nodes are not strictly increasing")
    if abs(w.sum() - 1.0) > mass_tol:
        raise SpectralError(f"total mass {w.sum()!r} != 1")
    a1 = float(j.alpha[0])
    w1 = float(j.omega[0]) if j.d else 0.0
    m1, m2 = atoms.moment(1), atoms.moment(2)
    if abs(m1 - a1) > moment_tol or abs(m2 - (a1 * a1 + w1)) > moment_tol:
        raise SpectralError(f"moments ({m1}, {m2}) inconsistent with alpha_1={a1}, omega_1={w1}")


def spectral_atoms(j: JacobiData) -> SpectralAtoms:
    """Gauss quadrature nodes/weights of the chain's spectral measure.

    Nodes are the eigenvalues of the quotient matrix; weights are the
    squared first components of its normalised eigenvectors.  Nodes closer
    than ``MERGE_RTOL`` times the spectral diameter are merged.
    """
    alpha = j.alpha_array()
    off = np.sqrt(j.omega_array())
    vals, vecs = eigh_tridiagonal(alpha, off)
    weights = vecs[0, :] ** 2

    tol = MERGE_RTOL * (vals[-1] - vals[0])
    nodes, merged = [vals[0]], [weights[0]]
    for x, w in zip(vals[1:], weights[1:]):
        if x - nodes[-1] <= tol:
            # weighted mean keeps the first moment intact
            total = merged[-1] + w
            nodes[-1] = (nodes[-1] * merged[-1] + x * w) / total
            merged[-1] = total
        else:
            nodes.append(x)
            merged.append(w)
    atoms = SpectralAtoms(np.array(nodes), np.array(merged))
    check_atoms(j, atoms)

    if len(nodes) == j.dim:
        residues = residue_weights(j, atoms.nodes)
        bad = np.abs(residues - atoms.weights) > 1e-8
        if np.any(bad):
            raise SpectralError(
                f"residue check failed at nodes {atoms.nodes[bad]}: {residues[bad]} vs {atoms.weights[bad]}")
    return atoms


def residue_weights(j: JacobiData, nodes) -> np.ndarray:
    """Residues ``Q_d^(1)(x_l) / P_{d+1}'(x_l)`` of the Stieltjes transform at simple poles."""
    nodes = np.asarray(nodes, dtype=float)
    return eval_Q1(j, j.d, nodes) / eval_P_derivative(j, j.dim, nodes)


def _check_pole(j: JacobiData, z: complex):
    vals = eigh_tridiagonal(j.alpha_array(), np.sqrt(j.omega_array()), eigvals_only=True)
    if np.min(np.abs(z - vals)) <= POLE_ATOL:
        raise PoleError(f"z={z} is within {POLE_ATOL} of a node")


def stieltjes_cf(j: JacobiData, z: complex) -> complex:
    """Finite continued fraction ``1/(z - a1 - w1/(z - a2 - ...))``, evaluated from the bottom."""
    z = complex(z)
    _check_pole(j, z)
    alpha, omega = j.alpha_array(), j.omega_array()
    t = z - alpha[-1]
    for k in range(j.d - 1, -1, -1):
        # t is None stands for an infinite tail, which then drops out
        if t is None:
            t = z - alpha[k]
        elif t == 0:
            t = None
        else:
            t = z - alpha[k] - omega[k] / t
    return 0j if t is None else 1 / t


def stieltjes_ratio(j: JacobiData, z: complex) -> complex:
    """``Q_d^(1)(z) / P_{d+1}(z)``."""
    z = complex(z)
    _check_pole(j, z)
    return complex(eval_Q1(j, j.d, z) / eval_P(j, j.dim, z))


def stieltjes_atoms(atoms: SpectralAtoms, z: complex) -> complex:
    """``sum_l A_l / (z - x_l)``."""
    z = complex(z)
    if np.min(np.abs(z - atoms.nodes)) <= POLE_ATOL:
        raise PoleError(f"z={z} is within {POLE_ATOL} of a node")
    return complex(np.sum(atoms.weights / (z - atoms.nodes)))
