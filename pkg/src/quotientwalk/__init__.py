"""Continuous-time quantum walks on quotient graphs via spectral distributions."""
from .graph import (CayleyError, CayleySpec, Graph, Permutation, PermutationError,
                    build_cayley, compose, degree, inverse)
from .families import Fixture, builtin
from .symmetry import (NotAutomorphism, Stratification, StratificationInvalid,
                       close_subgroup, is_automorphism, orbit_partition, stratify)
from .reduction import (JacobiData, QuantumDecomposition, jacobi_sequences,
                        quantum_decompose, quotient_matrix, reduce_graph)
from .spectra import (PoleError, SpectralAtoms, SpectralError, eval_P, eval_Q1,
                      spectral_atoms, stieltjes_atoms, stieltjes_cf, stieltjes_ratio)
from .walk import (AmplitudeSeries, amplitudes, average_probability,
                   oracle_amplitudes, time_grid, vertex_amplitudes)

__version__ = "0.1.0"
