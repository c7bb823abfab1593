"""
Reducing a walk on S3 to a chain of strata
==========================================

Orbits of an automorphism subgroup stratify the graph.  The walk started at
the identity never leaves the span of the stratum vectors, so it is fully
described by a small tridiagonal matrix.
"""

# %%
import numpy as np

from quotientwalk import (amplitudes, builtin, oracle_amplitudes, quotient_matrix, reduce_graph,
                          spectral_atoms, vertex_amplitudes)

for name in ["s3-two-gen", "s3-three-gen"]:
    fx = builtin(name)
    strat, jac = reduce_graph(fx.graph, fx.generators, fx.root)
    print(f"\n== {name} ==")
    print("strata:", [[fx.graph.label(v) for v in o] for o in strat.orbits])
    print("omega:", [str(w) for w in jac.omega], " alpha:", [str(a) for a in jac.alpha])
    print("quotient matrix:\n", np.round(quotient_matrix(jac), 4))

    # %%
    # Gauss quadrature of the chain: eigenvalues and squared first components.
    atoms = spectral_atoms(jac)
    for x, w in zip(atoms.nodes, atoms.weights):
        print(f"  atom at {x:+.4f} with weight {w:.4f}")

    # %%
    # Stratum amplitudes from the quadrature formula, checked against direct
    # diagonalisation of the 6x6 adjacency matrix.
    t = np.linspace(0, 2 * np.pi, 9)
    q = amplitudes(jac, atoms, t)
    ref = oracle_amplitudes(fx.graph, strat, t)
    print("max |spectral - oracle| =", np.abs(q.amplitudes - ref.amplitudes).max())
    print("stratum probabilities at t = pi/2:",
          np.round(np.abs(amplitudes(jac, atoms, [np.pi / 2]).amplitudes[:, 0]) ** 2, 4))

    # %%
    # Every vertex of a stratum carries the same amplitude, q_m / sqrt(|O_m|).
    per_vertex = vertex_amplitudes(strat, q)
    print("total probability over vertices:", np.round((np.abs(per_vertex) ** 2).sum(axis=0), 12))
