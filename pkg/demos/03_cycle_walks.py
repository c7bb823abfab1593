"""
Walks on cycles
===============

The reflection k <-> n-k folds C_n into a path of about n/2 strata.  The
spectral measure seen from vertex 0 puts weight 1/n on +-2 and 2/n on the
remaining eigenvalues 2 cos(2 pi l / n).
"""

# %%
import math

import numpy as np

from quotientwalk import amplitudes, average_probability, builtin, reduce_graph, spectral_atoms

for n in [4, 5, 8, 9]:
    fx = builtin("cycle", n)
    strat, jac = reduce_graph(fx.graph, fx.generators)
    atoms = spectral_atoms(jac)
    print(f"\nC_{n}: strata sizes {list(strat.sizes)}")
    print("  omega", [str(w) for w in jac.omega], "alpha", [str(a) for a in jac.alpha])
    print("  nodes  ", np.round(atoms.nodes, 4))
    print("  weights", np.round(atoms.weights * n, 4), "/ n")

# %%
# Return amplitude on C_4 is (cos 2t + 1) / 2.
fx = builtin("cycle", 4)
strat, jac = reduce_graph(fx.graph, fx.generators)
t = np.linspace(0, math.pi, 5)
print("\nC_4 q_0(t):", np.round(amplitudes(jac, spectral_atoms(jac), t).amplitudes[0].real, 6))
print("closed form:", np.round((np.cos(2 * t) + 1) / 2, 6))

# %%
# Long-time average probability of each stratum on a larger cycle.
fx = builtin("cycle", 64)
strat, jac = reduce_graph(fx.graph, fx.generators)
atoms = spectral_atoms(jac)
pbar = [average_probability(jac, atoms, m) for m in range(jac.dim)]
print("\nC_64 average stratum probabilities:")
print("  first five:", np.round(pbar[:5], 5), " sum:", round(sum(pbar), 6))
