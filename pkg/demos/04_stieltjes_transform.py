"""
Three faces of the Stieltjes transform
======================================

For a finite chain the transform of the spectral measure is at once a
continued fraction in (omega, alpha), a ratio of two orthogonal polynomials,
and a sum of simple poles at the quadrature nodes.
"""

# %%
import numpy as np

from quotientwalk import JacobiData, eval_P, eval_Q1, spectral_atoms, stieltjes_atoms, stieltjes_cf, stieltjes_ratio
from quotientwalk.spectra import residue_weights

hexagon = JacobiData.from_values([2, 1, 2], [0, 0, 0, 0])
atoms = spectral_atoms(hexagon)

for z in [3.0, 0.5 + 1j, -1.2 - 0.3j]:
    print(f"z = {z}: cf {stieltjes_cf(hexagon, z):.12f}  "
          f"Q/P {stieltjes_ratio(hexagon, z):.12f}  poles {stieltjes_atoms(atoms, z):.12f}")

# %%
# The top polynomial of the hexagon chain is x^4 - 5x^2 + 4; its roots are
# the nodes and the residues of Q/P there are the weights.
x = np.linspace(-2, 2, 5)
print("\nP_4(x):", eval_P(hexagon, 4, x), " vs", x ** 4 - 5 * x ** 2 + 4)
print("Q_3(x):", eval_Q1(hexagon, 3, x), " vs", x ** 3 - 3 * x)
print("residues:", np.round(residue_weights(hexagon, atoms.nodes), 12))
print("weights: ", np.round(atoms.weights, 12))

# %%
# Any positive chain works, not just ones coming from graphs.
chain = JacobiData.from_values(["1/2", 3, "5/4"], [1, 0, 2, "1/3"])
a = spectral_atoms(chain)
print("\ncustom chain nodes:", np.round(a.nodes, 6))
print("mass:", a.weights.sum(), " first moment:", a.moment(1))
