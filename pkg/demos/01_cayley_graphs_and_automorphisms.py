"""
Cayley graphs and their automorphisms
=====================================

Build the Cayley graphs of S3 and Z_n, check which vertex permutations are
automorphisms, and close a set of generators into a subgroup.
"""

# %%
# Permutations compose right-to-left: ``compose(p, q)`` applies ``q`` first.
from quotientwalk import Permutation, builtin, close_subgroup, compose, degree, is_automorphism
from quotientwalk.families import fig1

p = Permutation.parse("(0 1)", 3)
q = Permutation.parse("(1 2)", 3)
print("(0 1) o (1 2) =", compose(p, q))
print("(1 2) o (0 1) =", compose(q, p))

# %%
# The S3 Cayley graph for two adjacent transpositions is a hexagon.
hexagon = builtin("s3-two-gen").graph
for v in range(hexagon.n):
    print(f"{hexagon.label(v):>7} ~ {[hexagon.label(w) for w in hexagon.neighbors(v)]}")
print("degrees:", {degree(hexagon, v) for v in range(hexagon.n)})

# %%
# Adding the third transposition gives the complete bipartite graph K_{3,3}.
k33 = builtin("s3-three-gen").graph
print("S3 with all transpositions:", len(k33.edges), "edges, degree", degree(k33, 0))

# %%
# A four-cycle with a chord: the half-turn (0 2)(1 3) preserves adjacency,
# the rotation (0 1 2) does not.
g = fig1().graph
for text in ["(0 2)(1 3)", "(0 1 2)"]:
    print(text, "automorphism:", is_automorphism(g, Permutation.parse(text, 4)))

# %%
# Subgroup closure is a breadth-first search over products of generators.
H = close_subgroup([Permutation.parse("(0 1 2)", 3), Permutation.parse("(0 1)", 3)])
print("|<(0 1 2), (0 1)>| =", len(H))
print([str(h) for h in H])
