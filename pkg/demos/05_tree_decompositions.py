"""Dynamic programming over a tree decomposition.

Builds a min-fill decomposition, turns it into nice form, and reads the
smallest possible spread for every immunization budget off the root table.
"""
# %%
import random

from iib.fixtures import path3, random_instance
from iib.oracle import minimize_spread
from iib.treewidth import (
    TreeDecomposition,
    backtrack,
    dp_solve,
    heuristic_decomposition,
    make_nice,
    validate,
)

G = path3()
td = heuristic_decomposition(G)
print("bags", [sorted(b) for b in td.bags], "width", td.width)
ntd = make_nice(td, G)
for u, (kind, bag) in enumerate(zip(ntd.kinds, ntd.bags)):
    print(u, kind, bag, ntd.vertex[u])

# %% a broken decomposition is caught with the violated condition
bad = TreeDecomposition.build([{0, 1}, {1, 2}, {0}], [(0, 1), (1, 2)])
print(validate(G, bad))

# %% root values against the exhaustive oracle
rng = random.Random(4)
inst = random_instance(rng, min_n=8)
H = inst.graph
table = dp_solve(H, make_nice(heuristic_decomposition(H)), 3)
print("dp    ", table.root_values)
print("oracle", minimize_spread(H, 3))
X, Y = backtrack(H, table)
print("best X", sorted(X), "Y", sorted(Y), "largest table", max(table.sizes()))
