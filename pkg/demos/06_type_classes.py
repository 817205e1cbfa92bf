"""Twin classes and prefix selections.

Nodes with the same neighbourhood are interchangeable apart from their
thresholds, so only per-class prefixes in threshold order need checking.
"""
# %%
import random

from iib.fixtures import path3, random_instance, star4
from iib.graph import immunizing_set, is_minimal, spread
from iib.nd import exchange_influenced, solve_nd_k, solve_nd_l, type_partition

for G in (path3(), star4()):
    p = type_partition(G)
    print([(kind, [G.label(v) for v in c]) for kind, c in zip(p.kinds, p.classes)])

# %% swapping a class member for a cheaper one keeps the witness valid
rng = random.Random(2)
shown = 0
while shown < 3:
    inst = random_instance(rng)
    G = inst.graph
    part = type_partition(G)
    X = spread(G, within=[v for v in G.nodes if rng.random() < 0.5])
    for i in range(part.nd):
        Xp = exchange_influenced(G, part, X, i)
        if Xp is not None:
            print(sorted(X), "->", sorted(Xp), is_minimal(G, Xp),
                  len(immunizing_set(G, X)), len(immunizing_set(G, Xp)))
            shown += 1
            break

# %% both searches with their tuple counters
inst = random_instance(random.Random(9), min_n=9)
for solver in (solve_nd_k, solve_nd_l):
    res = solver(inst)
    print(solver.__name__, res.verdict, res.stats)
