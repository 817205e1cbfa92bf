"""Growing connected node sets from a virtual root over the seeds.

All threshold-0 nodes hang off a small tree whose root is the start of
every enumerated set, so each candidate influenced set is connected to it.
"""
# %%
from iib.fixtures import random_instances, star4
from iib.graph import Instance
from iib.kzeta import augment, enumerate_connected, solve_kzeta

Gp = augment(star4(), 2)
print("root", Gp.root, "arity", Gp.arity, "depth", Gp.depth, "size bound", Gp.k_prime)
for S in enumerate_connected(Gp, 2):
    print(sorted(S))

# %% candidate counts grow with the bound
for bound in range(1, 6):
    print(bound, sum(1 for _ in enumerate_connected(Gp, bound)))

# %% solving
for inst in random_instances(3, 5, min_n=5):
    res = solve_kzeta(inst)
    print(inst.graph.n, inst.k, inst.l, res.verdict, res.stats["candidates"])
print(solve_kzeta(Instance(star4(), 0, 2)).verdict)
