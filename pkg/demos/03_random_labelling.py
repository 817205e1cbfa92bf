"""Random labellings and universal families.

Each trial keeps a random half of the nodes and lets the cascade run inside
them. Replacing the random labels by a universal family makes the search
exact.
"""
# %%
import numpy as np

from iib.fixtures import path3
from iib.graph import Instance
from iib.kl import solve_derandomized, solve_randomized, trial
from iib.universal import build_universal_set, is_universal

inst = Instance(path3(), 1, 1)
print("labelling 100:", trial(inst, [1, 0, 0]))
print("labelling 111:", trial(inst, [1, 1, 1]))

# %% empirical success rate against the per-trial bound
trials = 20
rate = np.mean([solve_randomized(inst, trials, s).verdict for s in range(1000)])
bound = 1 - (1 - 2.0 ** -(inst.k + inst.l)) ** trials
print(f"success {rate:.3f}, guaranteed at least {bound:.3f}")

# %% family sizes compared with the full cube
for n, i in [(8, 2), (12, 3), (20, 3), (30, 4)]:
    U = build_universal_set(n, i)
    print(f"n={n:2d} i={i}: {len(U):7d} vectors (cube {2**n}), universal={is_universal(U.vectors, i)}")

# %% exact answer from the family
print(solve_derandomized(inst).verdict, solve_derandomized(inst).stats)
