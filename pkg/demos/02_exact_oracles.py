"""Exhaustive solvers as ground truth.

Two enumerations answer the same question from opposite ends: one tries
every small immunized set, the other every small influenced set.
"""
# %%
import random
import time

from iib.fixtures import random_instance, star4
from iib.graph import Instance
from iib.oracle import minimize_spread, solve_by_x_enumeration, solve_by_y_enumeration

# %% best spread per immunization budget on the star
print(minimize_spread(star4(), 3))

# %% both enumerations agree on a batch of random instances
rng = random.Random(0)
start = time.perf_counter()
agree = 0
for _ in range(100):
    inst = random_instance(rng)
    agree += solve_by_y_enumeration(inst).verdict == solve_by_x_enumeration(inst).verdict
print(f"{agree}/100 agree in {time.perf_counter() - start:.2f}s")

# %% a witness from the immunized side
res = solve_by_y_enumeration(Instance(star4(), 3, 1))
print(res.verdict, sorted(res.best_solution.influenced), sorted(res.best_solution.immunized))
