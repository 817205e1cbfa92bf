"""Instances with known answers from classic hard problems.

Each generator keeps the source answer, so the generated instance comes
with an expected verdict that the exhaustive solver can confirm.
"""
# %%
from iib.gadgets import gen_cvt, gen_hs_deg3, gen_hs_zero, gen_mq_nd, gen_mq_tw
from iib.gadgets.sources import CvtInstance, HittingSetInstance, MulticoloredGraphInstance
from iib.nd import type_partition
from iib.oracle import solve_by_y_enumeration
from iib.treewidth import heuristic_decomposition


def report(g):
    inst = g.instance
    got = solve_by_y_enumeration(inst, max_nodes=inst.graph.n, stop_at_first=True).verdict
    print(f"{g.provenance['generator']:6s} n={inst.graph.n:3d} k={inst.k} l={inst.l} "
          f"expected={g.expected_verdict} oracle={got}")


hs = HittingSetInstance(3, ((0, 1), (1, 2), (0, 2)), 1)
report(gen_hs_zero(hs))
report(gen_hs_deg3(hs))
print("max degree of the bounded-degree version:", gen_hs_deg3(hs).raw_graph.max_degree())

report(gen_cvt(CvtInstance(4, ((0, 1), (1, 2), (2, 3), (0, 3)), 0, 2, 2)))

# %% multicoloured clique sources
mq = MulticoloredGraphInstance(4, ((0, 2), (1, 3)), (0, 0, 1, 1), 2)
g = gen_mq_tw(mq)
report(g)
print("min-fill width", heuristic_decomposition(g.instance.graph).width)
g = gen_mq_nd(mq)
report(g)
print("type classes", type_partition(g.raw_graph).nd, "labels", g.raw_graph.labels[:6])
