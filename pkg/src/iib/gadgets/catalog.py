"""Exhaustive families of small source instances for answer-preservation sweeps."""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, product
from math import comb
from typing import Iterator

import networkx as nx

from ..graph import Instance
from .sources import CvtInstance, HittingSetInstance, MulticoloredGraphInstance

# Y-enumeration candidates the oracle may spend on one generated instance.
ORACLE_CANDIDATE_BUDGET = 1_000_000

# Soft regression bound on the min-fill width of mq-tw outputs: width <= c q^2.
MQ_TW_WIDTH_FACTOR = 2


def oracle_candidates(inst: Instance) -> int:
    n = inst.graph.n
    return sum(comb(n, j) for j in range(min(inst.l, n) + 1))


def within_oracle_budget(inst: Instance, budget: int = ORACLE_CANDIDATE_BUDGET) -> bool:
    return oracle_candidates(inst) <= budget


def hitting_set_instances(max_n: int = 4, max_m: int = 3, max_h: int = 2) -> Iterator[HittingSetInstance]:
    """Every collection (as a multiset of non-empty subsets) with the given caps."""
    for n in range(1, max_n + 1):
        subsets = [c for r in range(1, n + 1) for c in combinations(range(n), r)]
        for m in range(0, max_m + 1):
            for sets in combinations_with_replacement(subsets, m):
                for h in range(0, max_h + 1):
                    yield HittingSetInstance(n, sets, h)


def cvt_instances(max_nodes: int = 6) -> Iterator[CvtInstance]:
    """Every graph up to isomorphism on 1..max_nodes nodes, every terminal and budget pair."""
    if max_nodes > 7:
        raise ValueError("the graph atlas only covers graphs with at most 7 nodes")
    for H in nx.graph_atlas_g():
        n = H.number_of_nodes()
        if not 1 <= n <= max_nodes:
            continue
        edges = tuple(sorted((min(u, v), max(u, v)) for u, v in H.edges()))
        for s in range(n):
            for k in range(1, n + 1):
                for l in range(0, n):
                    yield CvtInstance(n, edges, s, k, l)


def multicolored_instances(q: int = 2, max_per_class: int = 2) -> Iterator[MulticoloredGraphInstance]:
    """Every class-size profile and every edge set between classes, empty pairs included."""
    for sizes in product(range(1, max_per_class + 1), repeat=q):
        colors = tuple(c for c in range(q) for _ in range(sizes[c]))
        n = len(colors)
        cross = [(u, v) for u, v in combinations(range(n), 2) if colors[u] != colors[v]]
        for mask in range(1 << len(cross)):
            edges = tuple(e for i, e in enumerate(cross) if mask >> i & 1)
            yield MulticoloredGraphInstance(n, edges, colors, q)
