"""Algorithm for parameters (k, zeta): seed tree + rooted connected sets.

Every component of a minimal influenced set contains a threshold-0 node.
Hanging a balanced Delta-ary tree over those seeds makes any such set
connected to the tree root after adding at most ``depth`` tree nodes per
component plus the root, so enumerating the connected sets through the root
of size <= k * depth + 1 reaches every minimal witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import Instance, ThresholdGraph, require_preprocessed
from .result import SolveResult, certified, negative
from .graph import verify


class EmptySeedError(ValueError):
    pass


@dataclass(frozen=True)
class AugmentedGraph:
    base: ThresholdGraph
    adjacency: tuple[tuple[int, ...], ...]  # over base nodes + tree nodes
    root: int
    arity: int
    depth: int
    k_prime: int

    @property
    def added_nodes(self) -> range:
        return range(self.base.n, len(self.adjacency))


def augment(G: ThresholdGraph, k: int) -> AugmentedGraph:
    seeds = G.zero_threshold_nodes()
    if not seeds:
        raise EmptySeedError("graph has no threshold-0 node to hang the tree on")
    arity = max(G.max_degree(), 2)
    adj = [list(a) for a in G.adjacency]

    def new_parent(children):
        p = len(adj)
        adj.append(list(children))
        for c in children:
            adj[c].append(p)
        return p

    level = list(seeds)
    depth = 0
    if len(level) == 1:
        level = [new_parent(level)]
        depth = 1
    while len(level) > 1:
        level = [new_parent(level[i:i + arity]) for i in range(0, len(level), arity)]
        depth += 1
    root = level[0]
    adjacency = tuple(tuple(sorted(a)) for a in adj)
    return AugmentedGraph(G, adjacency, root, arity, depth, k * depth + 1)


def connected_sets(adjacency: Sequence[Sequence[int]], root: int, bound: int) -> Iterator[frozenset]:
    """Every node set containing ``root`` that induces a connected subgraph, size <= bound.

    Each set is produced once: a branch that skips frontier node ``v`` bans it
    for the whole branch, so a set is only built by always adding its
    smallest frontier member next.
    """
    if bound < 1:
        return

    def rec(S, frontier, banned):
        yield frozenset(S)
        if len(S) >= bound:
            return
        order = sorted(frontier)
        for idx, v in enumerate(order):
            nb = banned | set(order[:idx])
            S2 = S | {v}
            f2 = set(order[idx + 1:])
            f2.update(w for w in adjacency[v] if w not in S2 and w not in nb)
            yield from rec(S2, f2, nb)

    yield from rec({root}, set(adjacency[root]), frozenset())


def enumerate_connected(Gp: AugmentedGraph, bound: int) -> Iterator[frozenset]:
    return connected_sets(Gp.adjacency, Gp.root, bound)


def solve_kzeta(inst: Instance) -> SolveResult:
    G = inst.graph
    require_preprocessed(G)
    if G.n == 0:
        return certified(inst, (), "kzeta", candidates=0)
    Gp = augment(G, inst.k)
    stats = {"k_prime": Gp.k_prime, "tree_depth": Gp.depth, "arity": Gp.arity}
    seen = set()
    candidates = 0
    for Xp in enumerate_connected(Gp, Gp.k_prime):
        candidates += 1
        X = frozenset(v for v in Xp if v < G.n)
        if X in seen:
            continue
        seen.add(X)
        if verify(inst, X).verdict:
            return certified(inst, X, "kzeta", candidates=candidates, **stats)
    return negative("kzeta", candidates=candidates, **stats)
