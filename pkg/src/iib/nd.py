"""Neighbourhood-diversity algorithms.

Nodes of one type are interchangeable up to their thresholds, so it is
enough to pick, per type class, a prefix of the members sorted by threshold.
Both algorithms walk those prefix tuples by total size, each size in
colexicographic order, and stop at the first tuple that works.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Sequence

import numpy as np

from ._batch import BatchDiffuser
from .graph import Instance, ThresholdGraph, immunizing_set, require_preprocessed, spread
from .result import SolveResult, certified, negative


@dataclass(frozen=True)
class TypePartition:
    classes: tuple[tuple[int, ...], ...]  # members sorted by (threshold, id)
    kinds: tuple[str, ...]  # "clique" or "independent"
    adjacency: np.ndarray  # (nd, nd) bool; diagonal True for clique classes

    @property
    def nd(self) -> int:
        return len(self.classes)

    def class_of(self) -> dict[int, int]:
        return {v: i for i, members in enumerate(self.classes) for v in members}


def type_partition(G: ThresholdGraph) -> TypePartition:
    """Coarsest partition into false twins (same open neighbourhood) or true twins."""
    open_groups, closed_groups = defaultdict(list), defaultdict(list)
    for v in G.nodes:
        nb = frozenset(G.adjacency[v])
        open_groups[nb].append(v)
        closed_groups[nb | {v}].append(v)
    group = {}
    for v in G.nodes:
        nb = frozenset(G.adjacency[v])
        if len(open_groups[nb]) > 1:
            group[v] = ("independent", open_groups[nb])
        elif len(closed_groups[nb | {v}]) > 1:
            group[v] = ("clique", closed_groups[nb | {v}])
        else:
            group[v] = ("independent", [v])
    seen, classes, kinds = set(), [], []
    for v in G.nodes:
        if v in seen:
            continue
        kind, members = group[v]
        seen.update(members)
        classes.append(tuple(sorted(members, key=lambda x: (G.thresholds[x], x))))
        kinds.append(kind)
    nd = len(classes)
    adj = np.zeros((nd, nd), dtype=bool)
    for i, members in enumerate(classes):
        rep = set(G.adjacency[members[0]])
        for j, other in enumerate(classes):
            adj[i, j] = other[0] in rep or (i == j and kinds[i] == "clique")
    return TypePartition(tuple(classes), tuple(kinds), adj)


def compositions(total: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Tuples with 0 <= f_i <= caps[i] summing to ``total``, in colexicographic order."""

    def rec(idx, remaining):
        if idx < 0:
            if remaining == 0:
                yield ()
            return
        room = sum(caps[:idx])
        for x in range(max(0, remaining - room), min(caps[idx], remaining) + 1):
            for head in rec(idx - 1, remaining - x):
                yield head + (x,)

    yield from rec(len(caps) - 1, total)


def tuple_bound(budget: int, nd: int) -> int:
    """Upper bound on tuples with positive total, 2^(budget + nd - 1)."""
    return 2 ** max(budget + nd - 1, 0)


def _membership(part: TypePartition, n: int, tuples: list[tuple[int, ...]]) -> np.ndarray:
    M = np.zeros((n, len(tuples)), dtype=bool)
    for b, tup in enumerate(tuples):
        for members, f in zip(part.classes, tup):
            M[list(members[:f]), b] = True
    return M


def _prefix_set(part: TypePartition, tup) -> frozenset:
    return frozenset(v for members, f in zip(part.classes, tup) for v in members[:f])


def _search(inst: Instance, budget: int, accept, chunk: int = 2048):
    """Return (partition, first accepted tuple or None, tuples examined)."""
    part = type_partition(inst.graph)
    caps = [len(c) for c in part.classes]
    examined = 0
    for f in range(1, min(budget, inst.graph.n) + 1):
        it = compositions(f, caps)
        while True:
            block = list(islice(it, chunk))
            if not block:
                break
            ok = accept(_membership(part, inst.graph.n, block))
            hits = np.flatnonzero(ok)
            if hits.size:
                examined += int(hits[0]) + 1
                return part, block[hits[0]], examined
            examined += len(block)
    return part, None, examined


def solve_nd_k(inst: Instance) -> SolveResult:
    """Influenced-set side: X = threshold prefixes per class, |X| <= k."""
    G = inst.graph
    require_preprocessed(G)
    bd = BatchDiffuser(G)
    if sum(1 for t in G.thresholds if t == 0) <= inst.l:
        return certified(inst, (), "nd-k", tuples=0, empty_selection=True)

    def accept(X):
        Y = ~X & (bd.neighbor_counts(X) >= bd.t)
        return Y.sum(axis=0) <= inst.l

    part, tup, examined = _search(inst, inst.k, accept)
    stats = {"nd": part.nd, "tuples": examined, "tuple_bound": tuple_bound(inst.k, part.nd)}
    if tup is None:
        return negative("nd-k", **stats)
    X = spread(G, within=_prefix_set(part, tup))
    return certified(inst, X, "nd-k", selection=tup, **stats)


def solve_nd_l(inst: Instance) -> SolveResult:
    """Immunized-set side: Y = threshold prefixes per class, |Y| <= l."""
    G = inst.graph
    require_preprocessed(G)
    bd = BatchDiffuser(G)
    if G.n <= inst.k:
        return certified(inst, spread(G), "nd-l", tuples=0, empty_selection=True)

    def accept(Y):
        return bd.fixpoint(~Y).sum(axis=0) <= inst.k

    part, tup, examined = _search(inst, inst.l, accept)
    stats = {"nd": part.nd, "tuples": examined, "tuple_bound": tuple_bound(inst.l, part.nd)}
    if tup is None:
        return negative("nd-l", **stats)
    X = spread(G, _prefix_set(part, tup))
    return certified(inst, X, "nd-l", selection=tup, **stats)


def exchange_influenced(G: ThresholdGraph, part: TypePartition, X, i: int) -> frozenset | None:
    """Swap the highest-threshold member of X in class ``i`` for a member of Y(X) in that class.

    ``X`` must be minimal. The replacement is the lowest-threshold member of
    Y(X) in the class whose threshold does not exceed the removed one; returns
    None when the class offers no such pair.
    """
    X = frozenset(X)
    inside = [v for v in part.classes[i] if v in X]
    if not inside:
        return None
    u = max(inside, key=lambda v: (G.thresholds[v], v))
    Y = immunizing_set(G, X)
    cands = [v for v in part.classes[i] if v in Y and G.thresholds[v] <= G.thresholds[u]]
    if not cands:
        return None
    return (X - {u}) | {cands[0]}


def exchange_immunized(G: ThresholdGraph, part: TypePartition, Y, i: int) -> frozenset | None:
    """Swap the highest-threshold member of Y in class ``i`` for an influenced one of no larger threshold."""
    Y = frozenset(Y)
    inside = [v for v in part.classes[i] if v in Y]
    if not inside:
        return None
    v = max(inside, key=lambda x: (G.thresholds[x], x))
    D = spread(G, Y)
    cands = [u for u in part.classes[i] if u in D and G.thresholds[u] <= G.thresholds[v]]
    if not cands:
        return None
    return (Y - {v}) | {cands[0]}
