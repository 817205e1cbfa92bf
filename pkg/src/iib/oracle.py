"""Exhaustive ground-truth solvers.

Both enumerations are exact by construction and only meant for desk-scale
instances; each refuses graphs above a node cap instead of hanging.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._batch import BatchDiffuser, chunked_combinations
from .graph import Instance, Solution, ThresholdGraph, require_preprocessed, verify

Y_ENUM_MAX_NODES = 20
X_ENUM_MAX_NODES = 22


class InstanceTooLarge(RuntimeError):
    pass


@dataclass
class OracleResult:
    verdict: bool
    best_solution: Solution | None
    # budget j -> min |D_{G,Y}| over |Y| <= j; math.inf where nothing was seen
    min_spread_per_budget: dict[int, float] | None


def _check_cap(G: ThresholdGraph, max_nodes: int | None, default: int) -> None:
    cap = default if max_nodes is None else max_nodes
    if G.n > cap:
        raise InstanceTooLarge(f"{G.n} nodes exceeds the oracle cap of {cap}")


def _prefix_min(per_size: list[float]) -> dict[int, float]:
    out, best = {}, math.inf
    for j, v in enumerate(per_size):
        best = min(best, v)
        out[j] = best
    return out


def _scan_y(G: ThresholdGraph, l: int, k: int | None = None):
    """Min spread per exact |Y| plus the first minimiser for each size.

    With ``k`` set, stop at the first Y whose spread is <= k and return it.
    """
    bd = BatchDiffuser(G)
    per_size = [math.inf] * (l + 1)
    arg = [None] * (l + 1)
    for r in range(0, min(l, G.n) + 1):
        for combos in chunked_combinations(G.n, r):
            sizes = bd.fixpoint(bd.allowed_from_blocked(combos)).sum(axis=0)
            i = int(np.argmin(sizes))
            if k is not None:
                hits = np.flatnonzero(sizes <= k)
                if hits.size:
                    return None, frozenset(int(v) for v in combos[hits[0]])
            if sizes[i] < per_size[r]:
                per_size[r] = int(sizes[i])
                arg[r] = frozenset(int(v) for v in combos[i])
    if k is not None:
        return None, None
    return per_size, arg


def solve_by_y_enumeration(
    inst: Instance, max_nodes: int | None = None, stop_at_first: bool = False
) -> OracleResult:
    """Try every immunized set of size <= l (by size, then lexicographically).

    The reported witness is the first Y reaching the minimum spread at budget
    ``l``. ``stop_at_first`` returns as soon as some Y is good enough; the
    verdict stays exact but the per-budget table is then omitted.
    """
    G = inst.graph
    require_preprocessed(G)
    _check_cap(G, max_nodes, Y_ENUM_MAX_NODES)
    if stop_at_first:
        _, Y = _scan_y(G, inst.l, inst.k)
        if Y is None:
            return OracleResult(False, None, None)
        return OracleResult(True, _witness_from_y(inst, Y), None)
    per_size, arg = _scan_y(G, inst.l)
    table = _prefix_min(per_size)
    verdict = table[inst.l] <= inst.k
    best = None
    if verdict:
        r = min(range(len(per_size)), key=lambda j: (per_size[j], j))
        best = _witness_from_y(inst, arg[r])
    return OracleResult(verdict, best, table)


def _witness_from_y(inst: Instance, Y) -> Solution:
    from .graph import spread

    D = spread(inst.graph, Y)
    sol = verify(inst, D)
    assert sol.verdict, "oracle witness failed verification"
    return sol


def solve_by_x_enumeration(inst: Instance, max_nodes: int | None = None) -> OracleResult:
    """Try every candidate influenced set of size <= k through ``verify``."""
    G = inst.graph
    require_preprocessed(G)
    _check_cap(G, max_nodes, X_ENUM_MAX_NODES)
    bd = BatchDiffuser(G)
    l = inst.l
    # best[j]: min |X'| among candidates whose immunizing set has exactly j nodes
    best = [math.inf] * (G.n + 1)
    first_yes = None
    for r in range(0, inst.k + 1):
        for combos in chunked_combinations(G.n, r):
            Xp = bd.fixpoint(bd.allowed_from_members(combos))
            Y = ~Xp & (bd.neighbor_counts(Xp) >= bd.t)
            xs = Xp.sum(axis=0)
            ys = Y.sum(axis=0)
            for j in np.unique(ys):
                best[j] = min(best[j], int(xs[ys == j].min()))
            if first_yes is None:
                hits = np.flatnonzero(ys <= l)
                if hits.size:
                    first_yes = frozenset(int(v) for v in combos[hits[0]])
    table = _prefix_min(best[: l + 1] + [math.inf] * max(0, l + 1 - len(best)))
    if first_yes is None:
        return OracleResult(False, None, table)
    sol = verify(inst, first_yes)
    assert sol.verdict
    return OracleResult(True, sol, table)


def minimize_spread(G: ThresholdGraph, l: int, max_nodes: int | None = None) -> dict[int, int]:
    """Exact minimum spread for every budget ``0..l``."""
    require_preprocessed(G)
    _check_cap(G, max_nodes, Y_ENUM_MAX_NODES)
    per_size, _ = _scan_y(G, l)
    return {j: int(v) for j, v in _prefix_min(per_size).items()}
