"""Dynamic programme over a nice tree decomposition.

For a fixed immunized set Y the influenced set is the least "closed" set:
a set X disjoint from Y such that every node outside X and Y has fewer than
t(v) neighbours in X. The minimum spread with at most j immunized nodes is
therefore the minimum |X| over pairs (X, Y) with |Y| <= j satisfying that
local condition, which a bag-by-bag programme can check.

A table key is ``(C, T)`` over the sorted bag. ``C`` gives each bag node's
state (safe, influenced, immunized). For safe nodes ``T`` holds the residual
threshold: t(v) minus the influenced neighbours already forgotten, always
>= 1. The entry is a list over j of the fewest influenced nodes in the
subtree graph (bag included) using at most j immunized nodes there.

Each edge is charged when its first endpoint is forgotten, against the
other endpoint still in the bag. With a budget ``k``, values above ``k`` are
pruned and safe nodes with t(v) > k are not tracked at all: they can never
see t(v) influenced neighbours in a solution of size <= k.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from collections import defaultdict
from dataclasses import dataclass

from ..graph import Instance, ThresholdGraph, require_preprocessed
from ..result import SolveResult, certified, negative
from .decomposition import (
    FORGET,
    INTRODUCE,
    JOIN,
    LEAF,
    DecompositionError,
    NiceTreeDecomposition,
    TreeDecomposition,
    heuristic_decomposition,
    make_nice,
    validate,
)

SAFE, INFLUENCED, IMMUNIZED = 0, 1, 2
INF = math.inf

Key = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass
class DPTable:
    ntd: NiceTreeDecomposition
    tables: list[dict[Key, list[float]]]
    l: int
    k: int | None

    @property
    def root_values(self) -> list[float]:
        return self.tables[self.ntd.root].get(((), ()), [INF] * (self.l + 1))

    @property
    def optimum(self) -> float:
        return self.root_values[self.l]

    def size(self, u: int) -> int:
        """Finite entries stored at nice node ``u``."""
        return sum(1 for vals in self.tables[u].values() for x in vals if x != INF)

    def sizes(self) -> list[int]:
        return [self.size(u) for u in range(len(self.tables))]


def _tracked(G: ThresholdGraph, v: int, k: int | None) -> bool:
    return k is None or G.thresholds[v] <= k


def _forget_key(G, bag, pos, key, nbr_pos):
    """Parent key after forgetting ``bag[pos]``, or None if infeasible."""
    C, T = key
    s = C[pos]
    T2 = list(T)
    if s == SAFE and T[pos]:
        seen = sum(1 for i in nbr_pos if C[i] == INFLUENCED)
        if T[pos] - seen < 1:
            return None
    elif s == INFLUENCED:
        for i in nbr_pos:
            if C[i] == SAFE and T2[i]:
                T2[i] -= 1
                if T2[i] < 1:
                    return None
    del T2[pos]
    return C[:pos] + C[pos + 1:], tuple(T2)


def _join_key(G, bag, k1, k2):
    C, T1 = k1
    T2 = k2[1]
    T = []
    for v, s, a, b in zip(bag, C, T1, T2):
        if s == SAFE and a:
            r = a + b - G.thresholds[v]
            if r < 1:
                return None
            T.append(r)
        else:
            T.append(0)
    return C, tuple(T)


def _min_plus(v1, v2, shift, minus, l):
    out = [INF] * (l + 1)
    for a, x in enumerate(v1):
        if x == INF:
            continue
        for b, y in enumerate(v2):
            j = a + b - shift
            if y == INF or j > l:
                continue
            if j >= 0 and x + y - minus < out[j]:
                out[j] = x + y - minus
    for j in range(1, l + 1):
        out[j] = min(out[j], out[j - 1])
    return out


def _prune(vals, k):
    if k is None:
        return vals
    return [x if x <= k else INF for x in vals]


def _neighbor_positions(G, bag, w):
    nb = set(G.adjacency[w])
    return [i for i, x in enumerate(bag) if x in nb and x != w]


def dp_solve(G: ThresholdGraph, ntd: NiceTreeDecomposition, l: int, k: int | None = None) -> DPTable:
    """Fill every table bottom-up. ``k=None`` keeps all values (minimum spread mode)."""
    tables: list[dict[Key, list[float]]] = []
    for u, kind in enumerate(ntd.kinds):
        bag = ntd.bags[u]
        out: dict[Key, list[float]] = {}
        if kind == LEAF:
            out[((), ())] = [0] * (l + 1)
        elif kind == INTRODUCE:
            v = ntd.vertex[u]
            pos = bisect_left(bag, v)
            tv = G.thresholds[v]
            for (C, T), vals in tables[ntd.children[u][0]].items():
                options = [(INFLUENCED, 0, _prune([x + 1 for x in vals], k))]
                options.append((IMMUNIZED, 0, [INF] + vals[:-1]))
                if tv >= 1:
                    options.append((SAFE, tv if _tracked(G, v, k) else 0, vals))
                for s, r, new in options:
                    if all(x == INF for x in new):
                        continue
                    out[(C[:pos] + (s,) + C[pos:], T[:pos] + (r,) + T[pos:])] = new
        elif kind == FORGET:
            child = ntd.children[u][0]
            cbag = ntd.bags[child]
            w = ntd.vertex[u]
            pos = bisect_left(cbag, w)
            nbr = _neighbor_positions(G, cbag, w)
            for key, vals in tables[child].items():
                nk = _forget_key(G, cbag, pos, key, nbr)
                if nk is None:
                    continue
                old = out.get(nk)
                out[nk] = vals if old is None else [min(a, b) for a, b in zip(old, vals)]
        elif kind == JOIN:
            left, right = (tables[c] for c in ntd.children[u])
            by_c = defaultdict(list)
            for key, vals in right.items():
                by_c[key[0]].append((key, vals))
            for k1, v1 in left.items():
                C = k1[0]
                infl = C.count(INFLUENCED)
                imm = C.count(IMMUNIZED)
                for k2, v2 in by_c.get(C, ()):
                    nk = _join_key(G, bag, k1, k2)
                    if nk is None:
                        continue
                    new = _prune(_min_plus(v1, v2, imm, infl, l), k)
                    old = out.get(nk)
                    if old is not None:
                        new = [min(a, b) for a, b in zip(old, new)]
                    if any(x != INF for x in new):
                        out[nk] = new
        else:  # pragma: no cover - guarded by construction
            raise ValueError(f"unknown node kind {kind!r}")
        tables.append(out)
    return DPTable(ntd, tables, l, k)


def backtrack(G: ThresholdGraph, table: DPTable, j: int | None = None) -> tuple[frozenset, frozenset]:
    """Recover (influenced, immunized) sets achieving the root value at budget ``j``."""
    ntd, tables = table.ntd, table.tables
    j = table.l if j is None else j
    val = table.root_values[j]
    if val == INF:
        raise ValueError("no solution within the budgets")
    state: dict[int, int] = {}
    stack = [(ntd.root, ((), ()), j, val)]
    while stack:
        u, key, j, val = stack.pop()
        kind = ntd.kinds[u]
        if kind == LEAF:
            continue
        if kind == INTRODUCE:
            child = ntd.children[u][0]
            pos = bisect_left(ntd.bags[u], ntd.vertex[u])
            C, T = key
            ckey = (C[:pos] + C[pos + 1:], T[:pos] + T[pos + 1:])
            s = C[pos]
            if s == INFLUENCED:
                val -= 1
            elif s == IMMUNIZED:
                j -= 1
            assert tables[child][ckey][j] == val
            stack.append((child, ckey, j, val))
        elif kind == FORGET:
            child = ntd.children[u][0]
            cbag = ntd.bags[child]
            w = ntd.vertex[u]
            pos = bisect_left(cbag, w)
            nbr = _neighbor_positions(G, cbag, w)
            for ckey, vals in tables[child].items():
                if vals[j] == val and _forget_key(G, cbag, pos, ckey, nbr) == key:
                    state[w] = ckey[0][pos]
                    stack.append((child, ckey, j, val))
                    break
            else:  # pragma: no cover
                raise AssertionError("backtracking lost the forget predecessor")
        else:
            c1, c2 = ntd.children[u]
            C = key[0]
            infl, imm = C.count(INFLUENCED), C.count(IMMUNIZED)
            found = None
            for k1, v1 in tables[c1].items():
                if k1[0] != C:
                    continue
                for k2, v2 in tables[c2].items():
                    if k2[0] != C or _join_key(G, ntd.bags[u], k1, k2) != key:
                        continue
                    for a, x in enumerate(v1):
                        for b, y in enumerate(v2):
                            if a + b - imm <= j and x + y - infl == val:
                                found = (k1, a, x, k2, b, y)
                                break
                        if found:
                            break
                    if found:
                        break
                if found:
                    break
            assert found, "backtracking lost the join predecessors"
            k1, a, x, k2, b, y = found
            stack.append((c1, k1, a, x))
            stack.append((c2, k2, b, y))
    X = frozenset(v for v, s in state.items() if s == INFLUENCED)
    Y = frozenset(v for v, s in state.items() if s == IMMUNIZED)
    return X, Y


def table_bound(l: int, bag_size: int, k: int, max_degree: int) -> int:
    """Entry bound (l+1) 3^s mu^s with mu = max(1, min(k, max degree))."""
    mu = max(1, min(k, max_degree))
    return (l + 1) * 3**bag_size * mu**bag_size


def prepare_decomposition(G: ThresholdGraph, td: TreeDecomposition | None = None) -> NiceTreeDecomposition:
    if td is None:
        td = heuristic_decomposition(G)
    report = validate(G, td)
    if not report:
        raise DecompositionError(report)
    return make_nice(td)


def solve_tw(inst: Instance, td: TreeDecomposition | None = None) -> SolveResult:
    G = inst.graph
    require_preprocessed(G)
    ntd = prepare_decomposition(G, td)
    table = dp_solve(G, ntd, inst.l, inst.k)
    sizes = table.sizes()
    stats = {"width": ntd.width, "nice_nodes": len(ntd), "max_table_size": max(sizes)}
    if table.optimum > inst.k:
        return negative("tw", **stats)
    X, _ = backtrack(G, table)
    return certified(inst, X, "tw", **stats)


def min_spread_tw(G: ThresholdGraph, l: int, td: TreeDecomposition | None = None) -> dict[int, int]:
    """Minimum spread for every budget 0..l, computed by the programme without pruning."""
    require_preprocessed(G)
    table = dp_solve(G, prepare_decomposition(G, td), l, None)
    return {j: int(v) for j, v in enumerate(table.root_values)}
