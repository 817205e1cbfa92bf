"""Source problems of the reductions, each with a brute-force solver."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import combinations, product


class SourceError(ValueError):
    pass


def _digest(*parts) -> str:
    return hashlib.sha256(repr(parts).encode()).hexdigest()[:16]


@dataclass(frozen=True)
class HittingSetInstance:
    """Ground set ``0..n-1``, sets as sorted tuples, budget ``h``."""

    n: int
    sets: tuple[tuple[int, ...], ...]
    h: int

    def __post_init__(self):
        if self.n < 0 or self.h < 0:
            raise SourceError("negative ground-set size or budget")
        for j, S in enumerate(self.sets):
            if not S:
                raise SourceError(f"set {j} is empty")
            if list(S) != sorted(set(S)) or not all(0 <= a < self.n for a in S):
                raise SourceError(f"set {j} must list distinct ground elements in ascending order")

    @property
    def m(self) -> int:
        return len(self.sets)

    def digest(self) -> str:
        return _digest("hs", self.n, self.sets, self.h)

    def min_hitting_set(self) -> tuple[int, ...] | None:
        for size in range(0, self.n + 1):
            for H in combinations(range(self.n), size):
                if all(set(S) & set(H) for S in self.sets):
                    return H
        return None

    def solve(self) -> bool:
        H = self.min_hitting_set()
        return H is not None and len(H) <= self.h


def _normalize_edges(n, edges):
    out = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise SourceError(f"bad edge ({u}, {v})")
        out.add((min(u, v), max(u, v)))
    return tuple(sorted(out))


@dataclass(frozen=True)
class CvtInstance:
    """Graph ``H`` on ``0..n-1`` with terminal ``s`` and budgets ``k`` (cut side) and ``l``."""

    n: int
    edges: tuple[tuple[int, int], ...]
    s: int
    k: int
    l: int

    def __post_init__(self):
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))
        if not 0 <= self.s < self.n:
            raise SourceError(f"terminal {self.s} not in the graph")
        if self.k < 0 or self.l < 0:
            raise SourceError("negative budget")

    def digest(self) -> str:
        return _digest("cvt", self.n, self.edges, self.s, self.k, self.l)

    def neighbors(self) -> list[set[int]]:
        nb = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return nb

    def solve(self) -> bool:
        """Is there X with s in X, |X| <= k and at most l nodes outside X adjacent to X?"""
        nb = self.neighbors()
        others = [v for v in range(self.n) if v != self.s]
        for size in range(0, min(self.k, self.n)):
            for rest in combinations(others, size):
                X = set(rest) | {self.s}
                boundary = set().union(*(nb[v] for v in X)) - X
                if len(boundary) <= self.l:
                    return True
        return False


@dataclass(frozen=True)
class MulticoloredGraphInstance:
    """Graph on ``0..n-1`` with a proper colouring into ``0..q-1``."""

    n: int
    edges: tuple[tuple[int, int], ...]
    colors: tuple[int, ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))
        if len(self.colors) != self.n:
            raise SourceError(f"{len(self.colors)} colours for {self.n} nodes")
        if any(not 0 <= c < self.q for c in self.colors):
            raise SourceError("colour out of range")
        for u, v in self.edges:
            if self.colors[u] == self.colors[v]:
                raise SourceError(f"edge ({u}, {v}) joins two nodes of colour {self.colors[u]}")

    def digest(self) -> str:
        return _digest("mq", self.n, self.edges, self.colors, self.q)

    def color_class(self, c: int) -> list[int]:
        return [v for v in range(self.n) if self.colors[v] == c]

    def edges_between(self, c: int, d: int) -> list[tuple[int, int]]:
        pair = {c, d}
        return [e for e in self.edges if {self.colors[e[0]], self.colors[e[1]]} == pair]

    def find_clique(self) -> tuple[int, ...] | None:
        es = set(self.edges)
        for pick in product(*(self.color_class(c) for c in range(self.q))):
            if all((min(a, b), max(a, b)) in es for a, b in combinations(pick, 2)):
                return pick
        return None

    def solve(self) -> bool:
        return self.q >= 1 and self.find_clique() is not None

    def restricted(self) -> tuple["MulticoloredGraphInstance", list[int]]:
        """Drop nodes that miss a neighbour in some other colour class (cannot be in a clique)."""
        nb = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        keep = [
            v for v in range(self.n)
            if {self.colors[u] for u in nb[v]} | {self.colors[v]} == set(range(self.q))
        ]
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        colors = tuple(self.colors[v] for v in keep)
        return MulticoloredGraphInstance(len(keep), tuple(edges), colors, self.q), keep
