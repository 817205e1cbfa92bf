"""Answer-preserving generators of IIB instances from the source problems.

Every generator builds the raw gadget graph, then drops the nodes that no
diffusion can ever reach (they are never influenced and immunizing them is
wasted budget, so the answer is unchanged) and clamps the budgets to the
remaining node count. The raw graph is kept for structural checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from ..graph import Instance, ThresholdGraph, preprocess
from ..nd import type_partition
from .sources import CvtInstance, HittingSetInstance, MulticoloredGraphInstance


class GadgetError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratedInstance:
    instance: Instance
    expected_verdict: bool
    provenance: dict = field(default_factory=dict)
    raw_graph: ThresholdGraph | None = None


class _Builder:
    def __init__(self):
        self.labels: list[str] = []
        self.t: list[int] = []
        self.edges: set[tuple[int, int]] = set()

    def node(self, label: str, t: int = 0) -> int:
        self.labels.append(label)
        self.t.append(t)
        return len(self.labels) - 1

    def bag(self, label: str, size: int, t: int = 0) -> list[int]:
        return [self.node(f"{label}[{i}]", t) for i in range(size)]

    def edge(self, u: int, v: int) -> None:
        self.edges.add((min(u, v), max(u, v)))

    def join(self, A, B) -> None:
        for u in A:
            for v in B:
                self.edge(u, v)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def graph(self) -> ThresholdGraph:
        return ThresholdGraph.from_edges(len(self.labels), sorted(self.edges), self.t, self.labels)


def _finish(raw: ThresholdGraph, k: int, l: int, expected: bool, provenance: dict) -> GeneratedInstance:
    G, removed = preprocess(raw)
    provenance = dict(provenance)
    provenance.update(
        raw_nodes=raw.n,
        removed=sorted(raw.label(v) for v in removed),
        raw_bounds=(k, l),
    )
    inst = Instance(G, min(k, G.n), min(l, G.n))
    return GeneratedInstance(inst, expected, provenance, raw)


def gen_cvt(src: CvtInstance) -> GeneratedInstance:
    if src.k == 0:
        raise GadgetError("cut budget k must be at least 1 (the terminal itself)")
    nb = src.neighbors()
    b = _Builder()
    ids = {}
    for v in range(src.n):
        if v != src.s:
            ids[v] = b.node(f"h{v}", 0 if v in nb[src.s] else 1)
    for u, v in src.edges:
        if src.s not in (u, v):
            b.edge(ids[u], ids[v])
    prov = {"generator": "cvt", "source": src.digest()}
    return _finish(b.graph(), src.k - 1, src.l, src.solve(), prov)


def gen_hs_zero(src: HittingSetInstance) -> GeneratedInstance:
    b = _Builder()
    I = b.bag("I", src.h + 1, 0)
    A = [b.node(f"a{i}", 1) for i in range(src.n)]
    S = [b.node(f"s{j}", len(Sj)) for j, Sj in enumerate(src.sets)]
    b.join(I, A)
    for j, Sj in enumerate(src.sets):
        for i in Sj:
            b.edge(A[i], S[j])
    prov = {"generator": "hs", "source": src.digest()}
    return _finish(b.graph(), src.n + 1, src.h, src.solve(), prov)


def hs_deg3_path_length(src: HittingSetInstance) -> int:
    return src.n + 2 * src.n * src.m


def gen_hs_deg3(src: HittingSetInstance) -> GeneratedInstance:
    n, m = src.n, src.m
    p = hs_deg3_path_length(src)
    b = _Builder()
    A = [b.node(f"a{i}", 0) for i in range(n)]
    W = {}
    for i in range(n):
        prev = A[i]
        for j in range(m):
            if i in src.sets[j]:
                W[i, j] = b.node(f"w{i},{j}", 1)
                b.edge(prev, W[i, j])
                prev = W[i, j]
    S = [b.node(f"s{j}", 1) for j in range(m)]
    for j, Sj in enumerate(src.sets):
        ws = [W[i, j] for i in Sj]
        if len(ws) == 1:
            b.edge(ws[0], S[j])
            continue
        U = [b.node(f"u{r},{j}", 2) for r in range(len(ws) - 1)]
        b.edge(ws[0], U[0])
        for r, u in enumerate(U):
            b.edge(ws[r + 1], u)
            if r + 1 < len(U):
                b.edge(u, U[r + 1])
        b.edge(U[-1], S[j])
    for j in range(m):
        prev = S[j]
        for x in range(p):
            cur = b.node(f"p{j},{x}", 1)
            b.edge(prev, cur)
            prev = cur
    raw = b.graph()
    if raw.max_degree() > 3:
        raise AssertionError(f"degree-3 construction produced max degree {raw.max_degree()}")
    prov = {"generator": "hs3", "source": src.digest(), "path_length": p}
    return _finish(raw, p, src.h, src.solve(), prov)


def _require_classes(src: MulticoloredGraphInstance):
    if src.q < 2:
        raise GadgetError("need at least two colour classes")
    classes = [src.color_class(c) for c in range(src.q)]
    for c, V in enumerate(classes):
        if not V:
            raise GadgetError(f"colour class {c} is empty")
    pair_edges = {}
    for c, d in combinations(range(src.q), 2):
        E = src.edges_between(c, d)
        if not E:
            raise GadgetError(f"no edge between colour classes {c} and {d}")
        pair_edges[c, d] = E
    return classes, pair_edges


def mq_tw_bounds(n: int, m: int, q: int) -> tuple[int, int]:
    k = (n - q) * (2 * n * q - 2 * n + 1) + (m - comb(q, 2)) * (4 * n + 1)
    return k, q + comb(q, 2)


def gen_mq_tw(src: MulticoloredGraphInstance) -> GeneratedInstance:
    G0, keep = src.restricted()
    classes, pair_edges = _require_classes(G0)
    n, m, q = G0.n, len(G0.edges), G0.q
    name = [f"v{keep[v]}" for v in range(n)]
    low = {v: v + 1 for v in range(n)}
    high = {v: 2 * n - low[v] for v in range(n)}
    k, l = mq_tw_bounds(n, m, q)

    b = _Builder()
    xv = {v: b.node(f"sel:{name[v]}", 0) for v in range(n)}
    guards = []
    for c, V in enumerate(classes):
        g = b.node(f"guard:c{c}", len(V))
        b.join([g], [xv[v] for v in V])
        guards.append(g)
    xe = {}
    for (c, d), E in pair_edges.items():
        for e in E:
            xe[e] = b.node(f"sel:{name[e[0]]}-{name[e[1]]}", 0)
        g = b.node(f"guard:c{c}c{d}", len(E))
        b.join([g], [xe[e] for e in E])
        guards.append(g)

    validation = []

    def parallel(x, y, size, tag):
        for i in range(size):
            cn = b.node(f"conn:{tag}#{i}", 1)
            b.edge(cn, x)
            b.edge(cn, y)

    for (c, d), E in pair_edges.items():
        for side in (c, d):
            first = b.node(f"val:c{side}:c{c}c{d}:a", 0)
            second = b.node(f"val:c{side}:c{c}c{d}:b", 0)
            validation += [first, second]
            for v in classes[side]:
                parallel(first, xv[v], high[v], f"{b.labels[first]}|{name[v]}")
                parallel(second, xv[v], low[v], f"{b.labels[second]}|{name[v]}")
            for e in E:
                end = e[0] if G0.colors[e[0]] == side else e[1]
                parallel(first, xe[e], low[end], f"{b.labels[first]}|{b.labels[xe[e]]}")
                parallel(second, xe[e], high[end], f"{b.labels[second]}|{b.labels[xe[e]]}")

    B = b.bag("B", k, 1)
    b.join(B, guards)
    for x in validation:
        b.t[x] = b.degree(x) - 2 * n + 1
    prov = {"generator": "mq-tw", "source": src.digest(), "restricted_nodes": n}
    return _finish(b.graph(), k, l, src.solve(), prov)


def mq_nd_bounds(q: int, r: int, s: int) -> tuple[int, int]:
    k = q * r + comb(q, 2) * (2 * r + 3) * s
    l = q * r + comb(q, 2) * 2 * r * s
    return k, l


def mq_nd_claimed_nd(q: int) -> int:
    return 3 * q + 12 * comb(q, 2)


def gen_mq_nd(src: MulticoloredGraphInstance) -> GeneratedInstance:
    classes, pair_edges = _require_classes(src)
    q = src.q
    sizes = {len(V) for V in classes}
    if len(sizes) != 1:
        raise GadgetError(f"colour classes have unequal sizes {sorted(sizes)}")
    esizes = {len(E) for E in pair_edges.values()}
    if len(esizes) != 1:
        raise GadgetError(f"edge sets between classes have unequal sizes {sorted(esizes)}")
    r, s = sizes.pop() - 1, esizes.pop() - 1
    k, l = mq_nd_bounds(q, r, s)
    index = {v: i for V in classes for i, v in enumerate(V)}

    b = _Builder()
    guards = []
    Lneg, Lpos = {}, {}
    for c in range(q):
        Lneg[c] = b.bag(f"L{c}-neg", r, 0)
        Lpos[c] = b.bag(f"L{c}-pos", r, 0)
        g = b.bag(f"L{c}-guard", l + 1, r + 1)
        b.join(g, Lneg[c] + Lpos[c])
        guards += g
    for (c, d), E in pair_edges.items():
        tag = f"{c}{d}"
        Lp = b.bag(f"L{tag}-pos", 2 * r * s, 0)
        Ln = b.bag(f"L{tag}-neg", 2 * r * s, 0)
        Lg = b.bag(f"L{tag}-guard", l + 1, 2 * r * s + 1)
        b.join(Lg, Lp + Ln)
        Mp = [b.node(f"M{tag}-pos[{i}]", 2 * r * i + 1) for i in range(s + 1)]
        Mn = [b.node(f"M{tag}-neg[{i}]", 2 * r * i + 1) for i in range(s + 1)]
        Mg = b.bag(f"M{tag}-guard", l + 1, s + 1)
        b.join(Mg, Mp + Mn)
        b.join(Mp, Lp)
        b.join(Mn, Ln)
        guards += Lg + Mg
        for side in (c, d):
            Ip, In = [], []
            for j, e in enumerate(E):
                i = index[e[0] if src.colors[e[0]] == side else e[1]]
                Ip.append(b.node(f"I{side}:{tag}-pos[{j}]", i + 1 + 2 * r * j))
                In.append(b.node(f"I{side}:{tag}-neg[{j}]", r - i + 1 + 2 * r * (s - j)))
            Ig = b.bag(f"I{side}:{tag}-guard", l + 1, s + 1)
            b.join(Ig, Ip + In)
            b.join(Ip, Lpos[side] + Lp)
            b.join(In, Lneg[side] + Ln)
            guards += Ig
    B = b.bag("B", k, 1)
    b.join(B, guards)
    raw = b.graph()
    nd = type_partition(raw).nd
    prov = {
        "generator": "mq-nd",
        "source": src.digest(),
        "r": r,
        "s": s,
        "nd": nd,
        "nd_claimed": mq_nd_claimed_nd(q),
    }
    return _finish(raw, k, l, src.solve(), prov)


GENERATORS = {
    "cvt": gen_cvt,
    "hs": gen_hs_zero,
    "hs3": gen_hs_deg3,
    "mq-tw": gen_mq_tw,
    "mq-nd": gen_mq_nd,
}
