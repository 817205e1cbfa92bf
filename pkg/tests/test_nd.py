import random
from itertools import combinations

import pytest
from hypothesis import given

from iib.fixtures import path3, random_instances, star4, triangle
from iib.graph import Instance, ThresholdGraph, immunizing_set, is_minimal, spread
from iib.nd import (
    compositions,
    exchange_immunized,
    exchange_influenced,
    solve_nd_k,
    solve_nd_l,
    tuple_bound,
    type_partition,
)
from iib.oracle import solve_by_y_enumeration

from conftest import raw_graphs


def test_partition_fixtures():
    p = type_partition(path3())
    assert p.classes == ((0, 2), (1,)) and p.kinds == ("independent", "independent")
    assert type_partition(star4()).classes == ((0, 1, 2), (3,))
    k3 = ThresholdGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)], [0, 1, 1])
    p = type_partition(k3)
    assert p.nd == 1 and p.kinds == ("clique",)


def test_members_sorted_by_threshold_then_id():
    G = ThresholdGraph.from_edges(4, [(0, 3), (1, 3), (2, 3)], [1, 0, 1, 0])
    assert type_partition(G).classes[0] == (1, 0, 2)


def same_type(G, u, v):
    return set(G.adjacency[u]) - {v} == set(G.adjacency[v]) - {u}


@given(raw_graphs())
def test_partition_matches_twin_relation(G):
    part = type_partition(G)
    cls = part.class_of()
    for u, v in combinations(G.nodes, 2):
        if cls[u] == cls[v]:
            assert same_type(G, u, v)
    # coarsest: classes cannot be merged further
    for i, j in combinations(range(part.nd), 2):
        u, v = part.classes[i][0], part.classes[j][0]
        merged = part.classes[i] + part.classes[j]
        assert not all(same_type(G, a, b) for a, b in combinations(merged, 2))
    # classes are cliques or independent sets with all-or-nothing links
    for i, ci in enumerate(part.classes):
        for j, cj in enumerate(part.classes):
            links = {b in G.adjacency[a] for a in ci for b in cj if a != b}
            assert len(links) <= 1
            if links:
                assert links.pop() == bool(part.adjacency[i, j])


def test_compositions_colex():
    assert list(compositions(2, [2, 1])) == [(2, 0), (1, 1)]
    assert list(compositions(0, [3, 3])) == [(0, 0)]
    assert list(compositions(5, [1, 1])) == []


def test_compositions_count():
    caps = [3, 1, 2, 4]
    for total in range(sum(caps) + 1):
        got = list(compositions(total, caps))
        assert len(got) == len(set(got))
        assert all(sum(t) == total and all(0 <= x <= c for x, c in zip(t, caps)) for t in got)


@pytest.mark.parametrize("solver", [solve_nd_k, solve_nd_l])
@pytest.mark.parametrize(
    "G, k, l, expected",
    [
        (path3(), 1, 1, True),
        (star4(), 0, 2, False),
        (triangle(), 1, 1, True),
        (star4(), 2, 1, False),  # value frozen from the exhaustive oracle
        (star4(), 4, 0, True),
        (star4(), 3, 0, False),
    ],
)
def test_fixture_verdicts(solver, G, k, l, expected):
    inst = Instance(G, k, l)
    assert solve_by_y_enumeration(inst).verdict is expected
    assert solver(inst).verdict is expected


def test_path3_selection():
    res = solve_nd_l(Instance(path3(), 1, 1))
    assert res.solution.immunized == {0}


def test_both_agree_with_oracle_and_respect_tuple_bound():
    for inst in random_instances(41, 250):
        truth = solve_by_y_enumeration(inst).verdict
        for solver in (solve_nd_k, solve_nd_l):
            res = solver(inst)
            assert res.verdict == truth
            if "tuple_bound" in res.stats:
                assert res.stats["tuples"] < res.stats["tuple_bound"]


def test_tuple_bound_value():
    assert tuple_bound(3, 2) == 16
    assert tuple_bound(0, 0) == 1


def exchange_trials(seed, count):
    rng = random.Random(seed)
    xs = ys = 0
    while xs < count or ys < count:
        inst = random_instances(rng.randrange(2**31), 1)[0]
        G = inst.graph
        part = type_partition(G)
        i = rng.randrange(part.nd)
        X = spread(G, within=[v for v in G.nodes if rng.random() < 0.5])
        Xp = exchange_influenced(G, part, X, i)
        if Xp is not None and xs < count:
            xs += 1
            yield "i", G, X, Xp
        Y = frozenset(v for v in G.nodes if rng.random() < 0.4)
        Yp = exchange_immunized(G, part, Y, i)
        if Yp is not None and ys < count:
            ys += 1
            yield "ii", G, Y, Yp


def test_exchange_properties():
    for kind, G, S, Sp in exchange_trials(3, 150):
        if kind == "i":
            assert is_minimal(G, Sp)
            assert len(immunizing_set(G, Sp)) == len(immunizing_set(G, S))
        else:
            assert len(spread(G, Sp)) <= len(spread(G, S))


def test_exchange_needs_a_candidate():
    G = path3()
    part = type_partition(G)
    assert exchange_influenced(G, part, frozenset(), 0) is None
    # class {a, c}: X={a}, Y(X)={b} holds nothing of the class
    assert exchange_influenced(G, part, {0}, 0) is None
