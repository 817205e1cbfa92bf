import pytest
from hypothesis import given

from iib.fixtures import path3, random_instances, star4, triangle
from iib.graph import Instance, ThresholdGraph, verify
from iib.oracle import (
    InstanceTooLarge,
    minimize_spread,
    solve_by_x_enumeration,
    solve_by_y_enumeration,
)

from conftest import instances


@pytest.mark.parametrize("solver", [solve_by_y_enumeration, solve_by_x_enumeration])
@pytest.mark.parametrize(
    "G, k, l, expected",
    [
        (path3(), 1, 1, True),
        (path3(), 0, 1, True),
        (star4(), 0, 2, False),
        (triangle(), 1, 1, True),
        (star4(), 2, 1, False),
    ],
)
def test_fixture_verdicts(solver, G, k, l, expected):
    res = solver(Instance(G, k, l))
    assert res.verdict is expected
    if expected:
        assert verify(Instance(G, k, l), res.best_solution.influenced).verdict
    else:
        assert res.best_solution is None


def test_path3_witness_kills_the_seed():
    # a zero-spread witness beats the {b} cut: immunize the only seed
    res = solve_by_y_enumeration(Instance(path3(), 0, 1))
    assert res.best_solution.immunized == {0}
    assert res.best_solution.influenced == frozenset()


@pytest.mark.parametrize(
    "G, l, expected",
    [(path3(), 1, {0: 3, 1: 0}), (star4(), 1, {0: 4, 1: 3}), (star4(), 2, {0: 4, 1: 3, 2: 1})],
)
def test_minimize_spread_fixtures(G, l, expected):
    assert minimize_spread(G, l) == expected


def test_full_budget_spread_is_zero():
    for G in (path3(), star4(), triangle()):
        assert minimize_spread(G, G.n)[G.n] == 0


def test_trivial_yes_with_full_spread():
    for G in (path3(), star4(), triangle()):
        assert solve_by_x_enumeration(Instance(G, G.n, 0)).verdict


def test_node_cap():
    n = 21
    G = ThresholdGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)], [0] + [1] * (n - 1))
    with pytest.raises(InstanceTooLarge):
        solve_by_y_enumeration(Instance(G, 1, 1))
    assert solve_by_y_enumeration(Instance(G, 1, 1), max_nodes=n).verdict


def test_stop_at_first_keeps_the_verdict():
    for inst in random_instances(5, 60):
        full = solve_by_y_enumeration(inst)
        quick = solve_by_y_enumeration(inst, stop_at_first=True)
        assert quick.verdict == full.verdict


def test_cross_oracle_agreement():
    for inst in random_instances(11, 220):
        y = solve_by_y_enumeration(inst)
        x = solve_by_x_enumeration(inst)
        assert y.verdict == x.verdict
        # the X side only sees candidates of size <= k
        for j, best in y.min_spread_per_budget.items():
            expected = best if best <= inst.k else float("inf")
            assert x.min_spread_per_budget[j] == expected


@given(instances())
def test_table_is_non_increasing_and_matches_verdict(inst):
    res = solve_by_y_enumeration(inst)
    vals = [res.min_spread_per_budget[j] for j in range(inst.l + 1)]
    assert all(a >= b for a, b in zip(vals, vals[1:]))
    assert res.verdict == (vals[-1] <= inst.k)


@given(instances(max_k=3, max_l=3))
def test_anti_monotone_in_both_budgets(inst):
    if not solve_by_y_enumeration(inst).verdict:
        return
    G = inst.graph
    if inst.k < G.n:
        assert solve_by_y_enumeration(Instance(G, inst.k + 1, inst.l)).verdict
    if inst.l < G.n:
        assert solve_by_y_enumeration(Instance(G, inst.k, inst.l + 1)).verdict
