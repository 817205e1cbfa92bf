
import pytest

from iib.fixtures import path3, random_instances, star4
from iib.graph import Instance, ThresholdGraph, verify
from iib.oracle import minimize_spread, solve_by_y_enumeration
from iib.treewidth import (
    DecompositionError,
    TreeDecomposition,
    backtrack,
    dp_solve,
    heuristic_decomposition,
    make_nice,
    min_spread_tw,
    solve_tw,
    table_bound,
    validate,
    validate_nice,
)
from iib.treewidth.decomposition import FORGET, INTRODUCE, JOIN, LEAF
from iib.treewidth.dp import prepare_decomposition

A, B, C = 0, 1, 2


def td(bags, edges):
    return TreeDecomposition.build(bags, edges)


def test_path_decomposition_is_valid():
    d = td([{A, B}, {B, C}], [(0, 1)])
    assert validate(path3(), d) and d.width == 1


def test_uncovered_edge_is_condition_two():
    report = validate(path3(), td([{A}, {B, C}], [(0, 1)]))
    assert not report and report.condition == "2" and report.witness == (A, B)


def test_split_occurrences_with_edge_bc_missing_hit_condition_two_first():
    # {a,b},{c},{a} also leaves edge bc uncovered, which is checked earlier
    report = validate(path3(), td([{A, B}, {C}, {A}], [(0, 1), (1, 2)]))
    assert report.condition == "2" and report.witness == (B, C)


def test_split_occurrences_are_condition_three():
    report = validate(path3(), td([{A, B}, {B, C}, {A}], [(0, 1), (1, 2)]))
    assert not report and report.condition == "3" and report.witness == A


@pytest.mark.parametrize(
    "bags, edges, cond",
    [
        ([{A, B}, {B, C}], [], "tree"),
        ([{A, B}, {B, C}], [(0, 1), (1, 0)], "tree"),
        ([{A, B}], [], "1"),
        ([{A, B, C, 9}], [], "1"),
    ],
)
def test_other_violations(bags, edges, cond):
    assert validate(path3(), td(bags, edges)).condition == cond


def test_error_message_names_condition():
    with pytest.raises(DecompositionError, match="condition 2"):
        prepare_decomposition(path3(), td([{A}, {B, C}], [(0, 1)]))


def k4():
    return ThresholdGraph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)], [0, 1, 1, 1])


def binary_tree(n):
    return ThresholdGraph.from_edges(n, [(v, (v - 1) // 2) for v in range(1, n)], [0] + [1] * (n - 1))


@pytest.mark.parametrize("G, width", [(path3(), 1), (k4(), 3), (binary_tree(15), 1), (star4(), 1)])
def test_heuristic_widths(G, width):
    d = heuristic_decomposition(G)
    assert validate(G, d) and d.width == width


def test_heuristic_always_valid():
    for inst in random_instances(2, 150):
        assert validate(inst.graph, heuristic_decomposition(inst.graph))


def test_single_bag_chain():
    G = ThresholdGraph.from_edges(2, [(0, 1)], [0, 1])
    ntd = make_nice(td([{0, 1}], []))
    assert ntd.kinds == [LEAF, INTRODUCE, INTRODUCE, FORGET, FORGET]
    assert ntd.vertex == [None, 0, 1, 0, 1]
    assert ntd.bags[ntd.root] == ()
    assert validate_nice(G, ntd)


def test_path3_nice_has_no_join():
    ntd = make_nice(td([{A, B}, {B, C}], [(0, 1)]), path3())
    assert JOIN not in ntd.kinds and ntd.width == 1
    assert validate_nice(path3(), ntd)


def test_degree_three_tree_node_gets_binary_joins():
    d = td([{3}, {0, 3}, {1, 3}, {2, 3}], [(0, 1), (0, 2), (0, 3)])
    G = star4()
    ntd = make_nice(d, G)
    assert ntd.kinds.count(JOIN) == 2
    assert validate_nice(G, ntd) and ntd.width == d.width
    for u, kind in enumerate(ntd.kinds):
        if kind == JOIN:
            assert all(ntd.bags[c] == ntd.bags[u] for c in ntd.children[u])


def test_make_nice_rejects_invalid():
    with pytest.raises(DecompositionError):
        make_nice(td([{A}, {B, C}], [(0, 1)]), path3())


def test_nice_size_is_linear_in_width_times_n():
    for inst in random_instances(6, 60):
        G = inst.graph
        ntd = prepare_decomposition(G)
        assert validate_nice(G, ntd)
        assert len(ntd) <= 4 * (ntd.width + 1) * max(G.n, 1) + 1


def test_leaf_entries_are_zero():
    table = dp_solve(path3(), prepare_decomposition(path3()), 2)
    for u, kind in enumerate(table.ntd.kinds):
        if kind == LEAF:
            assert table.tables[u] == {((), ()): [0, 0, 0]}


@pytest.mark.parametrize("l, optimum", [(1, 0), (0, 3)])
def test_path3_optimum(l, optimum):
    table = dp_solve(path3(), prepare_decomposition(path3()), l)
    assert table.optimum == optimum


@pytest.mark.parametrize(
    "G, k, l, expected",
    [(path3(), 1, 1, True), (star4(), 0, 2, False), (path3(), 3, 0, True), (star4(), 4, 0, True)],
)
def test_solve_examples(G, k, l, expected):
    res = solve_tw(Instance(G, k, l))
    assert res.verdict is expected


def test_entries_non_increasing_in_budget():
    for inst in random_instances(12, 60, max_n=8):
        table = dp_solve(inst.graph, prepare_decomposition(inst.graph), 3, inst.k)
        for tab in table.tables:
            for vals in tab.values():
                assert all(a >= b for a, b in zip(vals, vals[1:]))


def test_dp_equals_oracle():
    for inst in random_instances(17, 220):
        G = inst.graph
        assert min_spread_tw(G, 4) == minimize_spread(G, min(4, G.n)) | {
            j: 0 for j in range(G.n + 1, 5)
        }


def test_backtracked_witness_verifies():
    for inst in random_instances(19, 200):
        G = inst.graph
        table = dp_solve(G, prepare_decomposition(G), inst.l)
        X, Y = backtrack(G, table)
        sol = verify(Instance(G, G.n, G.n), X)
        assert len(sol.influenced) == table.optimum
        assert len(sol.immunized) <= inst.l


def test_solve_tw_agrees_with_oracle():
    for inst in random_instances(29, 220):
        assert solve_tw(inst).verdict == solve_by_y_enumeration(inst).verdict


def test_table_size_bound():
    for inst in random_instances(37, 150):
        G = inst.graph
        table = dp_solve(G, prepare_decomposition(G), inst.l, inst.k)
        for u, size in enumerate(table.sizes()):
            s = len(table.ntd.bags[u])
            assert size <= table_bound(inst.l, s, inst.k, G.max_degree())


def test_user_supplied_decomposition():
    d = td([{A, B}, {B, C}], [(0, 1)])
    res = solve_tw(Instance(path3(), 1, 1), d)
    assert res.verdict and res.stats["width"] == 1
