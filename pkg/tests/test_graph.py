import pytest
from hypothesis import given
from hypothesis import strategies as st

from iib.fixtures import fixture, path3, star4, triangle
from iib.graph import (
    GraphError,
    Instance,
    NotPreprocessedError,
    ThresholdGraph,
    diffuse,
    from_spreaders,
    immunizing_set,
    is_minimal,
    is_preprocessed,
    preprocess,
    require_preprocessed,
    spread,
    verify,
)

from conftest import raw_graphs

A, B, C = 0, 1, 2


def test_diffuse_path3_rounds():
    trace = diffuse(path3())
    assert trace.rounds == (frozenset({A}), frozenset({A, B}), frozenset({A, B, C}))
    assert trace.final == frozenset({A, B, C})


def test_diffuse_path3_blocked_middle():
    assert diffuse(path3(), {B}).final == {A}


def test_no_seed_means_nothing_spreads():
    G = ThresholdGraph.from_edges(3, [(0, 1), (1, 2)], [1, 1, 2])
    assert diffuse(G).final == frozenset()


def test_diffuse_rejects_foreign_nodes():
    with pytest.raises(ValueError):
        diffuse(path3(), {7})


@pytest.mark.parametrize(
    "X, expected",
    [({A}, {B}), (set(), {A}), ({A, B, C}, set())],
)
def test_immunizing_set_path3(X, expected):
    assert immunizing_set(path3(), X) == expected


@pytest.mark.parametrize("X, expected", [({A}, True), ({A, C}, False), (set(), True)])
def test_is_minimal_path3(X, expected):
    assert is_minimal(path3(), X) is expected


def test_verify_examples():
    sol = verify(Instance(path3(), 1, 1), {A})
    assert sol.verdict and sol.influenced == {A} and sol.immunized == {B}
    assert not verify(Instance(path3(), 0, 0), set()).verdict
    for G in (path3(), star4(), triangle()):
        assert verify(Instance(G, G.n, 0), G.nodes).verdict


def test_verify_shrinks_to_minimal():
    sol = verify(Instance(path3(), 2, 2), {A, C})
    assert sol.influenced == {A}


def test_preprocess_examples():
    single = ThresholdGraph.from_edges(1, [], [0])
    G, removed = preprocess(single)
    assert G.n == 1 and removed == frozenset()

    edge = ThresholdGraph.from_edges(2, [(0, 1)], [0, 2], ["u", "v"])
    G, removed = preprocess(edge)
    assert G.labels == ("u",) and removed == {1}

    G, removed = preprocess(path3())
    assert G == path3() and not removed


def test_require_preprocessed_names_remedy():
    G = ThresholdGraph.from_edges(2, [(0, 1)], [0, 2])
    assert not is_preprocessed(G)
    with pytest.raises(NotPreprocessedError, match="preprocess"):
        require_preprocessed(G)


@pytest.mark.parametrize(
    "edges, msg",
    [([(0, 0)], "self-loop"), ([(0, 1), (1, 0)], "duplicate"), ([(0, 5)], "out of range")],
)
def test_graph_construction_errors(edges, msg):
    with pytest.raises(GraphError, match=msg):
        ThresholdGraph.from_edges(2, edges, [0, 0])


def test_fixture_catalog():
    assert fixture("path3") == path3()
    assert fixture("STAR4").thresholds == (0, 0, 0, 2)
    assert fixture("TRIANGLE").thresholds == (0, 1, 2)
    with pytest.raises(KeyError):
        fixture("K5")


def test_from_spreaders_lowers_thresholds():
    G = ThresholdGraph.from_edges(3, [(0, 1), (1, 2)], [1, 2, 1])
    H, keep = from_spreaders(G, [0])
    assert keep == [1, 2]
    assert H.thresholds == (1, 1)


@given(raw_graphs(), st.randoms(use_true_random=False))
def test_monotone_in_immunized_set(G, r):
    Y = {v for v in G.nodes if r.random() < 0.3}
    Yp = Y | {v for v in G.nodes if r.random() < 0.3}
    assert diffuse(G, Yp).final <= diffuse(G, Y).final


@given(raw_graphs())
def test_trace_is_a_chain_within_n_rounds(G):
    trace = diffuse(G)
    assert len(trace.rounds) <= max(G.n, 1)
    for a, b in zip(trace.rounds, trace.rounds[1:]):
        assert a < b
    assert trace.final == spread(G)


@given(raw_graphs(), st.randoms(use_true_random=False))
def test_confinement_identity(G, r):
    X = {v for v in G.nodes if r.random() < 0.5}
    Y = immunizing_set(G, X)
    inside = spread(G, within=X)
    assert inside == diffuse(G, Y).final
    assert inside == spread(G, within=set(G.nodes) - Y)
    assert inside <= X


@given(raw_graphs(), st.randoms(use_true_random=False))
def test_verify_idempotent(G, r):
    G, _ = preprocess(G)
    inst = Instance(G, G.n, G.n)
    X = {v for v in G.nodes if r.random() < 0.5}
    first = verify(inst, X)
    assert verify(inst, first.influenced).influenced == first.influenced
    assert is_minimal(G, first.influenced)


@given(raw_graphs())
def test_preprocess_output(G):
    H, removed = preprocess(G)
    assert is_preprocessed(H)
    assert H.n + len(removed) == G.n
    assert all(t <= H.degree(v) or t == 0 for v, t in enumerate(H.thresholds))
