import random

import pytest

from iib.gadgets import (
    GadgetError,
    gen_cvt,
    gen_hs_deg3,
    gen_hs_zero,
    gen_mq_nd,
    gen_mq_tw,
    hs_deg3_path_length,
    mq_nd_bounds,
    mq_nd_claimed_nd,
    mq_tw_bounds,
)
from iib.gadgets.catalog import (
    ORACLE_CANDIDATE_BUDGET,
    cvt_instances,
    hitting_set_instances,
    multicolored_instances,
    oracle_candidates,
    within_oracle_budget,
)
from iib.gadgets.sources import CvtInstance, HittingSetInstance, MulticoloredGraphInstance, SourceError
from iib.graph import is_preprocessed
from iib.nd import type_partition
from iib.oracle import solve_by_y_enumeration


def oracle(g):
    inst = g.instance
    return solve_by_y_enumeration(inst, max_nodes=inst.graph.n, stop_at_first=True).verdict


@pytest.mark.parametrize(
    "src, bounds, expected",
    [
        (CvtInstance(3, ((0, 1), (1, 2)), 0, 2, 1), (1, 1), True),
        (CvtInstance(4, ((0, 1), (0, 2), (0, 3)), 0, 1, 3), (0, 3), True),
        (CvtInstance(2, ((0, 1),), 0, 1, 0), (0, 0), False),
    ],
)
def test_cvt_examples(src, bounds, expected):
    g = gen_cvt(src)
    assert (g.instance.k, g.instance.l) == bounds
    assert g.expected_verdict is expected and oracle(g) is expected


def test_cvt_path_thresholds():
    g = gen_cvt(CvtInstance(3, ((0, 1), (1, 2)), 0, 2, 1))
    assert g.instance.graph.labels == ("h1", "h2")
    assert g.instance.graph.thresholds == (0, 1)


def test_cvt_zero_budget_rejected():
    with pytest.raises(GadgetError):
        gen_cvt(CvtInstance(2, ((0, 1),), 0, 0, 1))


@pytest.mark.parametrize(
    "src, expected",
    [
        (HittingSetInstance(1, ((0,),), 1), True),
        (HittingSetInstance(2, ((0,), (1,)), 1), False),
        (HittingSetInstance(2, ((0, 1),), 1), True),
    ],
)
def test_hs_zero_examples(src, expected):
    g = gen_hs_zero(src)
    assert g.instance.l == src.h and g.instance.k == src.n + 1
    assert g.expected_verdict is expected and oracle(g) is expected


def test_hs_zero_sizes():
    g = gen_hs_zero(HittingSetInstance(1, ((0,),), 1))
    assert g.raw_graph.n == 4


@pytest.mark.parametrize(
    "src, p, expected",
    [
        (HittingSetInstance(1, ((0,),), 1), 3, True),
        (HittingSetInstance(2, ((0, 1),), 1), 6, True),
        (HittingSetInstance(2, ((0, 1),), 0), 6, False),
    ],
)
def test_hs_deg3_examples(src, p, expected):
    g = gen_hs_deg3(src)
    assert hs_deg3_path_length(src) == p
    assert g.raw_graph.max_degree() <= 3
    assert g.expected_verdict is expected and oracle(g) is expected


def test_hs_deg3_degree_on_random_collections():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 6)
        sets = tuple(
            tuple(sorted(rng.sample(range(n), rng.randint(1, n)))) for _ in range(rng.randint(0, 5))
        )
        g = gen_hs_deg3(HittingSetInstance(n, sets, rng.randint(0, 3)))
        assert g.raw_graph.max_degree() <= 3


def test_mq_tw_single_edge():
    src = MulticoloredGraphInstance(2, ((0, 1),), (0, 1), 2)
    g = gen_mq_tw(src)
    assert mq_tw_bounds(2, 1, 2) == (0, 3)
    assert (g.instance.k, g.instance.l) == (0, 3)
    assert g.expected_verdict and oracle(g)


def test_mq_tw_restricts_isolated_class_member():
    # u2 has no neighbour in the other class and is dropped before building
    src = MulticoloredGraphInstance(3, ((0, 2),), (0, 0, 1), 2)
    g = gen_mq_tw(src)
    assert g.provenance["restricted_nodes"] == 2
    assert g.expected_verdict and oracle(g)


def test_mq_tw_needs_cross_edges():
    with pytest.raises(GadgetError):
        gen_mq_tw(MulticoloredGraphInstance(2, (), (0, 1), 2))


def test_mq_tw_needs_two_colours():
    with pytest.raises(GadgetError):
        gen_mq_tw(MulticoloredGraphInstance(1, (), (0,), 1))


def test_mq_nd_degenerate():
    g = gen_mq_nd(MulticoloredGraphInstance(2, ((0, 1),), (0, 1), 2))
    assert (g.instance.k, g.instance.l) == (0, 0)
    assert g.expected_verdict and oracle(g)


def test_mq_nd_r1_s0():
    src = MulticoloredGraphInstance(4, ((0, 2),), (0, 0, 1, 1), 2)
    assert mq_nd_bounds(2, 1, 0) == (2, 2)
    g = gen_mq_nd(src)
    assert sum(1 for x in g.raw_graph.labels if x.startswith("B[")) == 2
    assert g.provenance["nd"] <= mq_nd_claimed_nd(2)
    assert g.expected_verdict is src.solve() and oracle(g) is src.solve()


def test_mq_nd_black_hole_is_one_more_class():
    # measured nd on a non-degenerate instance: the black hole forms its own class
    src = MulticoloredGraphInstance(4, ((0, 2), (1, 3)), (0, 0, 1, 1), 2)
    g = gen_mq_nd(src)
    assert type_partition(g.raw_graph).nd == mq_nd_claimed_nd(2) + 1


@pytest.mark.parametrize(
    "src",
    [
        MulticoloredGraphInstance(3, ((0, 2),), (0, 0, 1), 2),
        MulticoloredGraphInstance(6, ((0, 2), (0, 4), (1, 5), (2, 4)), (0, 0, 1, 1, 2, 2), 3),
    ],
)
def test_mq_nd_regularity(src):
    with pytest.raises(GadgetError):
        gen_mq_nd(src)


def test_outputs_are_preprocessed_and_labelled():
    g = gen_hs_deg3(HittingSetInstance(2, ((0, 1), (1,)), 1))
    assert is_preprocessed(g.instance.graph)
    assert all(g.instance.graph.labels)
    assert g.provenance["generator"] == "hs3"


def test_source_validation():
    with pytest.raises(SourceError):
        HittingSetInstance(2, ((),), 1)
    with pytest.raises(SourceError):
        HittingSetInstance(2, ((1, 0),), 1)


def test_oracle_budget_helper():
    g = gen_hs_zero(HittingSetInstance(1, ((0,),), 1))
    assert oracle_candidates(g.instance) == 1 + g.instance.graph.n
    assert within_oracle_budget(g.instance)
    assert ORACLE_CANDIDATE_BUDGET >= 10**5


def test_catalog_sizes():
    assert sum(1 for _ in hitting_set_instances(2, 2, 1)) == 2 * (1 + 1 + 1) + 2 * (1 + 3 + 6)
    assert all(s.n <= 4 for s in cvt_instances(4))
    assert sum(1 for _ in multicolored_instances(2, 1)) == 2


def test_hs_sample_preserves_answers():
    srcs = list(hitting_set_instances(3, 2, 1))
    for src in random.Random(1).sample(srcs, 40):
        for gen in (gen_hs_zero, gen_hs_deg3):
            g = gen(src)
            if within_oracle_budget(g.instance):
                assert oracle(g) is src.solve()
