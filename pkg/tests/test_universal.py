from itertools import combinations

import numpy as np
import pytest

from iib.universal import build_universal_set, coverage_gaps, is_universal


def brute_covers(vectors, i):
    n = vectors.shape[1]
    for cols in combinations(range(n), i):
        seen = {tuple(row) for row in vectors[:, cols]}
        if len(seen) != 2**i:
            return False
    return True


def test_full_cube_when_n_equals_i():
    U = build_universal_set(3, 3)
    assert len(U) == 8 and is_universal(U.vectors, 3)


def test_two_constant_rows_cover_arity_one():
    rows = np.array([[0, 0], [1, 1]], dtype=np.uint8)
    assert is_universal(rows, 1)
    assert not is_universal(rows, 2)


def test_gap_report_names_the_missing_pattern():
    rows = np.array([[0, 0], [1, 1]], dtype=np.uint8)
    gaps = coverage_gaps(rows, 2)
    assert gaps and gaps[0][0] == (0, 1)


def test_six_three_exhaustive():
    U = build_universal_set(6, 3)
    assert brute_covers(U.vectors, 3)


@pytest.mark.parametrize("n", [9, 13, 20])
def test_larger_lengths_stay_universal(n):
    U = build_universal_set(n, 3)
    assert is_universal(U.vectors, 3)
    assert len(U) < 2**n


def test_bad_arguments():
    with pytest.raises(ValueError):
        build_universal_set(3, 4)
    with pytest.raises(ValueError):
        build_universal_set(-1, 0)


def test_fast_check_agrees_with_brute_force():
    rng = np.random.default_rng(3)
    for _ in range(40):
        rows = rng.integers(0, 2, size=(rng.integers(2, 20), 6), dtype=np.uint8)
        for i in (1, 2, 3):
            assert is_universal(rows, i) == brute_covers(rows, i)
