"""(n, i)-universal sets of binary vectors.

A family of length-``n`` 0/1 vectors is (n, i)-universal when, restricted to
any ``i`` coordinates, it shows all ``2**i`` patterns. Construction:

* ``n <= 2 i``: the full cube.
* otherwise hash the coordinates into ``m = i**2`` buckets with every
  ``x -> ((a x) mod p) mod m`` (``p`` prime >= n, ``a = 1..p-1``) and pull
  back an (m, i)-universal family over the buckets. For a fixed i-set the
  expected number of colliding pairs over ``a`` is below one, so some ``a``
  is injective on it and the pulled-back vectors cover every pattern.
* the bucket-level family is grown greedily from a seeded generator while an
  exhaustive coverage table is maintained, so it is correct by construction;
  too-large tables fall back to a recursive split-at-a-cut construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb

import numpy as np

GREEDY_TABLE_LIMIT = 20_000_000
SPLIT_ROW_LIMIT = 2_000_000


class UniversalSetTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class UniversalSet:
    n: int
    i: int
    vectors: np.ndarray  # (N, n) uint8

    def __len__(self) -> int:
        return self.vectors.shape[0]


def _cube(n: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), dtype=np.uint8)
    return np.array(list(product((0, 1), repeat=n)), dtype=np.uint8)


def _next_prime(x: int) -> int:
    x = max(x, 2)
    while any(x % d == 0 for d in range(2, int(x**0.5) + 1)):
        x += 1
    return x


def _patterns(vectors: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """Pattern index of every vector on every column tuple: ``(len(cols), N)``."""
    weights = (1 << np.arange(cols.shape[1], dtype=np.int64))
    # (C, i, N) -> (C, N)
    bits = vectors[:, cols].transpose(1, 2, 0).astype(np.int64)
    return np.tensordot(weights, bits, axes=([0], [1]))


def coverage_gaps(vectors: np.ndarray, i: int) -> list[tuple[tuple[int, ...], int]]:
    """All (index tuple, missing pattern) pairs; empty iff the family is universal."""
    n = vectors.shape[1]
    gaps = []
    if i == 0:
        return [] if len(vectors) else [((), 0)]
    chunk = max(1, 4_000_000 // (len(vectors) * i))
    it = combinations(range(n), i)
    while True:
        block = [c for _, c in zip(range(chunk), it)]
        if not block:
            return gaps
        cols = np.asarray(block, dtype=np.intp)
        pat = _patterns(vectors, cols)
        seen = np.zeros((len(block), 1 << i), dtype=bool)
        seen[np.arange(len(block))[:, None], pat] = True
        for r, p in zip(*np.nonzero(~seen)):
            gaps.append((block[r], int(p)))


def is_universal(vectors: np.ndarray, i: int) -> bool:
    return not coverage_gaps(vectors, i)


@lru_cache(maxsize=None)
def _greedy(m: int, i: int) -> np.ndarray:
    cols = np.asarray(list(combinations(range(m), i)), dtype=np.intp)
    uncovered = np.ones((len(cols), 1 << i), dtype=bool)
    rows = np.arange(len(cols))
    rng = np.random.default_rng([m, i, 0x1b5])
    chosen = []
    remaining = uncovered.sum()
    while remaining:
        cand = rng.integers(0, 2, size=(32, m), dtype=np.uint8)
        pat = _patterns(cand, cols)  # (C, 32)
        gain = uncovered[rows[:, None], pat].sum(axis=0)
        best = int(np.argmax(gain))
        if gain[best] == 0:
            continue
        chosen.append(cand[best])
        uncovered[rows, pat[:, best]] = False
        remaining = uncovered.sum()
    return np.array(chosen, dtype=np.uint8)


@lru_cache(maxsize=None)
def _split(m: int, i: int) -> np.ndarray:
    # any sorted i-set has its first i//2 members left of some cut c
    if i == 0:
        return np.zeros((1, m), dtype=np.uint8)
    if i >= m:
        return _cube(m)
    if i == 1:
        return np.array([[0] * m, [1] * m], dtype=np.uint8)
    a, b = i // 2, i - i // 2
    parts = []
    for c in range(a, m - b + 1):
        left, right = _split(c, a), _split(m - c, b)
        li = np.repeat(np.arange(len(left)), len(right))
        ri = np.tile(np.arange(len(right)), len(left))
        parts.append(np.hstack([left[li], right[ri]]))
    return np.unique(np.vstack(parts), axis=0)


@lru_cache(maxsize=None)
def _split_rows_bound(m: int, i: int) -> int:
    if i == 0:
        return 1
    if i >= m:
        return 1 << m
    if i == 1:
        return 2
    a, b = i // 2, i - i // 2
    return sum(_split_rows_bound(c, a) * _split_rows_bound(m - c, b) for c in range(a, m - b + 1))


def _bucket_family(m: int, i: int) -> np.ndarray:
    if m <= 2 * i:
        return _cube(m)
    if comb(m, i) << i <= GREEDY_TABLE_LIMIT:
        return _greedy(m, i)
    if _split_rows_bound(m, i) > SPLIT_ROW_LIMIT:
        raise UniversalSetTooLarge(
            f"no ({m}, {i})-universal family within the size limits; "
            "use the randomized mode instead"
        )
    return _split(m, i)


def build_universal_set(n: int, i: int) -> UniversalSet:
    """Return an (n, i)-universal family (rows are the vectors)."""
    if i < 0 or n < 0:
        raise ValueError(f"negative arguments n={n}, i={i}")
    if i > n:
        raise ValueError(f"coverage arity i={i} exceeds vector length n={n}")
    if i == 0:
        return UniversalSet(n, i, np.zeros((1, n), dtype=np.uint8))
    if n <= 2 * i:
        return UniversalSet(n, i, _cube(n))
    m = i * i
    if m >= n:
        return UniversalSet(n, i, _bucket_family(n, i))
    inner = _bucket_family(m, i)
    p = _next_prime(n)
    x = np.arange(n)
    blocks = [inner[:, (a * x % p) % m] for a in range(1, p)]
    vectors = np.unique(np.vstack(blocks), axis=0)
    return UniversalSet(n, i, vectors)
