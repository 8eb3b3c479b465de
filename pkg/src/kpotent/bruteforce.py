"""Exhaustive oracle: scan every incidence-algebra element and test A^(k+1) = A.

The state space is q^L, L = number of relation pairs.  State index ``s`` has
base-q digits (most significant first) giving the entries on ``poset.pairs``,
so a contiguous index range is a block of states with fixed leading entries.
Ranges are scanned in numpy batches and may be farmed out to worker
processes; counts are reduced by summation, so the result does not depend on
the number of workers.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

import numpy as np

from .field import FieldSpec
from .incmat import UpperMatrix
from .poset import Poset

DEFAULT_CAP = 10 ** 8
BATCH = 1 << 15


class SearchSpaceTooLarge(ValueError):
    pass


def default_cap() -> int:
    env = os.environ.get("KPOTENT_CAP")
    return int(float(env)) if env else DEFAULT_CAP


def state_space(poset: Poset, f: FieldSpec) -> int:
    return f.q ** len(poset.pairs)


def _check_cap(poset: Poset, f: FieldSpec, cap: int | None) -> int:
    cap = default_cap() if cap is None else cap
    total = state_space(poset, f)
    if total > cap:
        raise SearchSpaceTooLarge(f"{f.q}^{len(poset.pairs)} = {total} states exceeds cap {cap}")
    return total


class _Arith:
    """Batched arithmetic on code arrays: plain mod p or lookup tables."""

    def __init__(self, f: FieldSpec):
        self.f = f
        self.prime = f.e == 1
        if not self.prime:
            q = f.q
            self.add_t = np.array([[f.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
            self.mul_t = np.array([[f.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)

    def matmul(self, x: np.ndarray, y: np.ndarray, poset: Poset) -> np.ndarray:
        if self.prime:
            return np.matmul(x, y) % self.f.p
        out = np.zeros_like(x)
        for i, j in poset.leq:
            acc = np.zeros(x.shape[0], dtype=np.int64)
            for t in poset.interval(i, j):
                acc = self.add_t[acc, self.mul_t[x[:, i, t], y[:, t, j]]]
            out[:, i, j] = acc
        return out


def _decode(lo: int, hi: int, poset: Poset, q: int) -> np.ndarray:
    pairs = poset.pairs
    n = poset.n
    idx = np.arange(lo, hi, dtype=np.int64)
    mats = np.zeros((hi - lo, n, n), dtype=np.int64)
    for i, j in reversed(pairs):
        idx, mats[:, i, j] = np.divmod(idx, q)
    return mats


def _potent_mask(mats: np.ndarray, k: int, poset: Poset, arith: _Arith) -> np.ndarray:
    power = mats
    for _ in range(k):
        power = arith.matmul(power, mats, poset)
    return (power == mats).all(axis=(1, 2))


def _count_range(args) -> int:
    poset, f, k, lo, hi = args
    arith = _Arith(f)
    total = 0
    for a in range(lo, hi, BATCH):
        b = min(a + BATCH, hi)
        total += int(_potent_mask(_decode(a, b, poset, f.q), k, poset, arith).sum())
    return total


def _ranges(total: int, parts: int) -> list[tuple[int, int]]:
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def brute_force_count(poset: Poset, f: FieldSpec, k: int, cap: int | None = None,
                      workers: int = 1) -> int:
    """Number of elements A of the incidence algebra with A^(k+1) = A, by exhaustion.

    No characteristic restriction applies; this is a plain scan.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    total = _check_cap(poset, f, cap)
    if workers <= 1:
        return _count_range((poset, f, k, 0, total))
    jobs = [(poset, f, k, lo, hi) for lo, hi in _ranges(total, workers * 4)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_range, jobs))


def brute_force_potents(poset: Poset, f: FieldSpec, k: int, cap: int | None = None
                        ) -> Iterator[UpperMatrix]:
    """Stream the potent elements found by the scan, in state-index order."""
    total = _check_cap(poset, f, cap)
    arith = _Arith(f)
    for a in range(0, total, BATCH):
        b = min(a + BATCH, total)
        mats = _decode(a, b, poset, f.q)
        for m in mats[_potent_mask(mats, k, poset, arith)]:
            yield UpperMatrix.from_dense(poset, f, m.tolist())
