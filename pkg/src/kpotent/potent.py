"""Construction of (k+1)-potent incidence-algebra elements.

A potent element is determined by its diagonal (each entry a potent scalar)
and its values on the *free* pairs, the strict relation pairs whose two
diagonal entries differ.  Every other strict entry is forced: writing
(A^(k+1))_ij = c * a_ij + P, where c = sum_p r^p t^(k-p) and P collects the
paths that avoid the direct step i -> j, potency reads a_ij (1 - c) = P.
For r = t != 0 this gives a_ij = -P / k, for r = t = 0 it gives a_ij = P, and
for r != t it holds identically (c = 1, P = 0).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping

import numpy as np

from .counting import CharGuardFailed
from .field import (FieldElem, FieldSpec, char_divisibility_guard, diagonal_alphabet,
                    potent_codes)
from .incmat import UpperMatrix
from .poset import Poset
from .qpoly import QPolynomial


class CompletionError(ValueError):
    pass


class MissingFreeValue(CompletionError):
    pass


class ExtraFreeValue(CompletionError):
    pass


class ZeroDiagonalCase(CompletionError):
    pass


class NotPotentScalar(CompletionError):
    pass


def alphabet_codes(f: FieldSpec, k: int, mode: str = "s") -> list[int]:
    """Diagonal alphabet as codes: all potent scalars ("s") or {0, 1, w, ..., w^(k-1)} ("D")."""
    if mode == "s":
        return potent_codes(f, k)
    if mode == "D":
        return sorted(x.code for x in diagonal_alphabet(f, k))
    raise ValueError(f"unknown mode {mode!r}")


def _codes(values) -> tuple[int, ...]:
    return tuple(v.code if isinstance(v, FieldElem) else int(v) for v in values)


@dataclass(frozen=True)
class DiagonalAssignment:
    poset: Poset
    field: FieldSpec
    k: int
    values: tuple[int, ...]
    mode: str = "s"

    def __post_init__(self):
        object.__setattr__(self, "values", _codes(self.values))
        if len(self.values) != self.poset.n:
            raise CompletionError(f"need {self.poset.n} diagonal values, got {len(self.values)}")
        allowed = set(alphabet_codes(self.field, self.k, self.mode))
        for v in self.values:
            if v not in allowed:
                raise NotPotentScalar(f"{self.field!r}({v}) is not in the {self.mode}-mode alphabet "
                                      f"for k={self.k}")

    def __getitem__(self, i: int) -> FieldElem:
        return FieldElem(self.field, self.values[i])


@dataclass(frozen=True)
class FreeEntrySlots:
    pairs: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, ij) -> bool:
        return ij in self.pairs


def free_slots(d: DiagonalAssignment) -> FreeEntrySlots:
    v = d.values
    return FreeEntrySlots(tuple(sorted((i, j) for i, j in d.poset.strict_pairs if v[i] != v[j])))


def _require_guard(f: FieldSpec, k: int) -> None:
    guard = char_divisibility_guard(f, k)
    if not guard:
        raise CharGuardFailed(guard.reason)


def complete_potent(d: DiagonalAssignment, free_values: Mapping[tuple[int, int], int | FieldElem]
                    ) -> UpperMatrix:
    """The unique (k+1)-potent element with diagonal ``d`` and the given free entries.

    ``free_values`` must cover exactly :func:`free_slots` (0-based pairs).
    """
    f, P, k = d.field, d.poset, d.k
    _require_guard(f, k)
    slots = free_slots(d)
    given = {ij: (v.code if isinstance(v, FieldElem) else int(v)) for ij, v in free_values.items()}
    missing = [ij for ij in slots if ij not in given]
    if missing:
        raise MissingFreeValue(f"no value for free pairs {missing}")
    extra = [ij for ij in given if ij not in slots.pairs]
    if extra:
        raise ExtraFreeValue(f"pairs {extra} are not free for this diagonal")
    bad = [ij for ij, v in given.items() if not 0 <= v < f.q]
    if bad:
        raise CompletionError(f"free values at {bad} are not codes of {f!r}")

    n = P.n
    A = [[0] * n for _ in range(n)]
    for i, v in enumerate(d.values):
        A[i][i] = v
    add, mul = f.add, f.mul
    # rows i are filled bottom-up; within a row, columns left to right, so every
    # entry a path can touch is already known
    for i in range(n - 1, -1, -1):
        r = A[i][i]
        # R[p][t] = (A^p)[i][t]
        R = [[0] * n for _ in range(k + 2)]
        rp = 1
        for p in range(k + 2):
            R[p][i] = rp
            rp = mul(rp, r)
        for j in range(i + 1, n):
            if (i, j) not in P.leq:
                continue
            t = A[j][j]
            mids = [m for m in P.interval(i, j) if m != i and m != j]
            Q = [0] * (k + 2)
            g = [0] * (k + 2)
            for p in range(1, k + 2):
                acc = mul(Q[p - 1], t)
                for m in mids:
                    x = R[p - 1][m]
                    if x:
                        y = A[m][j]
                        if y:
                            acc = add(acc, mul(x, y))
                Q[p] = acc
                g[p] = add(R[p - 1][i], mul(g[p - 1], t))
            path_sum, c = Q[k + 1], g[k + 1]
            if (i, j) in given:
                a = given[(i, j)]
                if path_sum:
                    raise AssertionError(f"nonzero path sum at free pair {(i, j)}")
            else:
                one_minus_c = f.sub(1, c)
                a = f.div(path_sum, one_minus_c)
            A[i][j] = a
            for p in range(1, k + 2):
                R[p][j] = add(Q[p], mul(a, g[p]))
    return UpperMatrix.from_dense(P, f, A)


def forced_entry_closed_form(d: DiagonalAssignment, partial: UpperMatrix, pair: tuple[int, int]
                             ) -> FieldElem:
    """Forced entry by the explicit weighted sum over index sequences.

    a_ij = -(1/k) sum_{s=2}^{k+1} (k+2-s) r^(k+1-s)
              sum_{i < i_1 <= ... <= i_{s-1} < j} a_{i,i_1} a_{i_1,i_2} ... a_{i_{s-1},j}

    Repeated indices contribute diagonal factors.  Only entries strictly
    inside the pair are read from ``partial``.  Undefined for r = 0.
    """
    f, k = d.field, d.k
    i, j = pair
    r = d.values[i]
    if d.values[j] != r:
        raise CompletionError(f"pair {pair} is free, not forced")
    if r == 0:
        raise ZeroDiagonalCase("the closed form does not apply to a zero diagonal value")
    total = 0
    for s in range(2, k + 2):
        inner = 0
        for seq in itertools.combinations_with_replacement(range(i + 1, j), s - 1):
            idx = (i,) + seq + (j,)
            prod = 1
            for a, b in zip(idx, idx[1:]):
                prod = f.mul(prod, partial.code(a, b))
                if not prod:
                    break
            inner = f.add(inner, prod)
        weight = f.mul(f.from_int(k + 2 - s), f.pow(r, k + 1 - s))
        total = f.add(total, f.mul(weight, inner))
    return FieldElem(f, f.neg(f.div(total, f.from_int(k))))


def diagonal_assignments(poset: Poset, f: FieldSpec, k: int, mode: str = "s"
                         ) -> Iterator[DiagonalAssignment]:
    """All diagonals, lexicographic in codes."""
    alpha = alphabet_codes(f, k, mode)
    for values in itertools.product(alpha, repeat=poset.n):
        yield DiagonalAssignment(poset, f, k, values, mode)


def enumerate_potents(poset: Poset, f: FieldSpec, k: int, mode: str = "s") -> Iterator[UpperMatrix]:
    """Every potent element with diagonal in the alphabet, via completion."""
    _require_guard(f, k)
    for d in diagonal_assignments(poset, f, k, mode):
        slots = free_slots(d).pairs
        for vals in itertools.product(range(f.q), repeat=len(slots)):
            yield complete_potent(d, dict(zip(slots, vals)))


def free_slot_polynomial(poset: Poset, s: int, fixed: Mapping[int, int] | None = None,
                         chunk: int = 1 << 16) -> QPolynomial:
    """sum over labelings of the elements by s symbols of q^(number of free pairs).

    ``fixed`` pins some positions to given symbols.  This is the structured
    count: it walks every diagonal pattern and counts differing comparable
    pairs, without any composition algebra.
    """
    fixed = dict(fixed or {})
    free_pos = [i for i in range(poset.n) if i not in fixed]
    strict = poset.strict_pairs
    total = s ** len(free_pos)
    hist = np.zeros(len(strict) + 1, dtype=np.int64)
    if strict:
        ii = np.array([a for a, _ in strict])
        jj = np.array([b for _, b in strict])
    for lo in range(0, total, chunk):
        idx = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        labels = np.empty((len(idx), poset.n), dtype=np.int16)
        for pos, sym in fixed.items():
            labels[:, pos] = sym
        rest = idx
        for pos in reversed(free_pos):
            rest, labels[:, pos] = np.divmod(rest, s)
        if strict:
            nfree = (labels[:, ii] != labels[:, jj]).sum(axis=1)
        else:
            nfree = np.zeros(len(idx), dtype=np.int64)
        hist += np.bincount(nfree, minlength=len(hist))
    return QPolynomial({e: int(c) for e, c in enumerate(hist)})


def count_by_construction(poset: Poset, f: FieldSpec, k: int, mode: str = "s") -> int:
    """Number of potent elements: sum over diagonals of q^(#free pairs)."""
    _require_guard(f, k)
    s = len(alphabet_codes(f, k, mode))
    return free_slot_polynomial(poset, s)(f.q)


def count_by_construction_slow(poset: Poset, f: FieldSpec, k: int, mode: str = "s") -> int:
    """Same count walking actual DiagonalAssignment objects; for small posets."""
    _require_guard(f, k)
    return sum(f.q ** len(free_slots(d)) for d in diagonal_assignments(poset, f, k, mode))


def forced_pairs(d: DiagonalAssignment) -> tuple[tuple[int, int], ...]:
    v = d.values
    return tuple(ij for ij in d.poset.strict_pairs if v[ij[0]] == v[ij[1]])
