"""Closed-form counts of (k+1)-potent elements.

Every count is a sum over diagonal value patterns of ``multinomial * q^e``,
where ``e`` is the number of comparable pairs whose diagonal values differ.
Each function takes the number ``s`` of potent scalars explicitly and returns a
:class:`QPolynomial`; pass ``q=`` to get the integer value instead.  For a
concrete field use :func:`num_scalars` to get ``s``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .field import FieldSpec, char_divisibility_guard, primitive_kth_root
from .qpoly import QPolynomial, compositions, delta, multinomial


class CharGuardFailed(ValueError):
    pass


@dataclass(frozen=True)
class DeltaStat:
    parts: tuple[int, ...]

    @property
    def value(self) -> int:
        return delta(self.parts)


@dataclass(frozen=True)
class PartCompositionSum:
    """The summation domain n_1 + ... + n_s = n, 0 <= n_i."""

    n: int
    s: int

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return compositions(self.n, self.s)

    def __len__(self) -> int:
        return math.comb(self.n + self.s - 1, self.s - 1)


def num_scalars(f: FieldSpec, k: int, mode: str = "s") -> int:
    """Size of the diagonal alphabet.

    ``mode="s"``: all solutions of x^(k+1) = x, gcd(k, q-1) + 1 of them.
    ``mode="D"``: {0, 1, w, ..., w^(k-1)}; requires k | q-1 and gives k+1.
    """
    guard = char_divisibility_guard(f, k)
    if not guard:
        raise CharGuardFailed(guard.reason)
    if mode == "D":
        primitive_kth_root(f, k)
        return k + 1
    if mode != "s":
        raise ValueError(f"unknown mode {mode!r}")
    return math.gcd(k, f.q - 1) + 1


def _finish(poly: QPolynomial, q: int | None):
    return poly if q is None else poly(q)


def _check(**kw: int) -> None:
    for name, v in kw.items():
        if v < 1:
            raise ValueError(f"{name} must be >= 1, got {v}")


def count_triangular(n: int, s: int, q: int | None = None):
    """Number of (k+1)-potent n x n upper triangular matrices, s potent scalars."""
    _check(n=n, s=s)
    acc: dict[int, int] = {}
    for parts in compositions(n, s):
        d = delta(parts)
        acc[d] = acc.get(d, 0) + multinomial(n, parts)
    return _finish(QPolynomial(acc), q)


def star_P(m: int, s: int, q: int | None = None):
    """Arm polynomial: patterns of an m-chain hanging above a hub fixed to the first scalar.

    The extra exponent counts arm positions whose value differs from the hub.
    """
    _check(m=m, s=s)
    acc: dict[int, int] = {}
    for parts in compositions(m, s):
        d = delta(parts) + (m - parts[0])
        acc[d] = acc.get(d, 0) + multinomial(m, parts)
    return _finish(QPolynomial(acc), q)


def star_count(n: int, arms: Sequence[int], s: int, q: int | None = None):
    """Star poset: a chain x_0 < ... < x_n and further chains of the given lengths above x_0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    poly = count_triangular(n + 1, s)
    for m in arms:
        poly = poly * star_P(m, s)
    return _finish(poly, q)


def rhombus_count(n: int, m: int, s: int, q: int | None = None):
    """Rhombus poset x_0 < x_1..x_n < x_{n+1} with a parallel y_1..y_m chain.

    Bottom fixed to the first scalar (factor s by symmetry); the top either
    agrees with the bottom or is one of the other s-1 values.
    """
    _check(n=n, m=m, s=s)
    acc: dict[int, int] = {}
    for ns in compositions(n, s):
        wn, dn = multinomial(n, ns), delta(ns)
        for ms in compositions(m, s):
            w = s * wn * multinomial(m, ms)
            base = dn + delta(ms)
            off = (n - ns[0]) + (m - ms[0])
            exps = [base + 2 * off]
            for j in range(1, s):
                exps.append(base + off + 1 + (n - ns[j]) + (m - ms[j]))
            for e in exps:
                acc[e] = acc.get(e, 0) + w
    return _finish(QPolynomial(acc), q)


def rhombus_count_statement_form(n: int, m: int, s: int, q: int | None = None):
    """Rhombus sum with the cross exponent sum_{i<j} (n_i m_j + m_i m_j).

    This variant disagrees with :func:`rhombus_count`, which the structured
    count and the oracle confirm.  It is kept only to exhibit the discrepancy.
    """
    _check(n=n, m=m, s=s)
    acc: dict[int, int] = {}
    for ns in compositions(n, s):
        for ms in compositions(m, s):
            w = s * multinomial(n, ns) * multinomial(m, ms)
            cross = sum(ns[i] * ms[j] + ms[i] * ms[j]
                        for i in range(s) for j in range(i + 1, s))
            exps = [cross + 2 * (n - ns[0] + m - ms[0])]
            for j in range(1, s):
                exps.append(cross + 2 * (n + m) + 1 - (ns[0] + ns[j] + ms[0] + ms[j]))
            for e in exps:
                acc[e] = acc.get(e, 0) + w
    return _finish(QPolynomial(acc), q)


def y_count(n: int, m: int, l: int, s: int, q: int | None = None):
    """Y poset: chain r_1..r_n below two incomparable chains s_1..s_m and t_1..t_l."""
    _check(n=n, m=m, l=l, s=s)
    acc: dict[int, int] = {}
    for ns in compositions(n, s):
        wn, dn = multinomial(n, ns), delta(ns)
        for ms in compositions(m, s):
            wm, dm = multinomial(m, ms), delta(ms)
            # sum_{i != j} n_i m_j = n*m - sum_i n_i m_i
            cross_m = n * m - sum(a * b for a, b in zip(ns, ms))
            for ls in compositions(l, s):
                cross_l = n * l - sum(a * b for a, b in zip(ns, ls))
                e = dn + dm + delta(ls) + cross_m + cross_l
                acc[e] = acc.get(e, 0) + wn * wm * multinomial(l, ls)
    return _finish(QPolynomial(acc), q)


def _partitions_sorted(n: int, j: int, lo: int = 1) -> Iterator[tuple[int, ...]]:
    """Non-decreasing lists of j positive integers >= lo summing to n."""
    if j == 0:
        if n == 0:
            yield ()
        return
    for first in range(lo, n // j + 1):
        for rest in _partitions_sorted(n - first, j - 1, first):
            yield (first,) + rest


def _repetition_factor(parts: Sequence[int]) -> int:
    """r_1! r_2! ... for the run lengths r_i of equal consecutive parts."""
    out, run = 1, 1
    for a, b in zip(parts, parts[1:]):
        if a == b:
            run += 1
        else:
            out *= math.factorial(run)
            run = 1
    return out * math.factorial(run)


def slowik_count(n: int, l: int, q: int | None = None):
    """Triangular count written as a sum over partitions of n into at most l parts.

    Each partition m_1 <= ... <= m_j contributes
    l!/((l-j)! g) * multinomial(n; m) * q^((n^2 - sum m_u^2)/2),
    g being the product of factorials of the multiplicities of equal parts.
    """
    _check(n=n, l=l)
    acc: dict[int, int] = {}
    for j in range(1, min(l, n) + 1):
        falling = math.factorial(l) // math.factorial(l - j)
        for parts in _partitions_sorted(n, j):
            c, rem = divmod(falling * multinomial(n, parts), _repetition_factor(parts))
            assert rem == 0
            e = (n * n - sum(x * x for x in parts)) // 2
            acc[e] = acc.get(e, 0) + c
    return _finish(QPolynomial(acc), q)


@dataclass(frozen=True)
class EquivReport:
    ok: bool
    checked: int
    counterexample: tuple[int, int, QPolynomial, QPolynomial] | None = None

    def __bool__(self) -> bool:
        return self.ok


def slowik_equiv_check(n_max: int, l_max: int) -> EquivReport:
    """Compare :func:`slowik_count` with the composition form for all n <= n_max, l <= l_max."""
    _check(n_max=n_max, l_max=l_max)
    checked = 0
    for n, l in product(range(1, n_max + 1), range(1, l_max + 1)):
        a, b = slowik_count(n, l), count_triangular(n, l)
        checked += 1
        if a != b:
            return EquivReport(False, checked, (n, l, a, b))
    return EquivReport(True, checked)


def max_delta(n: int, s: int) -> int:
    """Delta of the most balanced composition of n into s parts."""
    base, extra = divmod(n, s)
    parts = [base + 1] * extra + [base] * (s - extra)
    return delta(parts)
