"""Univariate polynomials in q with exact integer coefficients."""

from __future__ import annotations

import math
import re
from typing import Iterable, Iterator, Mapping, Sequence


class PartsMismatch(ValueError):
    pass


class QPolyParseError(ValueError):
    pass


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / (parts[0]! parts[1]! ...), exact."""
    if any(x < 0 for x in parts):
        raise PartsMismatch(f"negative part in {list(parts)}")
    if sum(parts) != n:
        raise PartsMismatch(f"parts {list(parts)} do not sum to {n}")
    out, left = 1, n
    for x in parts:
        out *= math.comb(left, x)
        left -= x
    return out


def compositions(n: int, s: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of n into s non-negative parts, colexicographic order.

    Colex means the last part varies slowest: (n,0,..), (n-1,1,0,..), ...
    Yields C(n+s-1, s-1) tuples.
    """
    if s < 0 or n < 0:
        raise ValueError("n and s must be non-negative")
    if s == 0:
        if n == 0:
            yield ()
        return
    if s == 1:
        yield (n,)
        return
    for last in range(n + 1):
        for head in compositions(n - last, s - 1):
            yield head + (last,)


def delta(parts: Sequence[int]) -> int:
    """Number of index pairs i<j whose labels differ: sum_{i<j} parts_i * parts_j."""
    n = sum(parts)
    return (n * n - sum(x * x for x in parts)) // 2


class QPolynomial:
    """Sparse polynomial in q: exponent -> nonzero integer coefficient.

    Immutable and hashable.  ``str`` gives the table style used in the golden
    files, e.g. ``12q^5+6q^4+8q^3+1``; :meth:`parse` reads it back.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for d, c in items:
            if d < 0:
                raise ValueError(f"negative exponent {d}")
            acc[d] = acc.get(d, 0) + c
        self._terms = tuple(sorted(((d, c) for d, c in acc.items() if c), reverse=True))

    @classmethod
    def monomial(cls, coeff: int, degree: int) -> QPolynomial:
        return cls({degree: coeff})

    @classmethod
    def constant(cls, c: int) -> QPolynomial:
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    @property
    def degree(self) -> float | int:
        return self._terms[0][0] if self._terms else -math.inf

    def coeff(self, d: int) -> int:
        for e, c in self._terms:
            if e == d:
                return c
        return 0

    @property
    def leading(self) -> tuple[int, int]:
        """(coefficient, exponent) of the top term; (0, -1) for the zero polynomial."""
        if not self._terms:
            return (0, -1)
        d, c = self._terms[0]
        return (c, d)

    def is_zero(self) -> bool:
        return not self._terms

    # ring operations

    @staticmethod
    def _lift(other) -> QPolynomial:
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return QPolynomial(list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial((d, -c) for d, c in self._terms)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial((d, c * other) for d, c in self._terms)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for d1, c1 in self._terms:
            for d2, c2 in other._terms:
                acc[d1 + d2] = acc.get(d1 + d2, 0) + c1 * c2
        return QPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = QPolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __call__(self, q: int) -> int:
        return qp_eval(self, q)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # text form

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (d, c) in enumerate(self._terms):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if d == 0:
                body = str(a)
            else:
                body = ("" if a == 1 else str(a)) + ("q" if d == 1 else f"q^{d}")
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(sign + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"QPolynomial('{self}')"

    _TERM = re.compile(r"([+-])?(\d*)\*?(?:(q)(?:\^\{?(\d+)\}?)?)?")

    @classmethod
    def parse(cls, text: str) -> QPolynomial:
        """Inverse of ``str``.  Whitespace is ignored; '−' is read as '-';
        TeX-style braces (``q^{10}``) and an explicit ``*`` are tolerated."""
        s = re.sub(r"\s+", "", text).replace("−", "-")
        if not s:
            raise QPolyParseError("empty polynomial")
        pos, acc = 0, {}
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if m is None or m.end() == pos or not (m.group(2) or m.group(3)):
                raise QPolyParseError(f"cannot parse {text!r} at offset {pos}")
            if pos > 0 and m.group(1) is None:
                raise QPolyParseError(f"missing sign in {text!r} at offset {pos}")
            sign = -1 if m.group(1) == "-" else 1
            c = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                d = int(m.group(4)) if m.group(4) else 1
            else:
                d = 0
            acc[d] = acc.get(d, 0) + sign * c
            pos = m.end()
        return cls(acc)


def monomial(c: int, d: int) -> QPolynomial:
    return QPolynomial.monomial(c, d)


def qp_eval(poly: QPolynomial, q: int) -> int:
    """Exact value at an integer q (Horner over the sparse terms)."""
    out, prev = 0, None
    for d, c in poly:
        if prev is not None:
            out *= q ** (prev - d)
        out += c
        prev = d
    if prev:
        out *= q ** prev
    return out
