"""Finite posets with a fixed linear extension.

Elements are addressed by position in the linear extension, so every relation
pair (i, j) with x_i <= x_j has i <= j and the incidence algebra embeds in
upper triangular matrices.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class PosetError(ValueError):
    pass


class ParseError(PosetError):
    pass


class CycleError(PosetError):
    pass


class DuplicateLabel(PosetError):
    pass


class EmptyArm(PosetError):
    pass


def transitive_closure(n: int, edges: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    """Reflexive-transitive closure of edges on range(n)."""
    up = [{i} for i in range(n)]
    succ = [set() for _ in range(n)]
    for a, b in edges:
        succ[a].add(b)
    # DFS from every node; n is small
    for i in range(n):
        stack = list(succ[i])
        seen = up[i]
        while stack:
            v = stack.pop()
            if v not in seen:
                seen.add(v)
                stack.extend(succ[v])
    return frozenset((i, j) for i in range(n) for j in up[i])


def transitive_reduction(leq: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    strict = {(a, b) for a, b in leq if a != b}
    above: dict[int, set[int]] = {}
    for a, b in strict:
        above.setdefault(a, set()).add(b)
    covers = set()
    for a, b in strict:
        if not any(b in above.get(c, ()) for c in above.get(a, ()) if c != b):
            covers.add((a, b))
    return frozenset(covers)


@dataclass(frozen=True, eq=False)
class Poset:
    """A finite poset in a fixed linear extension.

    ``leq`` holds index pairs (i, j), i <= j, including the diagonal.
    Construction checks reflexivity, antisymmetry, transitivity and that the
    element order is a linear extension.
    """

    elements: tuple[str, ...]
    leq: frozenset[tuple[int, int]]

    def __post_init__(self):
        n = len(self.elements)
        if len(set(self.elements)) != n:
            raise DuplicateLabel(f"duplicate labels in {self.elements}")
        for i, j in self.leq:
            if not (0 <= i < n and 0 <= j < n):
                raise PosetError(f"pair {(i, j)} out of range")
            if i > j:
                raise PosetError(f"pair {(i, j)} violates the linear extension")
        if any((i, i) not in self.leq for i in range(n)):
            raise PosetError("relation is not reflexive")
        if transitive_closure(n, self.leq) != self.leq:
            raise PosetError("relation is not transitive")

    @classmethod
    def from_covers(cls, elements: Sequence[str], covers: Iterable[tuple[int, int]]) -> Poset:
        """Build from cover (or any generating) pairs given as positions in ``elements``.

        ``elements`` must already be a linear extension.
        """
        return cls(tuple(elements), transitive_closure(len(elements), covers))

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def n(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self.leq == other.leq

    def __hash__(self) -> int:
        return hash((self.elements, self.leq))

    def __repr__(self) -> str:
        return f"Poset({' '.join(self.elements)}; {len(self.leq)} pairs)"

    @cached_property
    def covers(self) -> frozenset[tuple[int, int]]:
        return transitive_reduction(self.leq)

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """All relation pairs sorted by (span, i)."""
        return tuple(sorted(self.leq, key=lambda p: (p[1] - p[0], p[0])))

    @cached_property
    def strict_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(p for p in self.pairs if p[0] != p[1])

    @cached_property
    def _interval(self) -> dict[tuple[int, int], tuple[int, ...]]:
        out = {}
        for i, j in self.leq:
            out[(i, j)] = tuple(t for t in range(i, j + 1)
                                if (i, t) in self.leq and (t, j) in self.leq)
        return out

    def interval(self, i: int, j: int) -> tuple[int, ...]:
        """Positions t with x_i <= x_t <= x_j (empty if x_i, x_j are incomparable)."""
        return self._interval.get((i, j), ())

    def index(self, label: str) -> int:
        return self.elements.index(label)

    def le(self, i: int, j: int) -> bool:
        return (i, j) in self.leq

    def same_shape(self, other: Poset) -> bool:
        """Equal relation-pair sets on positions (labels ignored)."""
        return self.leq == other.leq

    def render(self) -> str:
        el = " ".join(self.elements)
        cv = " ".join(f"{self.elements[a]}<{self.elements[b]}" for a, b in sorted(self.covers))
        return f"elements: {el}\ncovers: {cv}\n"


def poset_chain(n: int) -> Poset:
    if n < 1:
        raise PosetError("chain length must be >= 1")
    return Poset.from_covers([f"x{i}" for i in range(1, n + 1)],
                             [(i, i + 1) for i in range(n - 1)])


def _arm_labels(arms: Sequence[int]) -> list[list[str]]:
    if len(arms) == 1:
        return [[f"y{i}" for i in range(1, arms[0] + 1)]]
    return [[f"y{t}_{i}" for i in range(1, m + 1)] for t, m in enumerate(arms, start=2)]


def poset_star(n: int, arms: Sequence[int] = ()) -> Poset:
    """Minimum x_0 with the chain x_1..x_n and one further chain per arm length above it.

    ``poset_star(0, [])`` is the single point x_0.
    """
    if n < 0:
        raise PosetError("n must be >= 0")
    if any(m < 1 for m in arms):
        raise EmptyArm(f"arm lengths must be >= 1, got {list(arms)}")
    labels = [f"x{i}" for i in range(n + 1)]
    covers = [(i, i + 1) for i in range(n)]
    for arm in _arm_labels(list(arms)):
        start = len(labels)
        labels.extend(arm)
        covers.append((0, start))
        covers.extend((start + i, start + i + 1) for i in range(len(arm) - 1))
    return Poset.from_covers(labels, covers)


def poset_rhombus(n: int, m: int) -> Poset:
    """x_0 < x_1 < ... < x_n < x_{n+1} and x_0 < y_1 < ... < y_m < x_{n+1}."""
    if n < 1 or m < 1:
        raise PosetError("rhombus needs n >= 1 and m >= 1")
    labels = [f"x{i}" for i in range(n + 1)] + [f"y{i}" for i in range(1, m + 1)] + [f"x{n + 1}"]
    top = n + m + 1
    covers = [(i, i + 1) for i in range(n)] + [(n, top)]
    y0 = n + 1
    covers += [(0, y0)] + [(y0 + i, y0 + i + 1) for i in range(m - 1)] + [(y0 + m - 1, top)]
    return Poset.from_covers(labels, covers)


def poset_y(n: int, m: int, l: int) -> Poset:
    """Chain r_1..r_n below the two incomparable chains s_1..s_m and t_1..t_l."""
    if min(n, m, l) < 1:
        raise PosetError("Y poset needs n, m, l >= 1")
    labels = ([f"r{i}" for i in range(1, n + 1)] + [f"s{i}" for i in range(1, m + 1)]
              + [f"t{i}" for i in range(1, l + 1)])
    covers = [(i, i + 1) for i in range(n - 1)]
    s0, t0 = n, n + m
    covers += [(n - 1, s0)] + [(s0 + i, s0 + i + 1) for i in range(m - 1)]
    covers += [(n - 1, t0)] + [(t0 + i, t0 + i + 1) for i in range(l - 1)]
    return Poset.from_covers(labels, covers)


def parse_poset(text: str) -> Poset:
    """Read the ``elements:`` / ``covers:`` text format.

    Keys may be followed by tokens on the same line or on continuation lines;
    ``#`` starts a comment.  The linear extension is the stable topological
    order: among available elements the earliest declared comes first.
    """
    sections: dict[str, list[str]] = {}
    current = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.match(r"^(elements|covers)\s*:(.*)$", line)
        if m:
            current = m.group(1)
            if current in sections:
                raise ParseError(f"repeated section {current!r}")
            sections[current] = m.group(2).split()
        elif current is None:
            raise ParseError(f"unexpected line {raw!r}")
        else:
            sections[current].extend(line.split())
    if "elements" not in sections:
        raise ParseError("missing 'elements:' section")
    labels = sections["elements"]
    if not labels:
        raise ParseError("no elements declared")
    if len(set(labels)) != len(labels):
        raise DuplicateLabel("duplicate element labels")
    pos = {x: i for i, x in enumerate(labels)}
    edges = []
    for tok in sections.get("covers", []):
        parts = tok.split("<")
        if len(parts) != 2 or not all(parts):
            raise ParseError(f"bad cover token {tok!r}")
        a, b = parts
        if a not in pos or b not in pos:
            raise ParseError(f"cover {tok!r} names an undeclared element")
        if a == b:
            raise CycleError(f"self-cover {tok!r}")
        edges.append((pos[a], pos[b]))

    n = len(labels)
    indeg = [0] * n
    succ: list[list[int]] = [[] for _ in range(n)]
    for a, b in set(edges):
        succ[a].append(b)
        indeg[b] += 1
    heap = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != n:
        raise CycleError("covers contain a cycle")
    new = {old: i for i, old in enumerate(order)}
    return Poset.from_covers([labels[i] for i in order], [(new[a], new[b]) for a, b in edges])


def poset_from_shorthand(spec: str) -> Poset:
    """``chain:n``, ``star:n:m2,...,mr``, ``rhombus:n:m``, ``y:n:m:l``."""
    kind, *args = spec.strip().split(":")
    try:
        if kind == "chain" and len(args) == 1:
            return poset_chain(int(args[0]))
        if kind == "star" and len(args) in (1, 2):
            arms = [int(a) for a in args[1].split(",") if a] if len(args) == 2 else []
            return poset_star(int(args[0]), arms)
        if kind == "rhombus" and len(args) == 2:
            return poset_rhombus(int(args[0]), int(args[1]))
        if kind == "y" and len(args) == 3:
            return poset_y(*(int(a) for a in args))
    except ValueError as exc:
        if isinstance(exc, PosetError):
            raise
        raise ParseError(f"bad poset shorthand {spec!r}: {exc}") from None
    raise ParseError(f"bad poset shorthand {spec!r}")
