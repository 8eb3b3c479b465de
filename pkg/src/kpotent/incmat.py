"""Incidence-algebra elements as sparse upper triangular matrices.

An :class:`UpperMatrix` stores the nonzero entries of a function on the
relation pairs of a poset, as canonical field codes keyed by 0-based positions
in the poset's linear extension.  For a chain this is exactly T_n(K).

The text format (used by the CLI) numbers positions from 1::

    field: 5
    elements: x1 x2 x3
    covers: x1<x2 x2<x3
    entries:
    1 1 4
    1 2 3
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .field import FieldElem, FieldSpec, parse_field
from .poset import Poset, parse_poset


class MatrixError(ValueError):
    pass


class MixedPoset(MatrixError):
    pass


class MixedField(MatrixError):
    pass


class SupportError(MatrixError):
    pass


class TooSmall(MatrixError):
    pass


@dataclass(frozen=True, eq=False)
class UpperMatrix:
    poset: Poset
    field: FieldSpec
    entries: Mapping[tuple[int, int], int]

    def __post_init__(self):
        clean = {}
        for (i, j), c in self.entries.items():
            if isinstance(c, FieldElem):
                c = c.code
            if not 0 <= c < self.field.q:
                raise MatrixError(f"code {c} out of range for {self.field!r}")
            if c == 0:
                continue
            if (i, j) not in self.poset.leq:
                raise SupportError(f"entry {(i, j)} lies outside the poset's relation pairs")
            clean[(i, j)] = c
        object.__setattr__(self, "entries", MappingProxyType(clean))

    # construction

    @classmethod
    def zero(cls, poset: Poset, field: FieldSpec) -> UpperMatrix:
        return cls(poset, field, {})

    @classmethod
    def identity(cls, poset: Poset, field: FieldSpec) -> UpperMatrix:
        return cls(poset, field, {(i, i): 1 for i in range(poset.n)})

    @classmethod
    def basis(cls, poset: Poset, field: FieldSpec, i: int, j: int, c: int = 1) -> UpperMatrix:
        """c * E_ij (0-based positions)."""
        if (i, j) not in poset.leq:
            raise SupportError(f"{(i, j)} is not a relation pair")
        return cls(poset, field, {(i, j): c})

    @classmethod
    def from_dense(cls, poset: Poset, field: FieldSpec, rows: Sequence[Sequence[int]]) -> UpperMatrix:
        n = poset.n
        if len(rows) != n or any(len(r) != n for r in rows):
            raise MatrixError(f"expected a {n}x{n} array")
        ent = {}
        for i in range(n):
            for j in range(n):
                c = int(rows[i][j])
                if c:
                    ent[(i, j)] = c
        return cls(poset, field, ent)

    # access

    def code(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def __getitem__(self, ij: tuple[int, int]) -> FieldElem:
        return FieldElem(self.field, self.entries.get(ij, 0))

    @property
    def n(self) -> int:
        return self.poset.n

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.code(i, i) for i in range(self.n))

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.n for _ in range(self.n)]
        for (i, j), c in self.entries.items():
            out[i][j] = c
        return out

    def key(self) -> tuple[int, ...]:
        """Codes over all relation pairs in ``poset.pairs`` order; a hashable fingerprint."""
        return tuple(self.code(i, j) for i, j in self.poset.pairs)

    def support(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UpperMatrix):
            return NotImplemented
        return (self.poset == other.poset and self.field == other.field
                and dict(self.entries) == dict(other.entries))

    def __hash__(self) -> int:
        return hash((self.poset, self.field, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        return f"UpperMatrix({self.field!r}, {self.to_dense()})"

    # algebra

    def _same(self, other: UpperMatrix) -> None:
        if other.poset != self.poset:
            raise MixedPoset("matrices live on different posets")
        if other.field != self.field:
            raise MixedField("matrices live over different fields")

    def __add__(self, other: UpperMatrix) -> UpperMatrix:
        self._same(other)
        f = self.field
        ent = dict(self.entries)
        for ij, c in other.entries.items():
            ent[ij] = f.add(ent.get(ij, 0), c)
        return UpperMatrix(self.poset, f, ent)

    def scale(self, c: int | FieldElem) -> UpperMatrix:
        c = c.code if isinstance(c, FieldElem) else c
        f = self.field
        return UpperMatrix(self.poset, f, {ij: f.mul(v, c) for ij, v in self.entries.items()})

    def __mul__(self, other: UpperMatrix) -> UpperMatrix:
        return mat_mul(self, other)

    def __pow__(self, t: int) -> UpperMatrix:
        return mat_pow(self, t)

    def with_entries(self, updates: Mapping[tuple[int, int], int]) -> UpperMatrix:
        ent = dict(self.entries)
        ent.update(updates)
        return UpperMatrix(self.poset, self.field, ent)

    # text format

    def render(self) -> str:
        f = self.field
        head = f"field: {f.q if f.e == 1 else f'{f.p}^{f.e}'}\n" + self.poset.render() + "entries:\n"
        body = "".join(f"{i + 1} {j + 1} {c}\n" for (i, j), c in sorted(self.entries.items()))
        return head + body


def mat_mul(a: UpperMatrix, b: UpperMatrix) -> UpperMatrix:
    """Convolution product (fg)(x, y) = sum over x <= t <= y of f(x, t) g(t, y)."""
    a._same(b)
    f, P = a.field, a.poset
    ea, eb = a.entries, b.entries
    out = {}
    for x, y in P.leq:
        acc = 0
        for t in P.interval(x, y):
            u = ea.get((x, t))
            if u:
                v = eb.get((t, y))
                if v:
                    acc = f.add(acc, f.mul(u, v))
        if acc:
            out[(x, y)] = acc
    return UpperMatrix(P, f, out)


def mat_pow(a: UpperMatrix, t: int) -> UpperMatrix:
    if t < 0:
        raise ValueError("negative power")
    result = UpperMatrix.identity(a.poset, a.field)
    base = a
    while t:
        if t & 1:
            result = mat_mul(result, base)
        t >>= 1
        if t:
            base = mat_mul(base, base)
    return result


def is_potent(a: UpperMatrix, k: int) -> bool:
    """A^(k+1) == A."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return mat_pow(a, k + 1) == a


def restrict(a: UpperMatrix, positions: Sequence[int]) -> UpperMatrix:
    """The element on the induced subposet at the given (increasing) positions."""
    positions = sorted(positions)
    idx = {p: i for i, p in enumerate(positions)}
    sub = Poset(tuple(a.poset.elements[p] for p in positions),
                frozenset((idx[i], idx[j]) for i, j in a.poset.leq if i in idx and j in idx))
    ent = {(idx[i], idx[j]): c for (i, j), c in a.entries.items() if i in idx and j in idx}
    return UpperMatrix(sub, a.field, ent)


def parse_matrix(text: str) -> UpperMatrix:
    """Read the format produced by :meth:`UpperMatrix.render`."""
    field_line = None
    poset_lines: list[str] = []
    entry_lines: list[str] = []
    section = "head"
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if section == "entries":
            entry_lines.append(line)
        elif line.startswith("field:"):
            field_line = line[len("field:"):].strip()
        elif line.startswith("entries:"):
            section = "entries"
        else:
            poset_lines.append(line)
    if field_line is None:
        raise MatrixError("missing 'field:' header")
    f = parse_field(field_line)
    P = parse_poset("\n".join(poset_lines))
    ent = {}
    for line in entry_lines:
        parts = line.split()
        if len(parts) != 3:
            raise MatrixError(f"bad entry line {line!r}")
        i, j, c = (int(x) for x in parts)
        ent[(i - 1, j - 1)] = c
    return UpperMatrix(P, f, ent)


# -- dense helpers over codes ------------------------------------------------

def dense_mul(f: FieldSpec, x: Sequence[Sequence[int]], y: Sequence[Sequence[int]]) -> list[list[int]]:
    rows, inner, cols = len(x), len(y), len(y[0]) if y else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        xi = x[i]
        for t in range(inner):
            u = xi[t]
            if u:
                yt = y[t]
                oi = out[i]
                for j in range(cols):
                    v = yt[j]
                    if v:
                        oi[j] = f.add(oi[j], f.mul(u, v))
    return out


def dense_add(f: FieldSpec, x, y):
    return [[f.add(a, b) for a, b in zip(rx, ry)] for rx, ry in zip(x, y)]


def dense_scale(f: FieldSpec, x, c: int):
    return [[f.mul(a, c) for a in row] for row in x]


def dense_identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _geometric(f: FieldSpec, r: int, t: int, d: int) -> int:
    """sum_{p=0}^{d} r^p t^(d-p); zero for d < 0."""
    acc = 0
    for p in range(d + 1):
        acc = f.add(acc, f.mul(f.pow(r, p), f.pow(t, d - p)))
    return acc


def lemma21_power_blocks(a: UpperMatrix, k: int):
    """Corner blocks of A^(k+1) for A = [[r, a, x], [0, u, b], [0, 0, t]] on a chain.

    Returns ``(a', b', x')`` as tuples of field elements (row, column, scalar)
    computed from the closed forms

        a' = a (r^k e + r^(k-1) u + ... + u^k)
        b' = (u^k + u^(k-1) t + ... + e t^k) b
        x' = x h_k(r, t) + a [sum_{j=0}^{k-1} h_(k-1-j)(r, t) u^j] b

    with h_d(r, t) = r^d + r^(d-1) t + ... + t^d.  Never forms A^(k+1).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = a.n
    if n < 3:
        raise TooSmall(f"need n >= 3, got {n}")
    f = a.field
    A = a.to_dense()
    r, t, x = A[0][0], A[n - 1][n - 1], A[0][n - 1]
    row = [A[0][1:n - 1]]
    col = [[A[i][n - 1]] for i in range(1, n - 1)]
    u = [A[i][1:n - 1] for i in range(1, n - 1)]
    m = n - 2

    upow = [dense_identity(m)]
    for _ in range(k):
        upow.append(dense_mul(f, upow[-1], u))

    left = [[0] * m for _ in range(m)]
    right = [[0] * m for _ in range(m)]
    middle = [[0] * m for _ in range(m)]
    for p in range(k + 1):
        left = dense_add(f, left, dense_scale(f, upow[p], f.pow(r, k - p)))
        right = dense_add(f, right, dense_scale(f, upow[p], f.pow(t, k - p)))
    for j in range(k):
        middle = dense_add(f, middle, dense_scale(f, upow[j], _geometric(f, r, t, k - 1 - j)))

    a_new = dense_mul(f, row, left)[0]
    b_new = [c[0] for c in dense_mul(f, right, col)]
    mid = dense_mul(f, dense_mul(f, row, middle), col)[0][0]
    x_new = f.add(f.mul(x, _geometric(f, r, t, k)), mid)
    return (tuple(FieldElem(f, c) for c in a_new),
            tuple(FieldElem(f, c) for c in b_new),
            FieldElem(f, x_new))


def power_blocks(a: UpperMatrix, k: int):
    """The same three blocks read off mat_pow(A, k+1) directly."""
    n = a.n
    P = mat_pow(a, k + 1).to_dense()
    f = a.field
    return (tuple(FieldElem(f, c) for c in P[0][1:n - 1]),
            tuple(FieldElem(f, P[i][n - 1]) for i in range(1, n - 1)),
            FieldElem(f, P[0][n - 1]))


def random_matrix(poset: Poset, field: FieldSpec, rng, diagonal: Iterable[int] | None = None) -> UpperMatrix:
    """Uniform random element; ``diagonal`` optionally pins the diagonal codes."""
    ent = {(i, j): rng.randrange(field.q) for i, j in poset.leq}
    if diagonal is not None:
        for i, c in enumerate(diagonal):
            ent[(i, i)] = c
    return UpperMatrix(poset, field, ent)
