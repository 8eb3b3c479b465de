"""Exact arithmetic in GF(p^e).

Elements are residue polynomials c_0 + c_1 x + ... + c_{e-1} x^{e-1} modulo a
fixed monic irreducible polynomial.  Each element has a canonical integer code
``sum(c_i * p**i)``, so 0 and 1 have codes 0 and 1 and the codes of GF(q) are
exactly ``range(q)``.  All arithmetic runs on codes; :class:`FieldElem` is a
thin operator-overloading wrapper for interactive use.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

DEFAULT_SIZE_CAP = 1 << 20


class FieldError(ValueError):
    pass


class NotPrime(FieldError):
    pass


class DegreeZero(FieldError):
    pass


class FieldTooLarge(FieldError):
    pass


class NoSuchRoot(FieldError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# -- polynomials over GF(p), coefficient lists low -> high ---------------------

def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m."""
    r = list(a)
    dm = len(m) - 1
    for i in range(len(r) - 1, dm - 1, -1):
        c = r[i] % p
        if c:
            for j in range(dm + 1):
                r[i - dm + j] = (r[i - dm + j] - c * m[j]) % p
    return _poly_trim([x % p for x in r[:dm]])


def _monic_polys(p: int, d: int) -> Iterator[list[int]]:
    """All monic polynomials of degree d, ordered by the code of their low coefficients."""
    for low in range(p ** d):
        c = []
        for _ in range(d):
            low, r = divmod(low, p)
            c.append(r)
        yield c + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    d = len(poly) - 1
    if d < 1:
        return False
    for fd in range(1, d // 2 + 1):
        for f in _monic_polys(p, fd):
            if not _poly_mod(poly, f, p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """The monic irreducible of degree e whose low-coefficient code is minimal."""
    for cand in _monic_polys(p, e):
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("an irreducible polynomial exists for every degree")


# -- field spec --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(p^e) together with its defining modulus.

    ``modulus`` holds the coefficients (low to high, monic) of the defining
    polynomial; it is empty for prime fields.  Instances are interned by
    :func:`field_new`, so identity comparison is safe.
    """

    p: int
    e: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.e

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.e == 1 else f"GF({self.p}^{self.e})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __reduce__(self):
        return (field_new, (self.p, self.e, None))

    # codes <-> coefficient vectors

    def coeffs(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.e:
            if self.e == 1:
                raise FieldError("prime field elements have a single coefficient")
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + c % self.p
        return code

    # arithmetic on codes

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        out, scale = 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        if self.p == 2:
            return a
        p = self.p
        out, scale = 0, 1
        while a:
            a, r = divmod(a, p)
            out += (-r % p) * scale
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        log, exp = self._log, self._exp
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.e == 1:
            return pow(a, -1, self.p)
        return self._exp[-self._log[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        if n == 0:
            return 1
        if a == 0:
            return 0
        if self.e == 1:
            return pow(a, n, self.p)
        return self._exp[self._log[a] * n % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> GF(q)."""
        return n % self.p

    def _poly_mul_code(self, a: int, b: int) -> int:
        prod = [0] * (2 * self.e - 1)
        ca, cb = self.coeffs(a), self.coeffs(b)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        return self.from_coeffs(_poly_mod(prod, self.modulus, self.p))

    @functools.cached_property
    def _tables(self) -> tuple[list[int], list[int]]:
        # exp/log tables over a primitive element; built on first use
        order = self.q - 1
        for g in range(2, self.q):
            exp = [1] * order
            x = 1
            ok = True
            for i in range(1, order):
                x = self._poly_mul_code(x, g)
                if x == 1:
                    ok = False
                    break
                exp[i] = x
            if ok:
                log = [0] * self.q
                for i, x in enumerate(exp):
                    log[x] = i
                return exp, log
        raise AssertionError("multiplicative group is cyclic")

    @property
    def _exp(self) -> list[int]:
        return self._tables[0]

    @property
    def _log(self) -> list[int]:
        return self._tables[1]

    # convenience

    def elem(self, code: int) -> FieldElem:
        if not 0 <= code < self.q:
            raise FieldError(f"code {code} out of range for {self!r}")
        return FieldElem(self, code)

    def elements(self) -> list[FieldElem]:
        return [FieldElem(self, c) for c in range(self.q)]

    @property
    def zero(self) -> FieldElem:
        return FieldElem(self, 0)

    @property
    def one(self) -> FieldElem:
        return FieldElem(self, 1)

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero code."""
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.q - 1
        d = n
        for f in _prime_factors(n):
            while d % f == 0 and self.pow(a, d // f) == 1:
                d //= f
        return d


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


@functools.lru_cache(maxsize=None)
def _field_new(p: int, e: int) -> FieldSpec:
    modulus = () if e == 1 else smallest_irreducible(p, e)
    return FieldSpec(p, e, modulus)


def field_new(p: int, e: int = 1, size_cap: int | None = DEFAULT_SIZE_CAP) -> FieldSpec:
    """Construct GF(p^e).

    Raises NotPrime, DegreeZero or FieldTooLarge.  Repeated calls return the
    same object.
    """
    if e < 1:
        raise DegreeZero(f"extension degree must be >= 1, got {e}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if size_cap is not None and p ** e > size_cap:
        raise FieldTooLarge(f"{p}^{e} exceeds the size cap {size_cap}")
    return _field_new(p, e)


def parse_field(text: str, size_cap: int | None = DEFAULT_SIZE_CAP) -> FieldSpec:
    """Parse ``"p^e"`` or a prime ``"q"``; a prime power like ``"9"`` is also accepted."""
    text = text.strip()
    if "^" in text:
        p, e = text.split("^", 1)
        return field_new(int(p), int(e), size_cap)
    q = int(text)
    if is_prime(q):
        return field_new(q, 1, size_cap)
    for p in _prime_factors(q)[:1]:
        e = round(math.log(q, p))
        if p ** e == q:
            return field_new(p, e, size_cap)
    raise NotPrime(f"{q} is not a prime power")


@dataclass(frozen=True)
class FieldElem:
    field: FieldSpec
    code: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.code)

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldError(f"mixed fields {self.field!r} and {other.field!r}")
            return other.code
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.sub(self.code, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.sub(b, self.code))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.div(self.code, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.div(b, self.code))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.code))

    def __pow__(self, n: int):
        return FieldElem(self.field, self.field.pow(self.code, n))

    def inverse(self) -> FieldElem:
        return FieldElem(self.field, self.field.inv(self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        return f"{self.field!r}({self.code})"


# -- potent scalars and roots of unity ------------------------------------------

def potent_scalars(f: FieldSpec, k: int) -> list[FieldElem]:
    """All x with x^(k+1) = x, ordered by code.  There are gcd(k, q-1) + 1 of them."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return [FieldElem(f, c) for c in potent_codes(f, k)]


def potent_codes(f: FieldSpec, k: int) -> list[int]:
    if f.q <= 4096:
        return [c for c in range(f.q) if f.pow(c, k + 1) == c]
    # the nonzero solutions are the d-th roots of unity, d = gcd(k, q-1)
    d = math.gcd(k, f.q - 1)
    g = f._exp[(f.q - 1) // d] if f.e > 1 else _prime_field_generator_power(f, d)
    roots = {1}
    x = 1
    for _ in range(d):
        x = f.mul(x, g)
        roots.add(x)
    return [0] + sorted(roots)


def _prime_field_generator_power(f: FieldSpec, d: int) -> int:
    for g in range(2, f.q):
        if f.order(g) == f.q - 1:
            return f.pow(g, (f.q - 1) // d)
    return 1


def primitive_kth_root(f: FieldSpec, k: int) -> FieldElem:
    """Smallest-code element of multiplicative order exactly k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if (f.q - 1) % k:
        raise NoSuchRoot(f"{k} does not divide {f.q - 1}; {f!r} has no primitive {k}-th root")
    for c in range(1, f.q):
        if f.pow(c, k) == 1 and f.order(c) == k:
            return FieldElem(f, c)
    raise AssertionError("cyclic group has elements of every order dividing q-1")


def diagonal_alphabet(f: FieldSpec, k: int) -> list[FieldElem]:
    """The set {0, 1, w, ..., w^(k-1)} for the canonical primitive k-th root w, in that order."""
    w = primitive_kth_root(f, k)
    return [f.zero] + [w ** j for j in range(k)]


@dataclass(frozen=True)
class GuardVerdict:
    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


def char_divisibility_guard(f: FieldSpec, k: int) -> GuardVerdict:
    """Pass iff the characteristic divides neither k nor k+1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k % f.p == 0:
        return GuardVerdict(False, f"characteristic {f.p} divides k={k}")
    if (k + 1) % f.p == 0:
        return GuardVerdict(False, f"characteristic {f.p} divides k+1={k + 1}")
    return GuardVerdict(True, f"characteristic {f.p} divides neither {k} nor {k + 1}")
