"""Finite fields GF(p^k), k <= 8, with fixed defining polynomials.

Elements are encoded as integers ``sum(c_i * p**i)`` where ``c_i`` are the
coefficients of the residue polynomial, so group generators built over a
field are reproducible bit for bit.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .numtheory import factorize, prime_power_decompose

# Conway polynomials, coefficients from x^0 up to the leading 1.
CONWAY = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
}

MAX_EXTENSION = 8


def _polymulmod(a: list[int], b: list[int], mod: tuple, p: int) -> list[int]:
    k = len(mod) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for i in range(k + 1):
                prod[d - k + i] = (prod[d - k + i] - c * mod[i]) % p
    return prod[:k]


def _encode(coeffs, p: int) -> int:
    v = 0
    for c in reversed(coeffs):
        v = v * p + c
    return v


def _decode(v: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(v % p)
        v //= p
    return out


def _is_primitive_poly(mod: tuple, p: int) -> bool:
    """x generates the multiplicative group of GF(p)[x]/(mod)."""
    k = len(mod) - 1
    order = p**k - 1
    x = [0, 1] + [0] * (k - 2) if k > 1 else [0]
    one = [1] + [0] * (k - 1)

    def xpow(e):
        result, base = list(one), list(x)
        while e:
            if e & 1:
                result = _polymulmod(result, base, mod, p)
            base = _polymulmod(base, base, mod, p)
            e >>= 1
        return result

    if xpow(order) != one:
        return False
    return all(xpow(order // r) != one for r in factorize(order))


def defining_polynomial(p: int, k: int) -> tuple:
    if (p, k) in CONWAY:
        return CONWAY[(p, k)]
    for tail in product(range(p), repeat=k):
        mod = tuple(tail) + (1,)
        if mod[0] and _is_primitive_poly(mod, p):
            return mod
    raise ValueError(f"no primitive polynomial of degree {k} over GF({p})")


class GF:
    """GF(q) with log/antilog tables over a primitive element."""

    def __init__(self, q: int):
        pk = prime_power_decompose(q) if q >= 2 else None
        if pk is None:
            raise ValueError(f"{q} is not a prime power")
        p, k = pk
        if k > MAX_EXTENSION:
            raise ValueError(f"extension degree {k} exceeds {MAX_EXTENSION}")
        self.q, self.p, self.k = q, p, k
        if k == 1:
            self.modulus = None
            gen = next(g for g in range(1, p) if _prime_field_primitive(g, p))
            exp = [1]
            for _ in range(q - 2):
                exp.append(exp[-1] * gen % p)
        else:
            self.modulus = defining_polynomial(p, k)
            x = [0, 1] + [0] * (k - 2)
            cur = [1] + [0] * (k - 1)
            exp = []
            for _ in range(q - 1):
                exp.append(_encode(cur, p))
                cur = _polymulmod(cur, x, self.modulus, p)
        if len(set(exp)) != q - 1:
            raise ValueError(f"defining polynomial for GF({q}) is not primitive")
        self.exp = exp
        self.log = {v: i for i, v in enumerate(exp)}
        self.primitive = exp[1] if q > 2 else 1

    def __repr__(self):
        return f"GF({self.q})"

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        return _encode([(x + y) % p for x, y in zip(_decode(a, p, self.k), _decode(b, p, self.k))], p)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        if self.p == 2:
            return a
        p = self.p
        return _encode([-x % p for x in _decode(a, p, self.k)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self.exp[-self.log[a] % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0 if e else 1
        return self.exp[self.log[a] * e % (self.q - 1)]

    def __call__(self, value: int) -> "FieldElem":
        return FieldElem(self, value)


def _prime_field_primitive(g: int, p: int) -> bool:
    if p == 2:
        return g == 1
    return all(pow(g, (p - 1) // r, p) != 1 for r in factorize(p - 1))


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


class FieldElem:
    __slots__ = ("field", "value")

    def __init__(self, F: GF, value: int):
        if not 0 <= value < F.q:
            raise ValueError(f"{value} does not encode an element of {F!r}")
        self.field = F
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other.value
        return other % self.field.p if self.field.k == 1 else other

    def __add__(self, other):
        return FieldElem(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other):
        return FieldElem(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return FieldElem(self.field, self.field.mul(self.value, self.field.inv(self._other(other))))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElem(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        return isinstance(other, FieldElem) and other.field is self.field and other.value == self.value

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __repr__(self):
        return f"{self.field!r}({self.value})"
