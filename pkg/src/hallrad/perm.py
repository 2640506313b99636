"""Permutations of {0, ..., n-1} stored as full image tuples.

Products act on the right: ``(a * b)[x] == b[a[x]]``, i.e. apply ``a`` first.
The helpers ``mul``/``inv``/``conj`` work on raw tuples and are what the
group engine uses internally.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence


def mul(a: tuple, b: tuple) -> tuple:
    return tuple(map(b.__getitem__, a))


def inv(a: tuple) -> tuple:
    r = [0] * len(a)
    for i, x in enumerate(a):
        r[x] = i
    return tuple(r)


def conj(x: tuple, g: tuple) -> tuple:
    """g^-1 x g."""
    r = [0] * len(x)
    for i, y in enumerate(x):
        r[g[i]] = g[y]
    return tuple(r)


def power(a: tuple, e: int) -> tuple:
    result = tuple(range(len(a)))
    if e < 0:
        a, e = inv(a), -e
    while e:
        if e & 1:
            result = mul(result, a)
        a = mul(a, a)
        e >>= 1
    return result


def cycles_of(a: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(a)
    out = []
    for i in range(len(a)):
        if seen[i] or a[i] == i:
            continue
        cyc = [i]
        seen[i] = True
        j = a[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = a[j]
        out.append(tuple(cyc))
    return out


def order_of(a: Sequence[int]) -> int:
    return math.lcm(1, *(len(c) for c in cycles_of(a)))


def format_cycles(a: Sequence[int]) -> str:
    cyc = cycles_of(a)
    if not cyc:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> tuple:
    """Parse ``(0 1 2)(3 4)`` into an image tuple of the given degree."""
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    if _CYCLE.sub("", text).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(degree))
    used: set[int] = set()
    for body in _CYCLE.findall(text):
        tokens = body.replace(",", " ").split()
        try:
            pts = [int(t) for t in tokens]
        except ValueError:
            raise ValueError(f"malformed cycle: ({body})") from None
        for x in pts:
            if x < 0 or x >= degree:
                raise ValueError(f"point out of range: {x} (degree {degree})")
            if x in used:
                raise ValueError(f"point {x} repeated in {text!r}")
            used.add(x)
        for i, x in enumerate(pts):
            images[x] = pts[(i + 1) % len(pts)]
    return tuple(images)


class Perm:
    """An immutable permutation of ``range(degree)``."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(images)
        if check:
            n = len(images)
            if n == 0:
                raise ValueError("degree must be positive")
            if sorted(images) != list(range(n)):
                raise ValueError("image array is not a bijection on 0..n-1")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Perm":
        images = list(range(degree))
        for c in cycles:
            for i, x in enumerate(c):
                if not 0 <= x < degree:
                    raise ValueError(f"point out of range: {x}")
                images[x] = c[(i + 1) % len(c)]
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int) -> "Perm":
        return cls(parse_cycles(text, degree), check=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, pt: int) -> int:
        return self.images[pt]

    def __mul__(self, other: "Perm") -> "Perm":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Perm(mul(self.images, other.images), check=False)

    def __invert__(self) -> "Perm":
        return Perm(inv(self.images), check=False)

    inverse = __invert__

    def __pow__(self, e: int) -> "Perm":
        return Perm(power(self.images, e), check=False)

    def conjugate(self, g: "Perm") -> "Perm":
        """g^-1 self g."""
        return Perm(conj(self.images, g.images), check=False)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def order(self) -> int:
        return order_of(self.images)

    def cycles(self) -> list[tuple[int, ...]]:
        return cycles_of(self.images)

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __str__(self) -> str:
        return format_cycles(self.images)

    def __repr__(self) -> str:
        return f"Perm({self.degree}, {format_cycles(self.images)})"
