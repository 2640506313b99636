"""Stabilizer chains (base and strong generating set) by Schreier-Sims.

Construction runs a randomized phase to find a small strong generating set
quickly and then a deterministic pass that sifts every Schreier generator,
so a finished chain is always certified.  When the group order is known in
advance the randomized phase alone is certified as soon as the orbit
product reaches it.
"""

from __future__ import annotations

import random
from typing import Iterable, Optional, Sequence

from .perm import inv, mul


def first_moved(g: tuple) -> int:
    for i, x in enumerate(g):
        if i != x:
            return i
    return -1


class ProductReplacement:
    """Random group elements by the product replacement algorithm."""

    def __init__(self, gens: Sequence[tuple], degree: int, rng: random.Random):
        ident = tuple(range(degree))
        gens = list(gens) or [ident]
        state = list(gens)
        while len(state) < 10:
            state.extend(gens)
        self.state = state[: max(10, len(gens))]
        self.acc = ident
        self.rng = rng
        for _ in range(50):
            self.next()

    def next(self) -> tuple:
        s = self.state
        i, j = self.rng.sample(range(len(s)), 2)
        if self.rng.random() < 0.5:
            s[i] = mul(s[i], s[j])
        else:
            s[i] = mul(s[j], s[i])
        self.acc = mul(self.acc, s[i])
        return self.acc


class StabChain:
    """A stabilizer chain for the group generated by ``gens``.

    ``base[i]`` is the i-th base point, ``strong[i]`` generates the pointwise
    stabilizer of ``base[:i]``, and ``trans[i]`` maps every point of the
    fundamental orbit of ``base[i]`` to a coset representative.
    """

    def __init__(self, degree: int):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.base: list[int] = []
        self.strong: list[list[tuple]] = []
        self.trans: list[dict[int, tuple]] = []
        self._itrans: list[dict[int, tuple]] = []

    # construction ---------------------------------------------------------

    @classmethod
    def build(
        cls,
        degree: int,
        gens: Iterable[tuple],
        base: Sequence[int] = (),
        order: Optional[int] = None,
        rng: Optional[random.Random] = None,
    ) -> "StabChain":
        ch = cls(degree)
        for b in base:
            ch._new_level(b)
        gens = [g for g in dict.fromkeys(gens) if g != ch.identity]
        for g in gens:
            ch._absorb(g)
        ch.finish(gens, order, rng)
        return ch

    def finish(self, gens: Sequence[tuple], order: Optional[int] = None,
               rng: Optional[random.Random] = None, bound: Optional[int] = None) -> None:
        """Randomized phase over ``gens`` followed by the deterministic check.

        ``order`` is the known group order; ``bound`` is the order of a known
        overgroup, so reaching it also certifies the chain.
        """
        if not gens:
            return
        if order is None and bound is not None:
            order, strict = bound, False
        else:
            strict = True
        pr = ProductReplacement(gens, self.degree, rng or random.Random(0))
        streak = 0
        budget = 2000
        while streak < 12 and budget > 0:
            budget -= 1
            if order is not None and self.order() == order:
                return
            if self._absorb(pr.next()):
                streak = 0
            else:
                streak += 1
        if order is not None and self.order() == order:
            return
        self.complete()
        if strict and order is not None and self.order() != order:
            raise ValueError(f"group order {self.order()} does not match expected {order}")

    def _new_level(self, point: int) -> None:
        self.base.append(point)
        self.strong.append([])
        self.trans.append({point: self.identity})
        self._itrans.append({point: self.identity})

    def _add_strong(self, h: tuple, lo: int, hi: int) -> None:
        """Add h to levels lo..hi, creating a new base point when hi == len(base)."""
        if hi == len(self.base):
            self._new_level(first_moved(h))
        for level in range(lo, hi + 1):
            self.strong[level].append(h)
            self._grow_orbit(level, h)

    def _grow_orbit(self, i: int, h: tuple) -> None:
        # existing transversal entries stay valid; only new points are added
        tr = self.trans[i]
        queue = []
        for pt, u in list(tr.items()):
            img = h[pt]
            if img not in tr:
                tr[img] = mul(u, h)
                queue.append(img)
        gens = self.strong[i]
        for pt in queue:
            u = tr[pt]
            for s in gens:
                img = s[pt]
                if img not in tr:
                    tr[img] = mul(u, s)
                    queue.append(img)

    def _absorb(self, g: tuple) -> bool:
        res, level = self.strip(g)
        if level == len(self.base) and res == self.identity:
            return False
        self._add_strong(res, 0, level)
        return True

    def complete(self) -> None:
        """Deterministic Schreier-Sims pass: every Schreier generator sifts."""
        i = len(self.base) - 1
        while i >= 0:
            i = self._check_level(i)

    def _check_level(self, i: int) -> int:
        tr = self.trans[i]
        for pt, u in list(tr.items()):
            for s in list(self.strong[i]):
                h = mul(mul(u, s), self._inverse(i, s[pt]))
                if h == self.identity:
                    continue
                res, j = self.strip(h, i + 1)
                if j < len(self.base) or res != self.identity:
                    self._add_strong(res, i + 1, j)
                    return j
        return i - 1

    # queries --------------------------------------------------------------

    def _inverse(self, level: int, pt: int) -> tuple:
        cache = self._itrans[level]
        u = cache.get(pt)
        if u is None:
            u = cache[pt] = inv(self.trans[level][pt])
        return u

    def strip(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        """Sift g from level ``start``; return the residue and the level reached."""
        for level in range(start, len(self.base)):
            pt = g[self.base[level]]
            if pt not in self.trans[level]:
                return g, level
            if pt != self.base[level]:
                g = mul(g, self._inverse(level, pt))
        return g, len(self.base)

    def contains(self, g: tuple) -> bool:
        res, level = self.strip(g)
        return level == len(self.base) and res == self.identity

    def order(self) -> int:
        n = 1
        for tr in self.trans:
            n *= len(tr)
        return n

    def strong_generators(self) -> list[tuple]:
        seen: dict[tuple, None] = {}
        for gens in self.strong:
            for g in gens:
                seen.setdefault(g, None)
        return list(seen)

    def tail(self, start: int) -> "StabChain":
        """Chain for the pointwise stabilizer of ``base[:start]``."""
        ch = StabChain(self.degree)
        ch.base = self.base[start:]
        ch.strong = self.strong[start:]
        ch.trans = self.trans[start:]
        ch._itrans = self._itrans[start:]
        return ch

    def decompose(self, g: tuple) -> Optional[list[tuple[int, int]]]:
        """Return [(level, point), ...] with g = u_k ... u_1, or None if g is not in the group."""
        word = []
        for level in range(len(self.base)):
            pt = g[self.base[level]]
            if pt not in self.trans[level]:
                return None
            word.append((level, pt))
            if pt != self.base[level]:
                g = mul(g, self._inverse(level, pt))
        return word if g == self.identity else None

    def elements(self):
        """Iterate over all group elements."""
        levels = [list(tr.values()) for tr in self.trans]

        def rec(i: int, acc: tuple):
            if i < 0:
                yield acc
                return
            for u in levels[i]:
                yield from rec(i - 1, mul(acc, u))

        yield from rec(len(levels) - 1, self.identity)
