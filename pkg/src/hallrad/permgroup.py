"""Permutation groups backed by a lazily built stabilizer chain."""

from __future__ import annotations

import hashlib
import random
from typing import Iterable, Optional, Sequence, Union

from . import numtheory
from .config import DEFAULT_INDEX_CAP, CapExceeded, element_cap
from .perm import Perm, conj, format_cycles, inv, mul, order_of, power
from .schreier import ProductReplacement, StabChain

PermLike = Union[Perm, Sequence[int]]


def _images(x: PermLike) -> tuple:
    return x.images if isinstance(x, Perm) else tuple(x)


def commutator(a: tuple, b: tuple) -> tuple:
    """a^-1 b^-1 a b."""
    return mul(mul(inv(a), inv(b)), mul(a, b))


class PermGroup:
    """The subgroup of Sym(degree) generated by ``generators``.

    The stabilizer chain is built on first use and never changes afterwards,
    so a group can be shared freely once ``chain`` has been touched.
    """

    def __init__(
        self,
        degree: int,
        generators: Iterable[PermLike] = (),
        *,
        order: Optional[int] = None,
        seed: Optional[int] = None,
        chain: Optional[StabChain] = None,
        check: bool = True,
    ):
        if degree < 1:
            raise ValueError("degree must be positive")
        gens = []
        for g in generators:
            t = _images(g)
            if check:
                if len(t) != degree:
                    raise ValueError(f"generator of degree {len(t)} in a group of degree {degree}")
                if sorted(t) != list(range(degree)):
                    raise ValueError("generator is not a bijection")
            gens.append(t)
        self.degree = degree
        self._gens = gens
        self._order_hint = order
        self._seed = seed
        self._chain = chain
        self._derived: Optional[list[PermGroup]] = None

    # basic data -----------------------------------------------------------

    @property
    def generators(self) -> list[Perm]:
        return [Perm(g, check=False) for g in self._gens]

    @property
    def gens(self) -> list[tuple]:
        return list(self._gens)

    @property
    def identity(self) -> tuple:
        return tuple(range(self.degree))

    @property
    def seed(self) -> int:
        if self._seed is None:
            h = hashlib.sha256(repr((self.degree, self._gens)).encode())
            self._seed = int.from_bytes(h.digest()[:8], "big")
        return self._seed

    def rng(self, salt: str = "") -> random.Random:
        return random.Random(f"{self.seed}:{salt}")

    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            self._chain = StabChain.build(
                self.degree, self._gens, order=self._order_hint, rng=self.rng("chain"))
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    @property
    def base(self) -> list[int]:
        return list(self.chain.base)

    def is_trivial(self) -> bool:
        return all(g == self.identity for g in self._gens)

    def __repr__(self) -> str:
        gens = ", ".join(format_cycles(g) for g in self._gens[:4])
        more = ", ..." if len(self._gens) > 4 else ""
        return f"PermGroup(degree={self.degree}, gens=[{gens}{more}])"

    # membership -----------------------------------------------------------

    def contains(self, x: PermLike) -> bool:
        t = _images(x)
        if len(t) != self.degree:
            raise ValueError("degree mismatch")
        return self.chain.contains(t)

    __contains__ = contains

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        if other.degree != self.degree:
            return False
        return all(other.chain.contains(g) for g in self._gens)

    def equals(self, other: "PermGroup") -> bool:
        return (other.degree == self.degree and self.order() == other.order()
                and self.is_subgroup_of(other))

    def is_normal_in(self, G: "PermGroup") -> bool:
        return all(self.chain.contains(conj(n, g)) for n in self._gens for g in G._gens)

    def is_abelian(self) -> bool:
        gs = self._gens
        return all(mul(a, b) == mul(b, a) for i, a in enumerate(gs) for b in gs[i + 1:])

    # random elements and enumeration --------------------------------------

    def random_elements(self, count: int, salt: str = "random") -> list[tuple]:
        if not self._gens:
            return [self.identity] * count
        pr = ProductReplacement(self._gens, self.degree, self.rng(salt))
        return [pr.next() for _ in range(count)]

    def elements(self, cap: Optional[int] = None) -> list[tuple]:
        cap = element_cap() if cap is None else cap
        if self.order() > cap:
            raise CapExceeded(f"order {self.order()} exceeds element cap {cap}")
        return list(self.chain.elements())

    def conjugacy_class_reps(self, cap: Optional[int] = None) -> list[tuple[tuple, int]]:
        """Exhaustive (representative, class size) pairs, representatives first-found."""
        elems = self.elements(cap)
        seen: set[tuple] = set()
        out = []
        gens = self._gens
        for x in elems:
            if x in seen:
                continue
            cls = {x}
            stack = [x]
            while stack:
                y = stack.pop()
                for g in gens:
                    z = conj(y, g)
                    if z not in cls:
                        cls.add(z)
                        stack.append(z)
            seen |= cls
            out.append((x, len(cls)))
        return out

    # orbits and stabilizers -----------------------------------------------

    def orbit(self, pt: int) -> list[int]:
        if not 0 <= pt < self.degree:
            raise ValueError(f"point {pt} out of range")
        orb = [pt]
        seen = {pt}
        for x in orb:
            for g in self._gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    orb.append(y)
        return orb

    def orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for pt in range(self.degree):
            if pt not in seen:
                orb = self.orbit(pt)
                seen.update(orb)
                out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def chain_with_base(self, prefix: Sequence[int]) -> StabChain:
        return StabChain.build(self.degree, self.chain.strong_generators() or self._gens,
                               base=prefix, order=self.order(), rng=self.rng(f"base{list(prefix)[:4]}"))

    def pointwise_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        for pt in points:
            if not 0 <= pt < self.degree:
                raise ValueError(f"point {pt} out of range")
        ch = self.chain_with_base(points).tail(len(points))
        return PermGroup(self.degree, ch.strong_generators(), chain=ch, check=False)

    def point_stabilizer(self, pt: int) -> "PermGroup":
        return self.pointwise_stabilizer([pt])

    # subgroup constructions -----------------------------------------------

    def subgroup(self, gens: Iterable[PermLike]) -> "PermGroup":
        return PermGroup(self.degree, gens)

    def conjugate(self, g: PermLike) -> "PermGroup":
        """H^g = g^-1 H g."""
        t = _images(g)
        return PermGroup(self.degree, [conj(x, t) for x in self._gens],
                         order=self.order(), check=False)

    def join(self, other: "PermGroup") -> "PermGroup":
        return PermGroup(self.degree, self._gens + other._gens, check=False)

    def normal_closure(self, elems: Iterable[PermLike]) -> "PermGroup":
        """Smallest normal subgroup of self containing ``elems``.

        Conjugates are sifted through a chain that is not yet complete; a
        successful sift still proves membership, so once every conjugate of
        every generator sifts the generated group is normal.  The chain is
        certified once at the end.
        """
        ch = StabChain(self.degree)
        gens: list[tuple] = []
        for x in elems:
            t = _images(x)
            if not self.contains(t):
                raise ValueError("element not in group")
            if ch._absorb(t):
                gens.append(t)
        i = 0
        while i < len(gens):
            x = gens[i]
            i += 1
            for g in self._gens:
                c = conj(x, g)
                if ch._absorb(c):
                    gens.append(c)
        ch.finish(gens, rng=self.rng("closure"), bound=self.order())
        return PermGroup(self.degree, gens, chain=ch, check=False)

    def derived_subgroup(self) -> "PermGroup":
        gs = self._gens
        comms = [commutator(a, b) for i, a in enumerate(gs) for b in gs[i + 1:]]
        return self.normal_closure([c for c in comms if c != self.identity])

    def derived_series(self) -> list["PermGroup"]:
        """G = D0 > D1 > ... until the series stabilises at the perfect residual."""
        if self._derived is None:
            series = [self]
            while series[-1].order() > 1:
                d = series[-1].derived_subgroup()
                if d.order() == series[-1].order():
                    break
                series.append(d)
            self._derived = series
        return list(self._derived)

    def perfect_residual(self) -> "PermGroup":
        return self.derived_series()[-1]

    def is_solvable(self) -> bool:
        return self.perfect_residual().order() == 1

    def is_perfect(self) -> bool:
        return len(self.derived_series()) == 1

    # normal structure -----------------------------------------------------

    def minimal_normal_subgroups(self, method: str = "exhaustive") -> list["PermGroup"]:
        """All minimal normal subgroups.

        ``method="exhaustive"`` sweeps conjugacy classes and raises
        :class:`CapExceeded` above the element cap; ``"random"`` samples
        elements and is only probabilistically complete.
        """
        if self.order() == 1:
            return []
        if method == "exhaustive":
            cands = self._prime_order_closures_exhaustive()
        elif method == "random":
            cands = self._closures_random()
        else:
            raise ValueError(f"unknown method {method!r}")
        return _inclusion_minimal(cands)

    def _prime_order_closures_exhaustive(self) -> list["PermGroup"]:
        cands: list[PermGroup] = []
        for x, _ in self.conjugacy_class_reps():
            o = order_of(x)
            if o > 1 and numtheory.is_prime(o):
                n = self.normal_closure([x])
                if not any(n.equals(c) for c in cands):
                    cands.append(n)
        return cands

    def _closures_random(self, samples: int = 24, shrink: int = 8) -> list["PermGroup"]:
        rng = self.rng("minimal-normal")
        pool = self.random_elements(samples + shrink * samples, "minimal-normal")
        extra = iter(pool[samples:])
        cands: list[PermGroup] = []
        for x in pool[:samples]:
            o = order_of(x)
            if o == 1:
                continue
            for r in numtheory.factorize(o):
                y = power(x, o // r)
                n = self.normal_closure([y])
                if any(n.equals(c) for c in cands):
                    continue
                for _ in range(shrink):
                    g = next(extra, None) or self.random_elements(1, f"s{rng.random()}")[0]
                    c = commutator(y, conj(y, g))
                    if c == self.identity:
                        continue
                    m = self.normal_closure([c])
                    if m.order() < n.order():
                        y, n = c, m
                if not any(n.equals(c) for c in cands):
                    cands.append(n)
        return cands

    def socle(self, method: str = "exhaustive") -> "PermGroup":
        gens: list[tuple] = []
        for n in self.minimal_normal_subgroups(method):
            gens.extend(n._gens)
        return PermGroup(self.degree, gens, check=False)

    def is_primitive(self) -> bool:
        """No nontrivial block system (Atkinson's minimal-block algorithm)."""
        n = self.degree
        if not self.is_transitive():
            raise ValueError("is_primitive needs a transitive group")
        if n <= 2:
            return True
        stab = self.point_stabilizer(0)
        for orb in stab.orbits():
            b = orb[0]
            if b == 0:
                continue
            if len(_minimal_block(self._gens, n, b)) < n:
                return False
        return True

    def is_simple(self, method: str = "exhaustive") -> bool:
        if self.order() == 1:
            return False
        if self.is_abelian():
            return numtheory.is_prime(self.order())
        if method == "exhaustive":
            reps = [x for x, _ in self.conjugacy_class_reps() if x != self.identity]
        else:
            reps = [x for x in self.random_elements(20, "simple") if x != self.identity]
        return all(self.normal_closure([x]).order() == self.order() for x in reps)


def _inclusion_minimal(groups: list[PermGroup]) -> list[PermGroup]:
    out = []
    for n in groups:
        if any(m.order() < n.order() and m.is_subgroup_of(n) for m in groups):
            continue
        if not any(n.equals(k) for k in out):
            out.append(n)
    return out


def _minimal_block(gens: list[tuple], n: int, b: int) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    parent[b] = 0
    queue = [(0, b)]
    while queue:
        x, y = queue.pop()
        for g in gens:
            a, c = find(g[x]), find(g[y])
            if a != c:
                if a < c:
                    a, c = c, a
                parent[a] = c
                queue.append((a, c))
    root = find(0)
    return [x for x in range(n) if find(x) == root]


# ---------------------------------------------------------------------------
# module-level operations


def from_generators(degree: int, gens: Iterable[PermLike]) -> PermGroup:
    return PermGroup(degree, gens)


def trivial_group(degree: int) -> PermGroup:
    return PermGroup(degree)


class Homomorphism:
    """A homomorphism given by generator images.

    Kernel and element images use the group generated by the pairs
    (g, image of g) on the disjoint union of both point sets.
    """

    def __init__(self, source: PermGroup, generator_images: Sequence[PermLike],
                 image_degree: int, trusted: bool = False):
        imgs = [_images(x) for x in generator_images]
        if len(imgs) != len(source._gens):
            raise ValueError("one image per source generator is required")
        self.source = source
        self._imgs = imgs
        self.image = PermGroup(image_degree, imgs)
        self.trusted = trusted
        self._chains: dict[tuple, StabChain] = {}
        if not trusted:
            if self._combined(()).order() != source.order():
                raise ValueError("generator images do not define a homomorphism")

    @property
    def generator_images(self) -> list[Perm]:
        return [Perm(x, check=False) for x in self._imgs]

    def _combined(self, prefix: tuple) -> StabChain:
        ch = self._chains.get(prefix)
        if ch is None:
            n = self.source.degree
            gens = [g + tuple(n + x for x in h) for g, h in zip(self.source._gens, self._imgs)]
            order = self.source.order() if self.trusted else None
            ch = StabChain.build(n + self.image.degree, gens, base=prefix, order=order,
                                 rng=self.source.rng("hom"))
            self._chains[prefix] = ch
        return ch

    def __call__(self, x: PermLike) -> Perm:
        return Perm(self.map_tuple(_images(x)), check=False)

    def map_tuple(self, x: tuple) -> tuple:
        n = self.source.degree
        ch = self._combined(tuple(self.source.chain.base))
        word = []
        for level, b in enumerate(ch.base):
            if b >= n:
                break
            pt = x[b]
            u = ch.trans[level].get(pt)
            if u is None:
                raise ValueError("element not in the source group")
            word.append(u)
            x = mul(x, inv(u[:n]))
        if x != self.source.identity:
            raise ValueError("element not in the source group")
        result = self.image.identity
        for u in reversed(word):
            result = mul(result, tuple(y - n for y in u[n:]))
        return result

    def preimage(self, y: PermLike) -> tuple:
        """Some source element mapping to y."""
        n = self.source.degree
        prefix = tuple(n + b for b in self.image.chain.base)
        ch = self._combined(prefix)
        y = _images(y)
        word = []
        for level in range(len(prefix)):
            u = ch.trans[level].get(n + y[ch.base[level] - n])
            if u is None:
                raise ValueError("element not in the image")
            word.append(u)
            y = mul(y, inv(tuple(z - n for z in u[n:])))
        if y != self.image.identity:
            raise ValueError("element not in the image")
        x = self.source.identity
        for u in reversed(word):
            x = mul(x, u[:n])
        return x

    def image_of(self, H: PermGroup) -> PermGroup:
        return PermGroup(self.image.degree, [self.map_tuple(g) for g in H._gens], check=False)

    def kernel(self) -> PermGroup:
        n = self.source.degree
        prefix = tuple(n + b for b in self.image.chain.base)
        tail = self._combined(prefix).tail(len(prefix))
        gens = [g[:n] for g in tail.strong_generators()]
        return PermGroup(n, gens, order=tail.order(), check=False)


class CosetAction(Homomorphism):
    """Action of G on the right cosets of H; ``reps[i]`` represents coset i, coset 0 is H."""

    def __init__(self, G: PermGroup, H: PermGroup, reps: list[tuple], imgs: list[tuple]):
        super().__init__(G, imgs, len(reps), trusted=True)
        self.subgroup = H
        self.reps = reps


def right_cosets(G: PermGroup, H: PermGroup, cap: int = DEFAULT_INDEX_CAP) -> tuple[list[tuple], list[tuple]]:
    """Enumerate the right cosets Hg by orbit expansion on canonical representatives.

    Returns the representatives and, for each generator of G, its action on
    coset indices.
    """
    if H.degree != G.degree or not H.is_subgroup_of(G):
        raise ValueError("H is not a subgroup of G")
    index = G.order() // H.order()
    if index > cap:
        raise CapExceeded(f"index {index} exceeds coset cap {cap}")
    hch = H.chain
    levels = [(b, hch.trans[i]) for i, b in enumerate(hch.base)]
    gbase = G.chain.base

    def canonical(g: tuple) -> tuple:
        for b, tr in levels:
            best = min(tr, key=g.__getitem__)
            if best != b:
                g = mul(tr[best], g)
        return g

    first = canonical(G.identity)
    reps = [first]
    index_of = {tuple(first[b] for b in gbase): 0}
    images: list[list[int]] = [[] for _ in G._gens]
    i = 0
    while i < len(reps):
        r = reps[i]
        for k, s in enumerate(G._gens):
            c = canonical(mul(r, s))
            key = tuple(c[b] for b in gbase)
            j = index_of.get(key)
            if j is None:
                j = index_of[key] = len(reps)
                reps.append(c)
            images[k].append(j)
        i += 1
    if len(reps) != index:
        raise RuntimeError(f"coset enumeration found {len(reps)} cosets, expected {index}")
    return reps, [tuple(img) for img in images]


def coset_action(G: PermGroup, H: PermGroup, cap: int = DEFAULT_INDEX_CAP) -> CosetAction:
    reps, imgs = right_cosets(G, H, cap)
    return CosetAction(G, H, reps, imgs)


def core(G: PermGroup, H: PermGroup, cap: int = DEFAULT_INDEX_CAP) -> PermGroup:
    """Largest normal subgroup of G inside H: the kernel of the coset action."""
    if H.order() == G.order() and H.is_subgroup_of(G):
        return G
    return coset_action(G, H, cap).kernel()


def are_conjugate_subgroups(G: PermGroup, H1: PermGroup, H2: PermGroup,
                            cap: Optional[int] = None) -> Optional[Perm]:
    """Return g in G with H1^g = H2, or None.

    Exhaustive over the right cosets of H1, since H1^(hg) = H1^g for h in H1.
    """
    cap = element_cap() if cap is None else cap
    for K in (H1, H2):
        if not K.is_subgroup_of(G):
            raise ValueError("subgroup not contained in G")
    if H1.order() != H2.order():
        return None
    if H1.is_subgroup_of(H2):
        return Perm.identity(G.degree)
    reps, _ = right_cosets(G, H1, cap)
    for g in reps:
        if all(H2.chain.contains(conj(h, g)) for h in H1._gens):
            return Perm(g, check=False)
    return None
