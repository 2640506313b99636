"""Solvable radical, the radical series rad(G) <= A <= B <= G, and composition factors.

Quotients are never formed abstractly: G/rad(G) is realised as the image of
an explicit action (on the orbits of the radical, or failing that on its
cosets) whose kernel is exactly the radical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from . import numtheory
from .config import element_cap
from .perm import order_of, power
from .permgroup import Homomorphism, PermGroup, coset_action

# simple factor identification ---------------------------------------------

CYCLIC = "Cyclic"
ALT5 = "Alt5"
PSL2 = "PSL2"
PSL3_2 = "PSL3(2)"
PSL3_3 = "PSL3(3)"
UNKNOWN = "UnknownSimple"


def _psl2_order(q: int) -> int:
    return q * (q * q - 1) // math.gcd(2, q - 1)


def _psl2_parameters(order: int) -> list[int]:
    """All prime powers q >= 4 with |PSL(2,q)| = order."""
    out = []
    q = 4
    while q * (q * q - 1) // 2 <= order:
        if _psl2_order(q) == order and numtheory.prime_power_decompose(q):
            out.append(q)
        q += 1
    return out


def _alternating_degree(order: int) -> Optional[int]:
    n, f = 5, 60
    while f < order:
        n += 1
        f = f * n
    return n if f == order else None


@dataclass(frozen=True, order=True)
class SimpleFactorId:
    """A simple group identified by its order.

    Within the list of groups that can occur here, orders are
    distinguishing; anything else is reported as ``UnknownSimple``.
    """

    order: int
    tag: str
    q: Optional[int] = None
    psl2_q: tuple = field(default=(), compare=False)

    @property
    def name(self) -> str:
        if self.tag == CYCLIC:
            return f"Cyclic({self.order})"
        if self.tag == PSL2:
            return f"PSL2({self.q})"
        if self.tag == UNKNOWN:
            return f"UnknownSimple({self.order})"
        return self.tag

    @property
    def is_cyclic(self) -> bool:
        return self.tag == CYCLIC

    @property
    def alternating_degree(self) -> Optional[int]:
        """n if the order is that of Alt(n), n >= 5."""
        if self.is_cyclic:
            return None
        return _alternating_degree(self.order)

    def __str__(self) -> str:
        return self.name


def identify(order: int) -> SimpleFactorId:
    """Identify a simple group from its order (the group must be known to be simple)."""
    if numtheory.is_prime(order):
        return SimpleFactorId(order, CYCLIC)
    qs = tuple(_psl2_parameters(order))
    if order == 60:
        return SimpleFactorId(60, ALT5, psl2_q=qs)
    if order == 168:
        return SimpleFactorId(168, PSL3_2, psl2_q=qs)
    if order == 5616:
        return SimpleFactorId(5616, PSL3_3)
    if len(qs) == 1:
        return SimpleFactorId(order, PSL2, q=qs[0], psl2_q=qs)
    return SimpleFactorId(order, UNKNOWN)


def cyclic_factors(n: int) -> list[SimpleFactorId]:
    out = []
    for r, e in numtheory.factorize(n).items():
        out.extend([SimpleFactorId(r, CYCLIC)] * e)
    return out


# the radical ---------------------------------------------------------------


def _use_exhaustive(G: PermGroup) -> bool:
    return G.order() <= element_cap()


def radical_with_flag(G: PermGroup) -> tuple[PermGroup, bool]:
    """rad(G) and whether it was found by sampling.

    g lies in rad(G) iff its normal closure is solvable; the radical is
    generated by the class representatives that pass.  Above the cap the
    first random element passing the test gives a solvable normal R, and
    rad(G) is the preimage of rad(G/R), found recursively.
    """
    if G.is_solvable():
        return G, False
    if _use_exhaustive(G):
        return _radical_from(G, [x for x, _ in G.conjugacy_class_reps()]), False
    R = _first_solvable_closure(G)
    if R is None:
        return PermGroup(G.degree), True
    # the kernel on R's orbits is normal; when it is solvable it lies in rad(G)
    while True:
        K = _orbit_action(G, R).kernel()
        if K.order() == R.order() or not K.is_solvable():
            break
        R = K
    hom = quotient_action(G, R)
    RQ, probabilistic = radical_with_flag(hom.image)
    if RQ.order() == 1:
        return R, probabilistic
    lifts = [hom.preimage(y) for y in RQ.gens]
    full = PermGroup(G.degree, R.gens + lifts, order=R.order() * RQ.order(), check=False)
    return full, probabilistic


def _radical_from(G: PermGroup, candidates) -> PermGroup:
    R = PermGroup(G.degree)
    for x in candidates:
        if x == G.identity or R.contains(x):
            continue
        N = G.normal_closure([x])
        if N.order() < G.order() and N.is_solvable():
            R = PermGroup(G.degree, R.gens + N.gens, check=False)
    return R


def _first_solvable_closure(G: PermGroup, samples: int = 20) -> Optional[PermGroup]:
    # prime-order powers first: they land in a solvable normal subgroup far
    # more often than the random elements themselves
    pool = G.random_elements(samples, "radical")
    powers = []
    for x in pool:
        o = order_of(x)
        if o > 1:
            powers.extend(power(x, o // r) for r in numtheory.factorize(o))
    for x in dict.fromkeys(powers + pool):
        if x == G.identity:
            continue
        N = G.normal_closure([x])
        if N.order() < G.order() and N.is_solvable():
            return N
    return None


def solvable_radical(G: PermGroup) -> PermGroup:
    return radical_with_flag(G)[0]


def quotient_action(G: PermGroup, N: PermGroup) -> Homomorphism:
    """A homomorphism from G with kernel exactly the normal subgroup N."""
    if N.order() == 1:
        return Homomorphism(G, G.gens, G.degree, trusted=True)
    # N's orbits form a G-invariant partition; try the action on them first
    hom = _orbit_action(G, N)
    if G.order() // hom.image.order() == N.order():
        return hom
    return coset_action(G, N)


def _orbit_action(G: PermGroup, N: PermGroup) -> Homomorphism:
    """G acting on the orbits of its normal subgroup N."""
    orbits = N.orbits()
    where = {}
    for i, orb in enumerate(orbits):
        for x in orb:
            where[x] = i
    imgs = [tuple(where[g[orb[0]]] for orb in orbits) for g in G.gens]
    return Homomorphism(G, imgs, len(orbits), trusted=True)


# radical series ------------------------------------------------------------


@dataclass
class RadicalSeriesRecord:
    rad_order: int
    A_order: int
    B_order: int
    G_order: int
    delta: list[SimpleFactorId]
    k: int
    top_image: PermGroup
    probabilistic: bool
    b_over_a_solvable: bool = True
    # supporting groups, all inside the image of G/rad(G)
    radical: Optional[PermGroup] = field(default=None, repr=False)
    quotient: Optional[PermGroup] = field(default=None, repr=False)
    socle: Optional[PermGroup] = field(default=None, repr=False)
    factors: list[PermGroup] = field(default_factory=list, repr=False)

    @property
    def X_order(self) -> int:
        return self.G_order // self.B_order

    @property
    def quotient_order(self) -> int:
        """|G / rad(G)|."""
        return self.G_order // self.rad_order

    def to_dict(self) -> dict:
        return {
            "rad_order": self.rad_order,
            "A_order": self.A_order,
            "B_order": self.B_order,
            "G_order": self.G_order,
            "k": self.k,
            "delta": [d.name for d in self.delta],
            "X_order": self.X_order,
            "probabilistic": self.probabilistic,
        }


def _normal_subgroups_method(G: PermGroup) -> str:
    return "exhaustive" if _use_exhaustive(G) else "random"


def simple_factors(N: PermGroup) -> tuple[list[PermGroup], bool]:
    """Split a non-abelian minimal normal subgroup N = T^k into its k simple factors.

    The factors are the minimal normal subgroups of N itself.  Returns the
    factors and whether the split could be certified (orders multiply to
    |N| and the factors commute elementwise).
    """
    method = _normal_subgroups_method(N)
    parts = N.minimal_normal_subgroups(method)
    total = math.prod(T.order() for T in parts)
    commuting = all(
        _commute(a, b) for i, S in enumerate(parts) for T in parts[i + 1:]
        for a in S.gens for b in T.gens)
    return parts, total == N.order() and commuting


def _commute(a: tuple, b: tuple) -> bool:
    return all(b[a[x]] == a[b[x]] for x in range(len(a)))


def _action_on_factors(Q: PermGroup, factors: list[PermGroup]) -> Homomorphism:
    imgs = []
    for g in Q.gens:
        img = []
        for T in factors:
            conj_gens = [_conj(t, g) for t in T.gens]
            j = next(j for j, S in enumerate(factors)
                     if all(S.chain.contains(c) for c in conj_gens))
            img.append(j)
        imgs.append(tuple(img))
    return Homomorphism(Q, imgs, len(factors), trusted=True)


def _conj(x: tuple, g: tuple) -> tuple:
    r = [0] * len(x)
    for i, y in enumerate(x):
        r[g[i]] = g[y]
    return tuple(r)


def radical_series(G: PermGroup) -> RadicalSeriesRecord:
    """rad(G) <= A <= B <= G with A/rad(G) the socle of G/rad(G) and B the kernel on its factors."""
    R, probabilistic = radical_with_flag(G)
    g_order = G.order()
    r_order = R.order()
    if r_order == g_order:
        return RadicalSeriesRecord(r_order, g_order, g_order, g_order, [], 0, PermGroup(1),
                                   probabilistic, radical=R)
    hom = quotient_action(G, R)
    Q = hom.image
    method = _normal_subgroups_method(Q)
    probabilistic |= method == "random"
    minimal = Q.minimal_normal_subgroups(method)
    gens = [x for N in minimal for x in N.gens]
    soc = PermGroup(Q.degree, gens, check=False)
    factors: list[PermGroup] = []
    for N in minimal:
        if N.is_abelian():
            raise ArithmeticError("abelian minimal normal subgroup above the radical")
        if N.order() == Q.order():
            # Q is its own unique minimal normal subgroup, so Q is simple
            factors.append(N)
            continue
        parts, certified = simple_factors(N)
        probabilistic |= not certified or _normal_subgroups_method(N) == "random"
        factors.extend(parts)
    action = _action_on_factors(Q, factors)
    B = action.kernel()
    X = action.image
    # soc is perfect, so B/soc is solvable iff the perfect residual of B is soc
    b_over_a = B.perfect_residual().order() == soc.order()
    return RadicalSeriesRecord(
        rad_order=r_order,
        A_order=r_order * soc.order(),
        B_order=r_order * B.order(),
        G_order=g_order,
        delta=[identify(T.order()) for T in factors],
        k=len(factors),
        top_image=X,
        probabilistic=probabilistic,
        b_over_a_solvable=b_over_a,
        radical=R,
        quotient=Q,
        socle=soc,
        factors=factors,
    )


def composition_factors(G: PermGroup) -> list[SimpleFactorId]:
    """Jordan-Holder multiset, sorted by order then name."""
    return composition_factors_with_flag(G)[0]


def composition_factors_with_flag(G: PermGroup, series: Optional[RadicalSeriesRecord] = None
                                  ) -> tuple[list[SimpleFactorId], bool]:
    """Composition factors and whether any step relied on sampling.

    ``series`` may pass in an already computed radical series of G.
    """
    if G.order() == 1:
        return [], False
    rec = series or radical_series(G)
    out = cyclic_factors(rec.rad_order)
    out.extend(rec.delta)
    prob = rec.probabilistic
    if rec.k:
        # B/A is solvable, so its factors are the primes of its order
        out.extend(cyclic_factors(rec.B_order // rec.A_order))
        top, top_prob = composition_factors_with_flag(rec.top_image)
        out.extend(top)
        prob = prob or top_prob
    return sorted(out, key=lambda f: (f.order, f.name)), prob
