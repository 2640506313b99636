"""Direct products and wreath products with a solvable subgroup of prime-power index.

Layout: copy i of a base group of degree d occupies points [i*d, (i+1)*d);
top generators move whole blocks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import numtheory
from .config import DEGREE_CAP
from .permgroup import PermGroup, coset_action


class ConstructionError(ValueError):
    pass


def _guard(degree: int) -> None:
    if degree > DEGREE_CAP:
        raise ConstructionError(f"degree {degree} exceeds the construction limit {DEGREE_CAP}")


def _check_sub(T: PermGroup, H: PermGroup) -> None:
    if H.degree != T.degree or not H.is_subgroup_of(T):
        raise ConstructionError("subgroup is not contained in its group")


def prime_power_index(G: PermGroup, H: PermGroup) -> tuple[int, int]:
    """(p, alpha) with |G:H| = p^alpha, alpha >= 1."""
    index = G.order() // H.order()
    pk = numtheory.prime_power_decompose(index) if index >= 2 else None
    if pk is None:
        raise ConstructionError(f"index {index} is not a nontrivial prime power")
    return pk


def shifted(g: tuple, offset: int, degree: int) -> tuple:
    """g acting on [offset, offset+len(g)) inside a permutation of the given degree."""
    out = list(range(degree))
    for x, y in enumerate(g):
        out[offset + x] = offset + y
    return tuple(out)


def block_permutation(k: tuple, d: int) -> tuple:
    """Move block i rigidly onto block k[i]."""
    return tuple(k[i] * d + x for i in range(len(k)) for x in range(d))


def direct_product(parts: list[tuple[PermGroup, PermGroup]]) -> tuple[PermGroup, PermGroup]:
    """(T_1 x ... x T_k, H_1 x ... x H_k) on the disjoint union of the point sets."""
    if not parts:
        raise ConstructionError("empty product")
    for T, H in parts:
        _check_sub(T, H)
    n = sum(T.degree for T, _ in parts)
    _guard(n)
    mg, kg, off = [], [], 0
    for T, H in parts:
        mg += [shifted(g, off, n) for g in T.gens]
        kg += [shifted(g, off, n) for g in H.gens]
        off += T.degree
    M = PermGroup(n, mg, order=math.prod(T.order() for T, _ in parts), check=False)
    K = PermGroup(n, kg, order=math.prod(H.order() for _, H in parts), check=False)
    return M, K


@dataclass
class WreathData:
    """Record of a wreath construction and the index it must have."""

    mode: str  # "top" or "base"
    bottom: PermGroup
    bottom_sub: PermGroup
    top: PermGroup
    top_sub: Optional[PermGroup]
    p: int
    expected_index_exponent: int
    W: Optional[PermGroup] = None
    S: Optional[PermGroup] = None

    def index_ok(self) -> bool:
        return self.W.order() == self.S.order() * self.p ** self.expected_index_exponent


def wreath_top(G: PermGroup, H: PermGroup, K: PermGroup) -> tuple[PermGroup, PermGroup]:
    """W = G wr K and S = H wr K, with K acting on its own points; |W:S| = p^(l*alpha)."""
    data = wreath_top_data(G, H, K)
    return data.W, data.S


def wreath_top_data(G: PermGroup, H: PermGroup, K: PermGroup) -> WreathData:
    _check_sub(G, H)
    p, alpha = prime_power_index(G, H)
    if not H.is_solvable():
        raise ConstructionError("bottom subgroup is not solvable")
    if not K.is_solvable():
        raise ConstructionError("top group is not solvable")
    d, l = G.degree, K.degree
    n = d * l
    _guard(n)
    tops = [block_permutation(k, d) for k in K.gens]
    wg = [shifted(g, i * d, n) for i in range(l) for g in G.gens] + tops
    sg = [shifted(h, i * d, n) for i in range(l) for h in H.gens] + tops
    W = PermGroup(n, wg, order=G.order() ** l * K.order(), check=False)
    S = PermGroup(n, sg, order=H.order() ** l * K.order(), check=False)
    data = WreathData("top", G, H, K, None, p, l * alpha, W, S)
    return _checked(data)


def wreath_base(K: PermGroup, L: PermGroup, G: PermGroup, H: PermGroup) -> tuple[PermGroup, PermGroup]:
    """W = K wr G over the cosets of H, S = (L x K^(m-1)) : H; |W:S| = p^(alpha+beta)."""
    data = wreath_base_data(K, L, G, H)
    return data.W, data.S


def wreath_base_data(K: PermGroup, L: PermGroup, G: PermGroup, H: PermGroup) -> WreathData:
    _check_sub(K, L)
    _check_sub(G, H)
    p, alpha = prime_power_index(G, H)
    try:
        r, beta = prime_power_index(K, L)
    except ConstructionError:
        raise ConstructionError("|K:L| must be p^beta with beta >= 1") from None
    if r != p:
        raise ConstructionError(f"mismatched primes: |G:H| is a power of {p}, |K:L| of {r}")
    if not (K.is_solvable() and H.is_solvable()):
        raise ConstructionError("K and H must be solvable")
    act = coset_action(G, H)
    m, d = p**alpha, K.degree
    n = m * d
    _guard(n)
    Gbar = act.image
    Hbar = act.image_of(H)  # fixes point 0, the coset H itself
    tops_w = [block_permutation(g, d) for g in Gbar.gens]
    tops_s = [block_permutation(h, d) for h in Hbar.gens]
    wg = [shifted(k, i * d, n) for i in range(m) for k in K.gens] + tops_w
    sg = ([shifted(x, 0, n) for x in L.gens]
          + [shifted(k, i * d, n) for i in range(1, m) for k in K.gens] + tops_s)
    W = PermGroup(n, wg, order=K.order() ** m * Gbar.order(), check=False)
    S = PermGroup(n, sg, order=L.order() * K.order() ** (m - 1) * Hbar.order(), check=False)
    data = WreathData("base", K, L, G, H, p, alpha + beta, W, S)
    return _checked(data)


def _checked(data: WreathData) -> WreathData:
    if not data.index_ok():
        raise ConstructionError("index formula violated after construction")
    return data


# the standard test family --------------------------------------------------


@dataclass
class FamilyMember:
    name: str
    kind: str
    W: PermGroup
    S: PermGroup


def _perm_group(degree: int, *cycles: str) -> PermGroup:
    from .perm import parse_cycles

    return PermGroup(degree, [parse_cycles(c, degree) for c in cycles])


def standard_family() -> list[FamilyMember]:
    """Wreath and direct products over the small catalog cases.

    Every member has a solvable S of prime-power index in W.
    """
    from . import catalog

    A5 = catalog.alternating(5)
    A4 = A5.point_stabilizer(0)
    L8 = catalog.build_psl2(8)
    B8 = L8.point_stabilizer(8)
    L7 = catalog.build_psl2(7)
    B7 = L7.point_stabilizer(7)
    L16 = catalog.build_psl2(16)
    B16 = L16.point_stabilizer(16)
    L32, (pt2, _), (ln2, _) = catalog.psl3_stabilizers(2)
    L33, (pt3, _), _ = catalog.psl3_stabilizers(3)
    S4 = catalog.symmetric(4)
    one = PermGroup(1)

    tops = {
        "C2": catalog.cyclic(2),
        "C3": catalog.cyclic(3),
        "S3": catalog.symmetric(3),
        "C4": catalog.cyclic(4),
        "V4": _perm_group(4, "(0 1)(2 3)", "(0 2)(1 3)"),
        "C2 fixing a point": _perm_group(3, "(0 1)"),
        "trivial": one,
    }
    out: list[FamilyMember] = []

    def top(name, G, H, K):
        W, S = wreath_top(G, H, tops[K])
        out.append(FamilyMember(f"{name} wr {K}", "wreath_top", W, S))

    def base(name, K, L, G, H):
        W, S = wreath_base(K, L, G, H)
        out.append(FamilyMember(name, "wreath_base", W, S))

    def product(name, parts):
        W, S = direct_product(parts)
        out.append(FamilyMember(name, "direct_product", W, S))

    for K in ("C2", "C3", "S3", "C4", "V4", "C2 fixing a point", "trivial"):
        top("Alt5/Alt4", A5, A4, K)
    top("PSL(2,8)/Borel", L8, B8, "C2")
    top("PSL(2,7)/Borel", L7, B7, "C2")
    top("PSL(2,16)/Borel", L16, B16, "C2")
    top("PSL(3,2)/point", L32, pt2, "C2")
    top("PSL(3,2)/point", L32, pt2, "C3")
    top("PSL(3,3)/point", L33, pt3, "C2")

    base("C5 wr Alt5 over Alt4", catalog.cyclic(5), PermGroup(5), A5, A4)
    base("D5 wr Alt5 over Alt4", catalog.dihedral(5), _perm_group(5, "(1 4)(2 3)"), A5, A4)
    base("C3 wr PSL(2,8) over Borel", catalog.cyclic(3), PermGroup(3), L8, B8)
    base("C2 wr PSL(2,7) over Borel", catalog.cyclic(2), PermGroup(2), L7, B7)
    base("Sym4 wr PSL(2,7) over Borel", S4, catalog.alternating(4), L7, B7)
    base("C7 wr PSL(3,2) over point", catalog.cyclic(7), PermGroup(7), L32, pt2)

    product("Alt5 x Alt5", [(A5, A4), (A5, A4)])
    product("Alt5 x C5", [(A5, A4), (catalog.cyclic(5), PermGroup(5))])
    product("PSL(2,8) x PSL(2,8)", [(L8, B8), (L8, B8)])
    product("PSL(3,2) line x plane", [(L32, pt2), (L32, ln2)])
    product("PSL(2,7) x Sym4", [(L7, B7), (S4, S4.point_stabilizer(0))])
    return out
