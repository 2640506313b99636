"""Simple groups with a solvable subgroup of prime-power index, as permutation groups.

Every instance is a :class:`CatalogCase` (T, H, p, alpha): T non-abelian
simple, H a solvable point stabilizer with |T:H| = p**alpha.  Six families
occur; :func:`cases_for_prime` instantiates those with field size up to a
cap and :func:`verify_case` checks maximality, the Hall property, the
automorphism bound and the number of conjugacy classes of such H.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from . import numtheory
from .fields import field as gf
from .perm import Perm
from .permgroup import PermGroup, are_conjugate_subgroups, coset_action

DEFAULT_Q_CAP = 257

_NAME = re.compile(r"^(A|S|C|D)(\d+)$")


# fixtures -----------------------------------------------------------------


def symmetric(n: int) -> PermGroup:
    if n == 1:
        return PermGroup(1)
    gens = [Perm.from_cycles(n, (0, 1))]
    if n > 2:
        gens.append(Perm.from_cycles(n, tuple(range(n))))
    return PermGroup(n, gens, order=math.factorial(n))


def alternating(n: int) -> PermGroup:
    if n < 3:
        return PermGroup(n)
    gens = [Perm.from_cycles(n, (0, 1, 2))]
    if n > 3:
        cyc = tuple(range(n)) if n % 2 else tuple(range(1, n))
        gens.insert(0, Perm.from_cycles(n, cyc))
    return PermGroup(n, gens, order=math.factorial(n) // 2)


def cyclic(n: int) -> PermGroup:
    if n == 1:
        return PermGroup(1)
    return PermGroup(n, [Perm.from_cycles(n, tuple(range(n)))], order=n)


def dihedral(n: int) -> PermGroup:
    """Symmetries of the n-gon, order 2n (n >= 3); D2 is the Klein group on 4 points."""
    if n == 2:
        return PermGroup(4, [Perm.from_cycles(4, (0, 1), (2, 3)), Perm.from_cycles(4, (0, 2), (1, 3))])
    if n < 2:
        return cyclic(2)
    rot = Perm.from_cycles(n, tuple(range(n)))
    refl = Perm([(-i) % n for i in range(n)])
    return PermGroup(n, [rot, refl], order=2 * n)


def build_named(name: str) -> PermGroup:
    """``A5``, ``S4``, ``C6``, ``D5`` (dihedral of order 10) in the natural action."""
    m = _NAME.match(name.strip())
    if not m:
        raise ValueError(f"unknown group name {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if n < 1:
        raise ValueError(f"unknown group name {name!r}")
    if kind in "AS" and n > 12:
        raise ValueError("Alt/Sym fixtures are limited to degree 12")
    return {"A": alternating, "S": symmetric, "C": cyclic, "D": dihedral}[kind](n)


# projective groups --------------------------------------------------------


def psl2_order(q: int) -> int:
    return q * (q * q - 1) // math.gcd(2, q - 1)


def psl3_order(q: int) -> int:
    return q**3 * (q**3 - 1) * (q * q - 1) // math.gcd(3, q - 1)


def build_psl2(q: int, q_cap: int = DEFAULT_Q_CAP) -> PermGroup:
    """PSL(2, q) on the q+1 points of the projective line; infinity is point q."""
    if q < 2 or numtheory.prime_power_decompose(q) is None:
        raise ValueError(f"{q} is not a prime power")
    if q > q_cap:
        raise ValueError(f"q = {q} exceeds the cap {q_cap}")
    F = gf(q)
    inf = q
    # x -> lambda^2 x keeps the determinant a square for odd q
    lam = F.primitive if q % 2 == 0 else F.mul(F.primitive, F.primitive)
    shift = [F.add(x, 1) for x in range(q)] + [inf]
    scale = [F.mul(lam, x) for x in range(q)] + [inf]
    flip = [inf] + [F.neg(F.inv(x)) for x in range(1, q)] + [0]
    gens = [Perm(shift), Perm(scale), Perm(flip)]
    return PermGroup(q + 1, gens, order=psl2_order(q))


def _projective_points(q: int) -> list[tuple[int, int, int]]:
    pts = []
    for v in product(range(q), repeat=3):
        nz = next((c for c in v if c), 0)
        if nz == 1:
            pts.append(v)
    return pts


def _normalize(v, q: int) -> tuple[int, int, int]:
    nz = next(c for c in v if c % q)
    inv = pow(nz, -1, q)
    return tuple(c * inv % q for c in v)


def build_psl3_combined(q: int) -> tuple[PermGroup, int]:
    """PSL(3, q) on projective points (0..N-1) and lines (N..2N-1), N = q^2+q+1.

    Generated by the elementary transvections; a matrix A acts on row
    vectors by v -> vA and on lines (as columns) by l -> A^-1 l.
    """
    if q not in (2, 3):
        raise ValueError("PSL(3, q) is only needed for q in {2, 3}")
    pts = _projective_points(q)
    index = {v: i for i, v in enumerate(pts)}
    N = len(pts)
    gens = []
    for i, j in product(range(3), repeat=2):
        if i == j:
            continue
        # A = I + E_ij, A^-1 = I - E_ij
        def row_act(v, s):
            w = list(v)
            w[j] = (w[j] + s * v[i]) % q
            return tuple(w)

        def col_act(l, s):
            w = list(l)
            w[i] = (w[i] + s * l[j]) % q
            return tuple(w)

        images = [index[_normalize(row_act(v, 1), q)] for v in pts]
        images += [N + index[_normalize(col_act(l, -1), q)] for l in pts]
        gens.append(Perm(images))
    return PermGroup(2 * N, gens, order=psl3_order(q)), N


def build_psl3(q: int) -> PermGroup:
    """PSL(3, q) on the q^2+q+1 projective points."""
    G, N = build_psl3_combined(q)
    return PermGroup(N, [g[:N] for g in G.gens], order=psl3_order(q))


def psl3_stabilizers(q: int) -> tuple[PermGroup, list[PermGroup], list[PermGroup]]:
    """T = PSL(3, q) on points, plus stabilizers of points 0, 1 and of lines 0, 1 inside T."""
    G, N = build_psl3_combined(q)
    T = PermGroup(N, [g[:N] for g in G.gens], order=G.order())
    point_stabs, line_stabs = [], []
    for node in (0, 1, N, N + 1):
        S = G.point_stabilizer(node)
        sub = PermGroup(N, [g[:N] for g in S.gens], order=S.order())
        (point_stabs if node < N else line_stabs).append(sub)
    return T, point_stabs, line_stabs


# the six families ---------------------------------------------------------


OUT_ORDER_NOTE = {
    1: "|Out(A5)| = 2",
    2: "|Out(PSL(2,8))| = 3",
    3: "|Out(PSL(2,q))| = 2 for odd prime q",
    4: "|Out(PSL(2,2^(2^m)))| = 2^m",
    5: "|Out(PSL(3,2))| = 2",
    6: "|Out(PSL(3,3))| = 2",
}


@dataclass
class CatalogCase:
    case_id: int
    T_name: str
    p: int
    alpha: int
    T: PermGroup
    H: PermGroup
    q: Optional[int] = None
    m_param: Optional[int] = None
    out_order: int = 2
    expected_class_count: int = 1
    # further stabilizers used as conjugacy witnesses
    witnesses: list[PermGroup] = field(default_factory=list)

    @property
    def index(self) -> int:
        return self.p**self.alpha

    def to_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "T_name": self.T_name,
            "q": self.q,
            "m_param": self.m_param,
            "p": self.p,
            "alpha": self.alpha,
            "T_order": self.T.order(),
            "H_order": self.H.order(),
            "degree": self.T.degree,
            "expected_class_count": self.expected_class_count,
        }


def _psl2_case(case_id: int, q: int, p: int, m_param=None, q_cap=DEFAULT_Q_CAP) -> CatalogCase:
    T = build_psl2(q, q_cap=max(q_cap, q))
    H = T.point_stabilizer(q)
    alpha = numtheory.prime_power_decompose(q + 1)[1]
    out = {2: 3, 3: 2}.get(case_id, 2**m_param if m_param is not None else 2)
    return CatalogCase(case_id, f"PSL(2,{q})", p, alpha, T, H, q=q, m_param=m_param,
                         out_order=out, witnesses=_conjugate_witnesses(T, H))


def _conjugate_witnesses(T: PermGroup, H: PermGroup) -> list[PermGroup]:
    # another point stabilizer and a random conjugate of H
    g = T.random_elements(1, "witness")[0]
    return [T.point_stabilizer(0), H.conjugate(g)]


def case_alt5() -> CatalogCase:
    T = alternating(5)
    H = T.point_stabilizer(4)
    return CatalogCase(1, "A5", 5, 1, T, H, witnesses=_conjugate_witnesses(T, H))


def case_psl3(q: int) -> CatalogCase:
    T, pstab, lstab = psl3_stabilizers(q)
    p = q * q + q + 1
    return CatalogCase(5 if q == 2 else 6, f"PSL(3,{q})", p, 1, T, pstab[0], q=q,
                         expected_class_count=2, witnesses=pstab[1:] + lstab)


def cases_for_prime(p: int, q_cap: int = DEFAULT_Q_CAP,
                    include_large_fermat: bool = False) -> list[CatalogCase]:
    """All instantiable cases for the prime p with field size at most q_cap.

    Case 4 with q = 2^(2^m) >= 256 is skipped unless include_large_fermat.
    """
    if not numtheory.is_prime(p):
        raise ValueError(f"{p} is not prime")
    cases: list[CatalogCase] = []
    if p == 5:
        cases.append(case_alt5())
    if p == 3 and q_cap >= 8:
        cases.append(_psl2_case(2, 8, 3, q_cap=q_cap))
    if p == 2:
        k = 3
        while 2**k - 1 <= q_cap:
            q = 2**k - 1
            if numtheory.is_prime(q):
                cases.append(_psl2_case(3, q, 2, q_cap=q_cap))
            k += 1
    m = numtheory.fermat_exponent(p) if p > 2 else None
    if m is not None and m >= 2:
        q = p - 1
        if q <= q_cap and (q < 256 or include_large_fermat):
            cases.append(_psl2_case(4, q, p, m_param=m, q_cap=q_cap))
    if p == 7:
        cases.append(case_psl3(2))
    if p == 13:
        cases.append(case_psl3(3))
    return cases


def all_cases(q_cap: int = DEFAULT_Q_CAP, include_large_fermat: bool = False) -> list[CatalogCase]:
    primes = [2, 3, 5, 7, 13, 17, 257, 65537]
    out = []
    for p in primes:
        out.extend(cases_for_prime(p, q_cap, include_large_fermat))
    return sorted(out, key=lambda c: (c.case_id, c.q or 0))


# verification -------------------------------------------------------------


@dataclass
class CaseReport:
    case: CatalogCase
    index_ok: bool
    solvable_ok: bool
    maximal: bool
    hall: bool
    aut_bound_ok: bool
    class_count_ok: bool
    class_count: int
    four_aut_T: int
    bound_rhs: int
    exceeds_m4: bool

    @property
    def passed(self) -> bool:
        return all((self.index_ok, self.solvable_ok, self.maximal, self.hall,
                    self.aut_bound_ok, self.class_count_ok))

    def to_dict(self) -> dict:
        d = self.case.to_dict()
        d.update(index_ok=self.index_ok, solvable_ok=self.solvable_ok, maximal=self.maximal,
                 hall=self.hall, aut_bound_ok=self.aut_bound_ok,
                 class_count_ok=self.class_count_ok, class_count=self.class_count,
                 four_aut_T=self.four_aut_T, bound_rhs=self.bound_rhs,
                 exceeds_m4=self.exceeds_m4, passed=self.passed)
        return d


def count_conjugacy_classes(T: PermGroup, subgroups: list[PermGroup]) -> int:
    reps: list[PermGroup] = []
    for S in subgroups:
        if not any(are_conjugate_subgroups(T, R, S) is not None for R in reps):
            reps.append(S)
    return len(reps)


def verify_case(c: CatalogCase) -> CaseReport:
    T, H = c.T, c.H
    index = T.order() // H.order()
    candidates = [H] + c.witnesses
    index_ok = all(T.order() == S.order() * c.index for S in candidates)
    solvable_ok = all(S.is_solvable() for S in candidates) and not T.is_solvable()
    maximal = all(coset_action(T, S).image.is_primitive() for S in candidates)
    hall = all(math.gcd(S.order(), index) == 1 for S in candidates)
    aut = T.order() * c.out_order
    four_aut = 4 * aut
    rhs = 13**5 if c.case_id == 6 else c.p ** (4 * c.alpha)
    classes = count_conjugacy_classes(T, candidates)
    return CaseReport(
        case=c,
        index_ok=index_ok and index == c.index,
        solvable_ok=solvable_ok,
        maximal=maximal,
        hall=hall,
        aut_bound_ok=four_aut <= rhs,
        class_count_ok=classes == c.expected_class_count,
        class_count=classes,
        four_aut_T=four_aut,
        bound_rhs=rhs,
        exceeds_m4=four_aut > c.index**4,
    )
