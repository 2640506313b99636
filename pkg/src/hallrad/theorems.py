"""Checks for groups G with a solvable subgroup H of prime-power index.

Everything is computed on the image of G acting on the cosets of H, which
is G/Core_G(H); since the core is solvable this changes neither the
non-abelian composition factors nor |G/rad(G)|.

A claim that fails on a concrete group is recorded as a finding string
rather than raised, so a whole corpus can be scanned in one run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import numtheory
from .config import CapExceeded, element_cap
from .perm import order_of, power
from .permgroup import PermGroup, are_conjugate_subgroups, coset_action
from .series import (RadicalSeriesRecord, SimpleFactorId, composition_factors_with_flag,
                     cyclic_factors, radical_series)


class PreconditionError(ValueError):
    """The input pair does not satisfy the hypotheses of the analysis."""


class WitnessError(ValueError):
    """A supplied witness subgroup lacks the property claimed for it."""


# composition factor filter -------------------------------------------------


def _psl2_parameters(f: SimpleFactorId) -> set[int]:
    qs = set(f.psl2_q)
    if f.q is not None:
        qs.add(f.q)
    return qs


def allowed_factor(f: SimpleFactorId, p: int) -> bool:
    """Whether a non-abelian simple factor may occur for the prime p."""
    if f.is_cyclic:
        return True
    qs = _psl2_parameters(f)
    if p == 2 and any(numtheory.is_prime(q) and q >= 5 and numtheory.is_power_of_two(q + 1)
                      for q in qs):
        return True
    if p == 3 and 8 in qs:
        return True
    if p == 5 and f.order == 60:
        return True
    if p == 7 and f.order == 168:
        return True
    if p == 13 and f.order == 5616:
        return True
    m = numtheory.fermat_exponent(p)
    if m is not None and m >= 2 and (p - 1) in qs:
        return True
    return False


def factor_filter(p: int) -> Callable[[SimpleFactorId], bool]:
    return lambda f: allowed_factor(f, p)


@dataclass
class FactorCheck:
    passed: bool
    p: int
    factors: list[str]
    offending: list[str] = field(default_factory=list)
    diagnostic: str = ""

    def to_dict(self) -> dict:
        return {"passed": self.passed, "p": self.p, "factors": self.factors,
                "offending": self.offending, "diagnostic": self.diagnostic}


def filter_factors(factors: list[SimpleFactorId], p: int) -> FactorCheck:
    bad = [f for f in factors if not allowed_factor(f, p)]
    diag = ""
    if bad:
        names = ", ".join(sorted({f.name for f in bad}))
        diag = f"non-abelian factor(s) {names} not allowed for p = {p}"
        if not numtheory.in_pi0(p):
            diag += f"; {p} is outside the admissible prime set"
    return FactorCheck(not bad, p, [f.name for f in factors], [f.name for f in bad], diag)


def prime_power_index(G: PermGroup, H: PermGroup) -> tuple[int, int]:
    if H.degree != G.degree or not H.is_subgroup_of(G):
        raise PreconditionError("H is not a subgroup of G")
    index = G.order() // H.order()
    pk = numtheory.prime_power_decompose(index) if index >= 2 else None
    if pk is None:
        raise PreconditionError(f"|G:H| = {index} is not a prime power p^a with a >= 1")
    return pk


def _factors_of_quotient(factors: list[SimpleFactorId], order: int) -> list[SimpleFactorId]:
    """Factors of a quotient by a solvable normal subgroup, given its order."""
    noncyclic = [f for f in factors if not f.is_cyclic]
    rest = order // math.prod(f.order for f in noncyclic)
    return sorted(noncyclic + cyclic_factors(rest), key=lambda f: (f.order, f.name))


def check_composition_factors(G: PermGroup, H: PermGroup) -> FactorCheck:
    """Composition factors of G/Core_G(H) against the list allowed for p."""
    p, _ = prime_power_index(G, H)
    if not H.is_solvable():
        raise PreconditionError("H is not solvable")
    image = coset_action(G, H).image
    factors, _ = composition_factors_with_flag(image)
    return filter_factors(factors, p)


# quantitative bounds ------------------------------------------------------


def check_rad_bound(series: RadicalSeriesRecord, p: int, m: int) -> tuple[bool, Optional[bool]]:
    """(|G/rad G| <= m^5, |G/rad G| <= m^4 or None when p = 13)."""
    q = series.quotient_order
    exp5 = q <= m**5
    exp4 = None if p == 13 else q <= m**4
    return exp5, exp4


@dataclass
class SocleActionCheck:
    applicable: bool
    ok: Optional[bool]
    X_order: int
    k: int
    diagnostic: str = ""

    def to_dict(self) -> dict:
        return {"applicable": self.applicable, "ok": self.ok, "X_order": self.X_order,
                "k": self.k, "diagnostic": self.diagnostic}


def check_socle_action_bound(series: RadicalSeriesRecord,
                 factors: Optional[list[SimpleFactorId]] = None) -> SocleActionCheck:
    """|X| <= 4^(k-1) for the action X of G on the simple factors of the socle.

    Needs X to have no composition factor Alt(n), n >= 6; ``factors``
    defaults to the composition factors of X.
    """
    X_order = series.X_order
    if series.k == 0:
        return SocleActionCheck(False, None, X_order, 0, "k = 0: no non-abelian socle factors")
    if factors is None:
        factors, _ = composition_factors_with_flag(series.top_image)
    alt = [f.name for f in factors
           if not f.is_cyclic and (f.alternating_degree or 0) >= 6]
    if alt:
        return SocleActionCheck(False, None, X_order, series.k,
                           "composition factor of alternating order Alt(n), n >= 6: " + ", ".join(alt))
    return SocleActionCheck(True, X_order <= 4 ** (series.k - 1), X_order, series.k)


# Hall subgroups ------------------------------------------------------------


def p_prime_part(x: tuple, p: int) -> tuple:
    o = order_of(x)
    return power(x, numtheory.p_part(o, p))


def hall_subgroup(H: PermGroup, p: int, tries: int = 300,
                  cap: Optional[int] = None) -> tuple[Optional[PermGroup], str]:
    """A Hall p'-subgroup of the solvable group H, and how it was found.

    Grows a p'-subgroup one element at a time.  In a solvable group every
    p'-subgroup lies in a Hall p'-subgroup, so an exhaustive pass over the
    elements never gets stuck; random p'-parts are tried first.  Returns
    (None, "budget") when H is above the cap and sampling did not finish.
    """
    cap = element_cap() if cap is None else cap
    target = H.order() // numtheory.p_part(H.order(), p)
    if target == H.order():
        return H, "whole"
    K = PermGroup(H.degree)

    def grow(y: tuple) -> bool:
        nonlocal K
        if K.chain.contains(y):
            return False
        L = PermGroup(H.degree, K.gens + [y], check=False)
        if L.order() % p:
            K = L
            return True
        return False

    for x in H.random_elements(tries, f"hall{p}"):
        grow(p_prime_part(x, p))
        if K.order() == target:
            return K, "random"
    if H.order() > cap:
        return None, "budget"
    while K.order() < target:
        if not any(grow(y) for y in H.elements(cap) if order_of(y) % p):
            raise ArithmeticError("no Hall subgroup found; is H solvable?")
    return K, "exhaustive"


def is_hall(G: PermGroup, K: PermGroup, excluded: set[int]) -> bool:
    """K is a Hall subgroup for the complement of the prime set ``excluded``."""
    if K.degree != G.degree or not K.is_subgroup_of(G):
        return False
    if any(K.order() % r == 0 for r in excluded):
        return False
    rest = G.order() // K.order()
    for r in excluded:
        rest //= numtheory.p_part(rest, r)
    return rest == 1


# solvability criteria from Hall subgroups ------------------------------


@dataclass
class CriterionVerdict:
    clause: int
    applicable: bool
    G_is_solvable: bool
    finding: Optional[str] = None
    note: str = ""

    def to_dict(self) -> dict:
        return {"clause": self.clause, "applicable": self.applicable,
                "G_is_solvable": self.G_is_solvable, "finding": self.finding, "note": self.note}


def normal_p_complement(G: PermGroup, p: int) -> Optional[PermGroup]:
    """The normal Hall p'-subgroup, if G is p-nilpotent (exhaustive below the cap)."""
    if G.order() <= element_cap():
        elems = [x for x, _ in G.conjugacy_class_reps() if order_of(x) % p]
    else:
        elems = [p_prime_part(x, p) for x in G.random_elements(200, f"complement{p}")]
    N = G.normal_closure(elems)
    return N if N.order() % p else None


def check_criteria(G: PermGroup, clause: int, p: int, q: int,
                   hall_p: Optional[PermGroup] = None,
                   hall_q: Optional[PermGroup] = None,
                   hall_pq: Optional[PermGroup] = None) -> CriterionVerdict:
    """Solvability criteria from pairs of Hall subgroups.

    1. solvable Hall p'- and q'-subgroups, {p, q} != {2, 7}  =>  G solvable
    2. solvable Hall p'-subgroup (p != 3) and a Hall 3'-subgroup  =>  G solvable
    3. G p-nilpotent, q outside the admissible prime set, solvable Hall
       {p, q}'-subgroup  =>  G solvable
    """
    if p == q or not (numtheory.is_prime(p) and numtheory.is_prime(q)):
        raise ValueError("p and q must be distinct primes")
    solvable = G.is_solvable()
    if clause == 1:
        _require(G, hall_p, {p}, "Hall p'")
        _require(G, hall_q, {q}, "Hall q'")
        if {p, q} == {2, 7}:
            return CriterionVerdict(1, False, solvable, note="{p, q} = {2, 7} is excluded")
        if not (hall_p.is_solvable() and hall_q.is_solvable()):
            return CriterionVerdict(1, False, solvable, note="a witness is not solvable")
    elif clause == 2:
        if q != 3:
            raise ValueError("clause 2 takes q = 3")
        _require(G, hall_p, {p}, "Hall p'")
        _require(G, hall_q, {3}, "Hall 3'")
        if not hall_p.is_solvable():
            return CriterionVerdict(2, False, solvable, note="Hall p'-witness is not solvable")
    elif clause == 3:
        _require(G, hall_pq, {p, q}, "Hall {p,q}'")
        if numtheory.in_pi0(q):
            return CriterionVerdict(3, False, solvable, note=f"q = {q} lies in the admissible prime set")
        if normal_p_complement(G, p) is None:
            return CriterionVerdict(3, False, solvable, note="G has no normal p-complement")
        if not hall_pq.is_solvable():
            return CriterionVerdict(3, False, solvable, note="Hall {p,q}'-witness is not solvable")
    else:
        raise ValueError(f"unknown clause {clause}")
    finding = None if solvable else f"clause {clause}: hypotheses hold but G is not solvable"
    return CriterionVerdict(clause, True, solvable, finding)


def _require(G: PermGroup, K: Optional[PermGroup], excluded: set[int], label: str) -> None:
    if K is None:
        raise WitnessError(f"missing {label} witness")
    if not is_hall(G, K, excluded):
        raise WitnessError(f"{label} witness is not a {label}-subgroup of G")


# the full analysis ---------------------------------------------------------


@dataclass
class AnalysisReport:
    p: int
    alpha: int
    m: int
    G_order: int
    core_order: int
    G_is_solvable: bool
    hall_found: Optional[bool]
    hall_order: Optional[int]
    hall_method: str
    factor_check: FactorCheck
    series: RadicalSeriesRecord
    rad_bound_exponent_5: bool
    rad_bound_exponent_4: Optional[bool]
    socle_action: SocleActionCheck
    conjugacy_checked: Optional[bool]
    probabilistic: bool
    findings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.findings

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "alpha": self.alpha,
            "m": self.m,
            "G_order": self.G_order,
            "core_order": self.core_order,
            "G_is_solvable": self.G_is_solvable,
            "hall_found": self.hall_found,
            "hall_order": self.hall_order,
            "hall_method": self.hall_method,
            "factor_check": self.factor_check.to_dict(),
            "series": self.series.to_dict(),
            "rad_quotient_order": self.series.quotient_order,
            "rad_bound_exponent_5": self.rad_bound_exponent_5,
            "rad_bound_exponent_4": self.rad_bound_exponent_4,
            "socle_action": self.socle_action.to_dict(),
            "conjugacy_checked": self.conjugacy_checked,
            "probabilistic": self.probabilistic,
            "findings": self.findings,
        }


def analyze_pair(G: PermGroup, H: PermGroup) -> AnalysisReport:
    p, alpha = prime_power_index(G, H)
    if not H.is_solvable():
        raise PreconditionError("H is not solvable")
    m = p**alpha
    findings: list[str] = []

    image = coset_action(G, H).image
    core_order = G.order() // image.order()
    # the core is solvable, so G and G/Core share their non-abelian factors
    # and |G/rad G|; use whichever representation has the smaller degree
    work = G if G.degree <= image.degree else image
    series = radical_series(work)
    factors, prob_factors = composition_factors_with_flag(work, series)
    factors = _factors_of_quotient(factors, image.order())
    fc = filter_factors(factors, p)
    if not fc.passed:
        findings.append("composition factors: " + fc.diagnostic)

    solvable = G.is_solvable()
    if not solvable and not numtheory.in_pi0(p):
        findings.append(f"G is not solvable although p = {p} is outside the admissible prime set")

    hall, method = hall_subgroup(H, p)
    hall_found = None if hall is None else is_hall(G, hall, {p})
    if hall_found is False:
        findings.append("Hall p'-subgroup search returned a subgroup that is not Hall in G")

    conj = None
    if hall is not None and p not in (7, 13):
        other, _ = hall_subgroup(H.conjugate(G.random_elements(1, "conj")[0]), p)
        if other is not None and other.is_subgroup_of(G):
            try:
                conj = are_conjugate_subgroups(G, hall, other) is not None
            except CapExceeded:
                conj = None  # too many cosets to compare; left unchecked
            if conj is False:
                findings.append("two Hall p'-subgroups are not conjugate")

    exp5, exp4 = check_rad_bound(series, p, m)
    if not exp5:
        findings.append(f"|G/rad G| = {series.quotient_order} exceeds m^5 = {m**5}")
    if exp4 is False:
        findings.append(f"|G/rad G| = {series.quotient_order} exceeds m^4 = {m**4}")
    socle_action = check_socle_action_bound(series)
    if socle_action.ok is False:
        findings.append(f"|X| = {socle_action.X_order} exceeds 4^(k-1) with k = {socle_action.k}")
    if not series.b_over_a_solvable:
        findings.append("B/A is not solvable")

    return AnalysisReport(
        p=p, alpha=alpha, m=m, G_order=G.order(), core_order=core_order,
        G_is_solvable=solvable, hall_found=hall_found,
        hall_order=None if hall is None else hall.order(), hall_method=method,
        factor_check=fc, series=series, rad_bound_exponent_5=exp5, rad_bound_exponent_4=exp4,
        socle_action=socle_action, conjugacy_checked=conj,
        probabilistic=prob_factors or series.probabilistic, findings=findings)


# a fixture that cannot exist ------------------------------------------------


@dataclass
class PoisonReport:
    """Outcome of looking for a solvable subgroup of p-power index in a group."""

    group_order: int
    p: int
    found: Optional[PermGroup]
    reason: str


def solvable_prime_power_index_subgroup(G: PermGroup, p: int) -> PoisonReport:
    """Search G (simple, small) for a solvable subgroup of index p^a, a >= 1.

    Indices i with i! < |G| are ruled out because a simple group has no
    nontrivial action on fewer points; the remaining orders are searched
    over all subgroups generated by two elements.
    """
    n = G.order()
    if not G.is_simple():
        raise ValueError("the search argument needs a simple group")
    reasons = []
    targets = []
    i = p
    while n % i == 0:
        if math.factorial(i) < n:
            reasons.append(f"index {i}: {i}! < |G| and G is simple")
        else:
            targets.append(n // i)
        i *= p
    if targets:
        elems = G.elements()
        for x, _ in G.conjugacy_class_reps():
            for y in elems:
                S = PermGroup(G.degree, [x, y], check=False)
                if S.order() in targets and S.is_solvable():
                    return PoisonReport(n, p, S, f"found order {S.order()}")
        reasons.append("orders " + ", ".join(map(str, targets))
                       + ": no 2-generated subgroup of that order")
    return PoisonReport(n, p, None, "; ".join(reasons) or f"{p} does not divide |G|")
