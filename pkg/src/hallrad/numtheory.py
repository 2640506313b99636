"""Prime and prime-power arithmetic for the consecutive prime-power trichotomy.

All routines are exact over 64-bit inputs: primality uses a deterministic
Miller-Rabin witness set and roots are extracted by integer bisection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

LIMIT = 1 << 63

# First twelve primes; deterministic for every n < 3.3e24.
MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

MERSENNE_PAIR = "MersennePair"
EIGHT_NINE = "EightNine"
FERMAT_PAIR = "FermatPair"
NOT_APPLICABLE = "NotApplicable"


def _check_range(n: int) -> None:
    if n >= LIMIT:
        raise ValueError(f"{n} is outside the supported 64-bit range")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 2**63."""
    _check_range(n)
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def iroot(n: int, k: int) -> int:
    """Largest r with r**k <= n, by integer bisection."""
    if n < 0 or k < 1:
        raise ValueError("iroot needs n >= 0 and k >= 1")
    if n < 2 or k == 1:
        return n
    lo, hi = 1, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _prime_exponents(limit: int):
    for k in range(2, limit + 1):
        if all(k % d for d in range(2, k)):
            yield k


def prime_power_decompose(n: int) -> Optional[tuple[int, int]]:
    """Return ``(p, k)`` with ``n == p**k`` and p prime, or None."""
    if n < 2:
        raise ValueError("prime_power_decompose needs n >= 2")
    _check_range(n)
    for p in _SMALL_PRIMES:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            return (p, k) if n == 1 else None
    if is_prime(n):
        return n, 1
    # every prime factor exceeds 47, so the exponent is small
    for k in _prime_exponents(n.bit_length()):
        r = iroot(n, k)
        if r < 2:
            break
        if r**k == n:
            inner = prime_power_decompose(r)
            if inner is None:
                return None
            return inner[0], inner[1] * k
    return None


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def is_fermat_prime(p: int) -> bool:
    """True iff p = 2**(2**m) + 1 is prime; within 64 bits that is 3, 5, 17, 257, 65537."""
    if p < 2:
        raise ValueError("is_fermat_prime needs p >= 2")
    _check_range(p)
    e = p - 1
    if not is_power_of_two(e):
        return False
    if not is_power_of_two(e.bit_length() - 1):
        return False
    return is_prime(p)


def fermat_exponent(p: int) -> Optional[int]:
    """m with p = 2**(2**m) + 1, when p is a Fermat prime."""
    if not is_fermat_prime(p):
        return None
    return ((p - 1).bit_length() - 1).bit_length() - 1


def in_pi0(p: int) -> bool:
    """Membership of the prime p in {2, 7, 13} together with the Fermat primes.

    Only correct inside the 64-bit domain; it is unknown whether Fermat
    primes beyond 65537 exist.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p in (2, 7, 13) or is_fermat_prime(p)


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division (used on group orders only)."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def p_part(n: int, p: int) -> int:
    r = 1
    while n % p == 0:
        n //= p
        r *= p
    return r


@dataclass(frozen=True)
class Trichotomy:
    outcome: str
    q: int
    m: Optional[int] = None
    details: tuple = field(default=())

    def to_dict(self) -> dict:
        out = {"outcome": self.outcome, "q": self.q,
               "details": [list(d) for d in self.details]}
        if self.m is not None:
            out["m"] = self.m
        return out


def classify_consecutive(q: int) -> Trichotomy:
    """Place the pair (q, q+1) into one of the three consecutive prime-power cases."""
    if q < 2:
        raise ValueError("classify_consecutive needs q >= 2")
    # one of q, q+1 is even; an even prime power is a power of two
    even = q if q % 2 == 0 else q + 1
    if not is_power_of_two(even):
        return Trichotomy(NOT_APPLICABLE, q)
    a = prime_power_decompose(q)
    b = prime_power_decompose(q + 1)
    if a is None or b is None:
        return Trichotomy(NOT_APPLICABLE, q)
    details = (a, b)
    if b[0] == 2 and a[1] == 1:
        return Trichotomy(MERSENNE_PAIR, q, details=details)
    if q == 8:
        return Trichotomy(EIGHT_NINE, q, details=details)
    if a[0] == 2 and b[1] == 1 and is_fermat_prime(q + 1):
        return Trichotomy(FERMAT_PAIR, q, m=fermat_exponent(q + 1), details=details)
    raise ArithmeticError(f"consecutive prime powers {q}, {q + 1} fit no known case")


@dataclass
class ConsecutiveScan:
    """All q in [lo, hi] with q and q+1 both prime powers, grouped by case."""

    lo: int
    hi: int
    by_case: dict[str, list[int]]
    anomalies: list[int]

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "by_case": self.by_case, "anomalies": self.anomalies}


def scan_consecutive(hi: int, lo: int = 2) -> ConsecutiveScan:
    """Decompose every n in [lo, hi+1] and test the three cases independently.

    No parity shortcut is taken, so the scan is an independent check of
    :func:`classify_consecutive`.  A q matching zero or several cases, or on
    which the classifier disagrees, is an anomaly.
    """
    decomp = {n: prime_power_decompose(n) for n in range(lo, hi + 2)}
    by_case: dict[str, list[int]] = {MERSENNE_PAIR: [], EIGHT_NINE: [], FERMAT_PAIR: []}
    anomalies = []
    for q in range(lo, hi + 1):
        a, b = decomp[q], decomp[q + 1]
        if a is None or b is None:
            continue
        hits = []
        if a[1] == 1 and b[0] == 2:
            hits.append(MERSENNE_PAIR)
        if (a, b) == ((2, 3), (3, 2)):
            hits.append(EIGHT_NINE)
        if a[0] == 2 and is_fermat_prime(q + 1):
            hits.append(FERMAT_PAIR)
        try:
            agreed = classify_consecutive(q).outcome == (hits[0] if len(hits) == 1 else None)
        except ArithmeticError:
            agreed = False
        if len(hits) != 1 or not agreed:
            anomalies.append(q)
            continue
        by_case[hits[0]].append(q)
    return ConsecutiveScan(lo, hi, by_case, anomalies)
