"""Membership results for structured families of even numbers.

Covers 2p, 2^k p, 2p^k and 2*3^k, powers of two (through Fermat primes),
factorials, the nontotient families S(p), Sophie Germain scans and the
Korselt criterion for numbers 2p + 1.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import (
    Primality,
    check_word,
    factorize,
    fermat_primality,
    is_prime,
    primes_in_ap,
    primes_up_to,
)
from .errors import DomainError, InvariantViolation, UnknownStatusError
from .totient import phi


class Family(str, enum.Enum):
    TWO_P = "two_p"
    TWO_K_P = "two_k_p"
    TWO_P_POW_K = "two_p_pow_k"
    POW2 = "pow2"
    FACTORIAL = "factorial"


@dataclass(frozen=True)
class FamilyVerdict:
    target: int
    family: Family
    in_image: bool
    witness: int | None
    reason: str

    def __post_init__(self):
        if self.in_image and self.witness is None:
            raise InvariantViolation(f"{self.target} declared a totient without a witness")


def _require_prime(p: int, what: str = "p") -> None:
    if not is_prime(p):
        raise DomainError(f"{what} = {p} is not prime")


def classify_2p(p: int) -> FamilyVerdict:
    """2p is a totient exactly when 2p + 1 is prime."""
    _require_prime(p)
    q = 2 * p + 1
    if is_prime(q):
        return FamilyVerdict(2 * p, Family.TWO_P, True, q, f"2p+1 = {q} prime")
    return FamilyVerdict(2 * p, Family.TWO_P, False, None, f"2p+1 = {q} composite")


def classify_2k_p(p: int, k: int) -> FamilyVerdict:
    """2^k p with 2p + 1 prime, witnessed by 2^k (2p + 1)."""
    _require_prime(p)
    if k < 1:
        raise DomainError("k must be at least 1")
    q = 2 * p + 1
    if not is_prime(q):
        raise DomainError(f"2p+1 = {q} is composite; 2^k p is not covered")
    witness = check_word((1 << k) * q, "2^k(2p+1)")
    return FamilyVerdict(p << k, Family.TWO_K_P, True, witness,
                         f"phi(2^{k}) * phi({q}) = 2^{k - 1} * {2 * p}")


def classify_2pk(p: int, k: int) -> FamilyVerdict:
    """2p^k for an odd prime p != 3 and k >= 1.

    In the image iff 2p^k + 1 is prime; a prime 2p^k + 1 forces
    2p^k + 1 = 3 (mod 4) and k odd, which is checked on every positive answer.
    k = 0 is rejected: 2 = phi(3) is a totient without meeting those conditions.
    """
    _require_prime(p)
    if p in (2, 3):
        raise DomainError(f"p = {p} is excluded (p must be an odd prime other than 3)")
    if k < 1:
        raise DomainError("k must be at least 1")
    q = check_word(2 * p**k + 1, "2p^k+1")
    target = q - 1
    if not is_prime(q):
        return FamilyVerdict(target, Family.TWO_P_POW_K, False, None, f"2p^k+1 = {q} composite")
    if q % 4 != 3 or k % 2 == 0:
        raise InvariantViolation(f"2*{p}^{k}+1 = {q} prime but fails q = 3 mod 4 / k odd")
    return FamilyVerdict(target, Family.TWO_P_POW_K, True, q, f"2p^k+1 = {q} prime, = 3 mod 4, k odd")


def classify_2_3k(k: int) -> FamilyVerdict:
    """2 * 3^k = phi(3^(k+1)) for every k >= 0."""
    if k < 0:
        raise DomainError("k must be non-negative")
    witness = check_word(3 ** (k + 1), "3^(k+1)")
    return FamilyVerdict(2 * 3**k, Family.TWO_P_POW_K, True, witness, f"phi(3^{k + 1}) = 2*3^{k}")


def min_power2_exponent(p: int, max_l: int) -> int | None:
    """Smallest 1 <= l <= max_l with 2^l p + 1 prime, or None."""
    _require_prime(p)
    if p == 2:
        raise DomainError("p must be odd")
    if max_l < 1:
        raise DomainError("max_l must be at least 1")
    check_word((p << max_l) + 1, "2^max_l p + 1")
    for l in range(1, max_l + 1):
        if is_prime((p << l) + 1):
            return l
    return None


@dataclass(frozen=True)
class Pow2Preimage:
    k: int
    odd_count: int
    odd_witness: int | None
    bound: Fraction


def _fermat_value(i: int) -> int:
    return (1 << (1 << i)) + 1


def pow2_preimage(k: int) -> Pow2Preimage:
    """Odd part of phi^{-1}(2^k) and the bound A(2^k).

    An odd n with phi(n) = 2^k must be the product of distinct Fermat primes
    F_i, one for each set bit i of k, so there is at most one.  Raises
    :class:`UnknownStatusError` when a Fermat number whose status matters is
    not known to be prime or composite.
    """
    if k < 1:
        raise DomainError("k must be at least 1")
    bits = [i for i in range(k.bit_length()) if k >> i & 1]
    status = {i: fermat_primality(i) for i in bits}
    if Primality.COMPOSITE in status.values():
        odd_count, witness = 0, None
    elif Primality.UNKNOWN in status.values():
        unknown = [i for i, s in status.items() if s is Primality.UNKNOWN]
        raise UnknownStatusError(f"primality of F_{unknown[0]} is unknown")
    else:
        odd_count, witness = 1, math.prod(_fermat_value(i) for i in bits)

    # F_n - 1 = 2^(2^n) divides 2^k exactly when 2^n <= k
    bound = Fraction(1 << (k + 1))
    for n in range(k.bit_length()):
        s = fermat_primality(n)
        if s is Primality.UNKNOWN:
            raise UnknownStatusError(f"A(2^{k}) needs the primality of F_{n}")
        if s is Primality.PRIME:
            f = _fermat_value(n)
            bound *= Fraction(f, f - 1)
    return Pow2Preimage(k, odd_count, witness, bound)


@dataclass(frozen=True)
class FactorialVerdict(FamilyVerdict):
    """Verdict for n! plus the exponents of n! = 2^a * prod p^a_p (p - 1)."""

    two_exponent: int = 0
    odd_exponents: dict[int, int] = field(default_factory=dict)


def _legendre(n: int, p: int) -> int:
    e, q = 0, p
    while q <= n:
        e += n // q
        q *= p
    return e


def factorial_witness(n: int) -> FactorialVerdict:
    """A preimage of n!, built from its decomposition over odd primes <= n."""
    if n < 0:
        raise DomainError("n must be non-negative")
    target = check_word(math.factorial(n), f"{n}!")
    if n < 2:
        return FactorialVerdict(target, Family.FACTORIAL, True, 1, "phi(1) = 1")

    odd_primes = primes_up_to(n)[1:]
    shifts: dict[int, int] = {}
    for p in odd_primes:
        for q, e in factorize(p - 1):
            shifts[q] = shifts.get(q, 0) + e
    alpha = _legendre(n, 2) - shifts.get(2, 0)
    exps = {p: _legendre(n, p) - shifts.get(p, 0) for p in odd_primes}
    if alpha < 0 or any(a < 1 for a in exps.values()):
        raise InvariantViolation(f"decomposition of {n}! has a bad exponent: {alpha}, {exps}")

    witness = 1 << (alpha + 1)
    for p, a in exps.items():
        witness *= p ** (a + 1)
    check_word(witness, f"witness for {n}!")
    if phi(witness) != target:
        raise InvariantViolation(f"phi({witness}) != {n}!")
    return FactorialVerdict(
        target, Family.FACTORIAL, True, witness,
        f"phi(2^{alpha + 1} * prod p^(a_p + 1)) = {n}!",
        two_exponent=alpha, odd_exponents=exps,
    )


@dataclass(frozen=True)
class NonimageFamily:
    """Primes q = (p-1)/2 (mod p), q > (p-1)/2, whose doubles 2q are nontotients."""

    p: int
    members: tuple[int, ...]
    doubles: tuple[int, ...]
    congruence_check: tuple[bool, ...]


def s_set(p: int, bound: int) -> NonimageFamily:
    """Members of S(p) up to ``bound``.

    For q = (p-1)/2 + jp with j >= 1, 2q + 1 = p(1 + 2j) is composite, so
    2q is not a totient.  q = (p-1)/2 itself is left out since there 2q + 1 = p.
    """
    _require_prime(p)
    if p == 2:
        raise DomainError("p must be an odd prime")
    r = (p - 1) // 2
    members = [q for q in primes_in_ap(r, p, bound) if q > r]
    for q in members:
        if (2 * q + 1) % p or is_prime(2 * q + 1):
            raise InvariantViolation(f"2*{q}+1 should be a proper multiple of {p}")
    doubles = tuple(2 * q for q in members)
    return NonimageFamily(p, tuple(members), doubles, tuple(d % p == p - 1 for d in doubles))


@dataclass(frozen=True)
class SophieScan:
    sophie_germain: list[int]
    safe: list[int]
    image_members: list[int]
    nonimage_members: list[int]


def sophie_scan(bound: int) -> SophieScan:
    """Split the primes p <= bound by whether 2p is a totient."""
    if bound < 2:
        raise DomainError("bound must be at least 2")
    ps = primes_up_to(bound)
    sg = [p for p in ps if is_prime(2 * p + 1)]
    sg_set = set(sg)
    return SophieScan(
        sophie_germain=sg,
        safe=[2 * p + 1 for p in sg],
        image_members=[2 * p for p in sg],
        nonimage_members=[2 * p for p in ps if p not in sg_set],
    )


def safe_prime_residue_check(q: int) -> bool:
    """A safe prime is 5 or congruent to 3 mod 4."""
    if not (is_prime(q) and q > 3 and is_prime((q - 1) // 2)):
        raise DomainError(f"{q} is not a safe prime")
    return q == 5 or q % 4 == 3


def odd_doubles_in_image(bound: int) -> list[int]:
    """Odd s = (p - 1)/2 for primes p = 3 (mod 4), p <= bound; 2s = phi(p)."""
    return [(p - 1) // 2 for p in primes_in_ap(3, 4, bound)]


def is_carmichael(n: int) -> bool:
    """Korselt: composite, square-free, and (q - 1) | (n - 1) for all q | n."""
    if n < 2:
        raise DomainError("n must be at least 2")
    if is_prime(n):
        return False
    f = factorize(n)
    return all(e == 1 and (n - 1) % (q - 1) == 0 for q, e in f)


def no_carmichael_2p1(bound: int) -> bool:
    """True when no 2p + 1 with p <= bound prime is a Carmichael number."""
    return not any(is_carmichael(2 * p + 1) for p in primes_up_to(bound))
