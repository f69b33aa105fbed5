"""Exact integer arithmetic: primality, factorization, divisors, Fermat numbers.

All public integers are limited to an unsigned 64-bit word.  Operations whose
contract allows an overflow raise :class:`OverflowError` rather than silently
producing a larger value.
"""
from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Iterator

import numpy as np

from .errors import DomainError

WORD_BITS = 64
WORD_MAX = (1 << WORD_BITS) - 1

# Miller-Rabin with the first twelve prime bases is exact below this value.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_EXACT_LIMIT = 318_665_857_834_031_151_167_461

_TRIAL_LIMIT = 1000


def check_word(value: int, what: str = "value") -> int:
    """Return ``value`` unchanged, or raise OverflowError if it exceeds the word."""
    if value > WORD_MAX:
        raise OverflowError(f"{what} = {value} exceeds the {WORD_BITS}-bit integer width")
    return value


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise DomainError("gcd is defined here for non-negative integers")
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def prime_sieve(limit: int) -> np.ndarray:
    """Primes <= limit as an int64 array (sieve of Eratosthenes)."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    mask[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if mask[p]:
            mask[p * p :: 2 * p] = False
    return np.flatnonzero(mask).astype(np.int64)


def primes_up_to(limit: int) -> list[int]:
    return prime_sieve(limit).tolist()


_SMALL_PRIMES: tuple[int, ...] = tuple(primes_up_to(_TRIAL_LIMIT))


def _strong_probable_prime(n: int, base: int, d: int, s: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Exact for every n below 3.18e23, which covers the whole 64-bit range with
    room to spare (``2**64 + 1`` and similar edge values).  Larger inputs raise
    OverflowError instead of returning a probabilistic answer.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:25]:
        if n % p == 0:
            return n == p
    if n < 10_000:
        return True
    if n >= _MR_EXACT_LIMIT:
        raise OverflowError(f"{n} is beyond the deterministic primality range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return all(_strong_probable_prime(n, a, d, s) for a in _MR_BASES)


def _brent_rho(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite n."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization: ``value == prod(p**e for p, e in factors)``.

    Primes are strictly increasing and every exponent is at least one; the
    factorization of 1 is empty.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def factorize(n: int) -> Factorization:
    """Factor n >= 1 by trial division, then Brent's rho on the cofactor."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    counts: dict[int, int] = {}
    rest = n
    for p in _SMALL_PRIMES:
        if p * p > rest:
            break
        while rest % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rest //= p
    if rest > 1:
        # fixed seed keeps factorize deterministic and free of shared state
        rng = random.Random(rest)
        stack = [rest]
        while stack:
            k = stack.pop()
            if k < _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(k):
                counts[k] = counts.get(k, 0) + 1
                continue
            d = _brent_rho(k, rng)
            stack.extend((d, k // d))
    return Factorization(n, tuple(sorted(counts.items())))


def divisors(f: Factorization | int) -> list[int]:
    """All divisors of ``f`` in increasing order."""
    if not isinstance(f, Factorization):
        f = factorize(f)
    powers = [[p**i for i in range(e + 1)] for p, e in f.factors]
    out = [math.prod(combo) for combo in _cartesian(*powers)]
    out.sort()
    return out


class Primality(str, enum.Enum):
    PRIME = "prime"
    COMPOSITE = "composite"
    UNKNOWN = "unknown"


# F_5 .. F_12 are known composite; nothing is asserted beyond index 12.
_FERMAT_COMPOSITE_INDICES = frozenset(range(5, 13))


@dataclass(frozen=True)
class FermatStatus:
    index: int
    value: int
    primality: Primality


def fermat_primality(i: int) -> Primality:
    """Primality of F_i without materializing it (status table beyond F_5)."""
    if i < 0:
        raise DomainError("Fermat index must be non-negative")
    if i <= 4:
        return Primality.PRIME
    if i in _FERMAT_COMPOSITE_INDICES:
        return Primality.COMPOSITE
    return Primality.UNKNOWN


def fermat_number(i: int) -> FermatStatus:
    """F_i = 2**(2**i) + 1 with its primality; only F_0 .. F_5 fit the word."""
    if i < 0:
        raise DomainError("Fermat index must be non-negative")
    if (1 << i) >= WORD_BITS:
        raise OverflowError(f"F_{i} exceeds the {WORD_BITS}-bit integer width")
    value = (1 << (1 << i)) + 1
    primality = Primality.PRIME if is_prime(value) else Primality.COMPOSITE
    return FermatStatus(i, value, primality)


def primes_in_ap(a: int, n: int, bound: int) -> list[int]:
    """Primes p <= bound with p = a (mod n), in increasing order."""
    if n < 1:
        raise DomainError("modulus must be positive")
    if math.gcd(a, n) != 1:
        raise DomainError(f"gcd({a}, {n}) != 1: progression holds at most one prime")
    ps = prime_sieve(bound)
    return ps[ps % n == a % n].tolist()
