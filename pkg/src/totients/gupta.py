"""Gupta's upper bound on totient preimages and the scan it licenses.

If phi(n) = m with m even, every prime p dividing n has (p - 1) | m, and

    m < n <= A(m) = m * prod_{(p - 1) | m} p / (p - 1).

:func:`scan_preimage` walks that window with a segmented sieve that computes
phi and rejects any n carrying an inadmissible prime factor.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import WORD_MAX, check_word, divisors, factorize, is_prime, primes_up_to
from .errors import DomainError
from .totient import phi

SEGMENT = 1 << 16

DEFAULT_TABLE_ROWS = (1, 2, 4, 6, 8, 10, 12, 14)


@dataclass(frozen=True)
class GuptaBound:
    m: int
    admissible_primes: tuple[int, ...]
    value: Fraction

    @property
    def floor_value(self) -> int:
        return self.value.numerator // self.value.denominator

    @property
    def is_integral(self) -> bool:
        return self.value.denominator == 1


def admissible_primes(m: int) -> list[int]:
    """Primes p with (p - 1) | m: add one to each divisor and keep the primes."""
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    return [d + 1 for d in divisors(factorize(m)) if is_prime(d + 1)]


def gupta_bound(m: int) -> GuptaBound:
    if m < 1 or (m > 1 and m % 2):
        raise DomainError(f"A(m) is defined on {{1}} and the even numbers, got {m}")
    ps = admissible_primes(m)
    value = Fraction(m)
    for p in ps:
        value *= Fraction(p, p - 1)
    return GuptaBound(m, tuple(ps), value)


def _scan_segment(m: int, lo: int, hi: int, primes: list[int]) -> list[int]:
    """Members of [lo, hi] with phi(n) == m and only admissible prime factors."""
    n = np.arange(lo, hi + 1, dtype=np.uint64)
    rest = n.copy()
    tot = n.copy()
    ok = np.ones(n.size, dtype=bool)
    for p in primes:
        if p * p > hi:
            break
        first = -lo % p
        if m % (p - 1):
            ok[first::p] = False
            continue
        tot[first::p] -= tot[first::p] // np.uint64(p)
        q = p
        while q <= hi:
            rest[-lo % q :: q] //= np.uint64(p)
            q *= p
    big = rest > 1
    # whatever survives trial division is a single prime above sqrt(hi)
    ok &= ~big | (np.uint64(m) % np.where(big, rest - np.uint64(1), np.uint64(1)) == 0)
    tot[big] -= tot[big] // rest[big]
    return n[ok & (tot == np.uint64(m))].tolist()


def scan_preimage(m: int, workers: int = 1) -> list[int]:
    """phi^{-1}(m) by scanning (m, floor(A(m))].

    The window is cut into fixed segments; with ``workers > 1`` segments are
    processed on a thread pool.  The result does not depend on ``workers``.
    """
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    if m == 1:
        return [1, 2]
    if m % 2:
        return []
    hi = check_word(gupta_bound(m).floor_value, "floor(A(m))")
    primes = primes_up_to(math.isqrt(hi))
    spans = [(lo, min(lo + SEGMENT - 1, hi)) for lo in range(m + 1, hi + 1, SEGMENT)]
    if workers > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda s: _scan_segment(m, s[0], s[1], primes), spans))
    else:
        parts = [_scan_segment(m, lo, up, primes) for lo, up in spans]
    return [n for part in parts for n in part]


@dataclass(frozen=True)
class TableRow:
    m: int
    bound: Fraction
    phi_of_bound: int | None  # undefined when A(m) is not an integer


def bound_table(rows=DEFAULT_TABLE_ROWS) -> list[TableRow]:
    """(m, A(m), phi(A(m))) for each m; phi is left undefined for fractional A(m)."""
    out = []
    for m in rows:
        b = gupta_bound(m)
        out.append(TableRow(m, b.value, phi(b.floor_value) if b.is_integral else None))
    return out
