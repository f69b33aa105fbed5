"""Euler's totient: product formula, prime powers, a definition-based oracle."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import check_word, factorize, is_prime, prime_sieve
from .errors import DomainError


@dataclass(frozen=True)
class TotientValue:
    n: int
    phi: int


def phi(n: int) -> int:
    """Euler's totient via the factorization of n."""
    if n < 1:
        raise DomainError(f"phi is defined for positive integers, got {n}")
    return math.prod(p ** (e - 1) * (p - 1) for p, e in factorize(n))


def phi_prime_power(p: int, alpha: int) -> int:
    """phi(p**alpha) = p**(alpha - 1) * (p - 1)."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if alpha < 1:
        raise DomainError("exponent must be at least 1")
    check_word(p**alpha, f"{p}^{alpha}")
    return p ** (alpha - 1) * (p - 1)


def brute_phi(n: int) -> int:
    """Count of 1 <= x <= n with gcd(x, n) == 1.

    Straight from the definition; an oracle for :func:`phi`, not a fast path.
    """
    if n < 1:
        raise DomainError(f"phi is defined for positive integers, got {n}")
    xs = np.arange(1, n + 1, dtype=np.int64)
    return int(np.count_nonzero(np.gcd(xs, n) == 1))


def totient_sieve(limit: int) -> np.ndarray:
    """phi(0..limit) as an int64 array; entry 0 is 0."""
    out = np.arange(limit + 1, dtype=np.int64)
    for p in prime_sieve(limit).tolist():
        out[p::p] -= out[p::p] // p
    return out
