"""Constructive inverse totient and the structure of phi^{-1}(m)."""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .arith import check_word, is_prime
from .errors import DomainError, LehmerCandidateWarning
from .gupta import GuptaBound, admissible_primes, gupta_bound
from .totient import totient_sieve


def inverse_phi(m: int) -> list[int]:
    """All n with phi(n) == m, assembled from admissible prime powers.

    Primes p with (p - 1) | m are tried largest first.  Including p**a divides
    the remaining quotient by p**(a - 1) * (p - 1); a branch succeeds when the
    quotient reaches 1.  Each prime is used at most once per branch.
    """
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    if m > 1 and m % 2:
        return []
    primes = admissible_primes(m)[::-1]
    found: set[int] = set()

    def extend(rest: int, start: int, n: int) -> None:
        if rest == 1:
            found.add(n)
        elif rest % 2:
            return  # odd quotient above 1 is never a totient
        for i in range(start, len(primes)):
            p = primes[i]
            if rest % (p - 1):
                continue
            q, pk = rest // (p - 1), p
            while True:
                extend(q, i + 1, check_word(n * pk, "preimage candidate"))
                if q % p:
                    break
                q //= p
                pk *= p

    extend(m, 0, 1)
    return sorted(found)


@dataclass(frozen=True)
class PreimageReport:
    m: int
    elements: tuple[int, ...]
    bound: GuptaBound | None
    residue_classes: dict[int, tuple[int, ...]] = field(repr=False)
    lehmer_candidates: tuple[int, ...]

    @property
    def in_image(self) -> bool:
        return bool(self.elements)

    @property
    def odd_count(self) -> int:
        return sum(n % 2 for n in self.elements)

    @property
    def even_count(self) -> int:
        return len(self.elements) - self.odd_count


def preimage_report(m: int, elements: list[int] | None = None) -> PreimageReport:
    """phi^{-1}(m) with parity counts, residues mod m and Lehmer flags.

    ``elements`` defaults to :func:`inverse_phi`; pass a precomputed preimage
    (e.g. from the scan) to describe that instead.  Any composite element
    congruent to 1 mod m would solve Lehmer's totient problem; such an
    element raises a :class:`LehmerCandidateWarning`.
    """
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    if elements is None:
        elements = inverse_phi(m)
    elements = sorted(elements)
    bound = gupta_bound(m) if m == 1 or m % 2 == 0 else None
    classes: dict[int, list[int]] = {}
    for n in elements:
        classes.setdefault(n % m, []).append(n)
    lehmer = tuple(n for n in elements if n % m == 1 % m)
    for n in lehmer:
        if n > 1 and not is_prime(n):
            warnings.warn(
                f"{n} is composite with phi({n}) = {m} dividing {n - 1}",
                LehmerCandidateWarning,
                stacklevel=2,
            )
    return PreimageReport(
        m=m,
        elements=tuple(elements),
        bound=bound,
        residue_classes={r: tuple(v) for r, v in sorted(classes.items())},
        lehmer_candidates=lehmer,
    )


def lehmer_search(bound: int) -> list[int]:
    """Composite n <= bound with phi(n) | n - 1 (none are known)."""
    if bound < 2:
        raise DomainError("bound must be at least 2")
    tot = totient_sieve(bound)
    n = np.arange(bound + 1, dtype=np.int64)
    hits = np.flatnonzero(((n[2:] - 1) % tot[2:] == 0) & (tot[2:] != n[2:] - 1)) + 2
    return hits.tolist()
