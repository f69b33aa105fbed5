from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from totients import (
    DomainError,
    admissible_primes,
    bound_table,
    factorize,
    gupta_bound,
    scan_preimage,
)


@pytest.mark.parametrize("m, expected", [(4, [2, 3, 5]), (14, [2, 3]), (1, [2])])
def test_admissible_primes(m, expected):
    assert admissible_primes(m) == expected


@pytest.mark.parametrize("m, value", [
    (1, Fraction(2)), (4, Fraction(15)), (12, Fraction(455, 8)), (14, Fraction(42)),
    (32, Fraction(255, 2)),
])
def test_gupta_bound_values(m, value):
    b = gupta_bound(m)
    assert b.value == value
    assert b.floor_value == value.numerator // value.denominator


def test_gupta_bound_rejects_odd():
    with pytest.raises(DomainError):
        gupta_bound(15)


@given(st.integers(1, 10**6).map(lambda k: 2 * k))
def test_gupta_bound_invariants(m):
    b = gupta_bound(m)
    assert b.admissible_primes[0] == 2
    assert b.value > m
    assert gcd(b.value.numerator, b.value.denominator) == 1
    expected = Fraction(m)
    for p in b.admissible_primes:
        assert m % (p - 1) == 0
        expected *= Fraction(p, p - 1)
    assert b.value == expected


@pytest.mark.parametrize("m, expected", [
    (1, [1, 2]), (2, [3, 4, 6]), (4, [5, 8, 10, 12]), (14, []), (7, []),
])
def test_scan_examples(m, expected):
    assert scan_preimage(m) == expected


def test_scan_members_respect_bound_and_filter():
    for m in range(2, 2001, 2):
        b = gupta_bound(m)
        for n in scan_preimage(m):
            assert m < n <= b.value
            assert all(m % (p - 1) == 0 for p in factorize(n).primes)
            if n % 2:
                assert n <= b.value / 2


def test_scan_matches_unfiltered_brute_force(brute_table):
    for m in range(2, 2001, 2):
        hi = gupta_bound(m).floor_value
        assert hi < len(brute_table)
        expected = [n for n in range(1, hi + 1) if brute_table[n] == m]
        assert scan_preimage(m) == expected, m


def test_scan_independent_of_workers():
    for m in (5040, 27720, 98280, 2**18):
        assert scan_preimage(m, workers=4) == scan_preimage(m)


def test_scan_overflow():
    with pytest.raises(OverflowError):
        scan_preimage(2**63)


def test_bound_table():
    rows = {r.m: (r.bound, r.phi_of_bound) for r in bound_table()}
    assert rows[12] == (Fraction(455, 8), None)
    assert rows[4] == (Fraction(15), 8)
    assert rows[10] == (Fraction(33), 20)
    # phi(42) = phi(2) phi(3) phi(7)
    assert rows[14] == (Fraction(42), 1 * 2 * 6)
