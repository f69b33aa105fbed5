import math

import pytest

from totients import brute_phi

ACCEPTANCE_LINES: list[str] = []


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


@pytest.fixture(scope="session")
def brute_table():
    """brute_phi(n) for n <= 13000, indexed by n (entry 0 unused)."""
    return [0] + [brute_phi(n) for n in range(1, 13001)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
