"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class UnknownStatusError(LookupError):
    """A Fermat number's primality is needed but not known."""


class InvariantViolation(RuntimeError):
    """A proven identity failed to hold; indicates a bug, never expected."""


class LehmerCandidateWarning(UserWarning):
    """A composite n with phi(n) | n - 1 turned up in a preimage."""
