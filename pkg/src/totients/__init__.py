"""Euler's totient function: its image, preimages and structured families."""
from .arith import (
    WORD_MAX,
    FermatStatus,
    Factorization,
    Primality,
    divisors,
    factorize,
    fermat_number,
    fermat_primality,
    gcd,
    is_prime,
    primes_in_ap,
)
from .errors import DomainError, InvariantViolation, LehmerCandidateWarning, UnknownStatusError
from .families import (
    FactorialVerdict,
    Family,
    FamilyVerdict,
    NonimageFamily,
    Pow2Preimage,
    SophieScan,
    classify_2_3k,
    classify_2k_p,
    classify_2p,
    classify_2pk,
    factorial_witness,
    is_carmichael,
    min_power2_exponent,
    no_carmichael_2p1,
    odd_doubles_in_image,
    pow2_preimage,
    s_set,
    safe_prime_residue_check,
    sophie_scan,
)
from .gupta import GuptaBound, TableRow, admissible_primes, bound_table, gupta_bound, scan_preimage
from .inverse import PreimageReport, inverse_phi, lehmer_search, preimage_report
from .totient import TotientValue, brute_phi, phi, phi_prime_power, totient_sieve

__version__ = "0.1.0"
