# %% [markdown]
# # Structured families
#
# ## 2p and Sophie Germain primes

# %%
from totients import (
    classify_2_3k,
    classify_2k_p,
    classify_2p,
    classify_2pk,
    factorial_witness,
    inverse_phi,
    min_power2_exponent,
    odd_doubles_in_image,
    phi,
    pow2_preimage,
    s_set,
    sophie_scan,
)

scan = sophie_scan(50)
print("Sophie Germain:", scan.sophie_germain)
print("2p in image:   ", scan.image_members)
print("2p not:        ", scan.nonimage_members)
print(classify_2p(7))

# %% [markdown]
# When 2p + 1 is prime and p >= 5 the preimage is exactly {2p + 1, 4p + 2}.

# %%
for p in scan.sophie_germain[2:]:
    print(p, inverse_phi(2 * p))

# %% [markdown]
# ## Multiplying by powers of two
#
# 2p + 1 may be composite while 2^l p + 1 is prime for a larger l; from that
# l onwards 2^k p is a totient.

# %%
for p in (7, 17, 31):
    print(p, min_power2_exponent(p, 20))
print(classify_2k_p(5, 3))

# %% [markdown]
# ## 2p^k

# %%
for p, k in ((5, 1), (5, 2), (11, 1), (11, 3), (7, 1)):
    v = classify_2pk(p, k)
    print(f"2*{p}^{k} = {v.target}: {v.in_image} ({v.reason})")
print(classify_2_3k(3))

# %% [markdown]
# ## Powers of two and Fermat primes
#
# An odd preimage of 2^k is the product of the Fermat primes picked out by
# the binary digits of k, so it exists for k < 32 and fails at 32.

# %%
for k in (1, 3, 5, 16, 31, 32, 33):
    r = pow2_preimage(k)
    print(k, r.odd_count, r.odd_witness, r.bound)

# %% [markdown]
# ## Factorials

# %%
for n in range(0, 11):
    v = factorial_witness(n)
    print(n, v.target, v.witness, phi(v.witness) == v.target, v.odd_exponents)

# %% [markdown]
# ## Nontotients from arithmetic progressions
#
# Primes q = (p - 1)/2 (mod p) above (p - 1)/2 give 2q + 1 a proper multiple
# of p, so 2q is never a totient.

# %%
for p in (3, 5, 7):
    fam = s_set(p, 60)
    print(p, fam.members, fam.doubles)

# %%
print(odd_doubles_in_image(40))
