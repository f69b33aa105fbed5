# %% [markdown]
# # Euler's totient
#
# `phi` factors n and multiplies p^(a-1) (p - 1) over its prime powers;
# `brute_phi` counts coprime residues directly.  Both agree, and the
# elementary laws can be checked over whole ranges.

# %%
import math

from totients import brute_phi, factorize, phi

for n in (1, 2, 3, 4, 12, 33, 81):
    print(f"phi({n}) = {phi(n)}   brute = {brute_phi(n)}   {factorize(n)}")

# %% [markdown]
# Every value from n = 3 on is even, so the image is 1 and even numbers.

# %%
print(sorted({phi(n) for n in range(1, 200)})[:25])
print(all(phi(n) % 2 == 0 for n in range(3, 10_000)))

# %% [markdown]
# Multiplying by a prime p scales phi by p - 1 or by p, depending on
# whether p already divides m.  Doubling leaves phi unchanged exactly for odd m.

# %%
m = 45
for p in (2, 3, 5, 7):
    rule = p if m % p == 0 else p - 1
    print(p, phi(p * m), rule * phi(m))
print([m for m in range(1, 30) if phi(2 * m) == phi(m)])

# %%
a, b = 64, 81
print(math.gcd(a, b), phi(a * b), phi(a) * phi(b))
