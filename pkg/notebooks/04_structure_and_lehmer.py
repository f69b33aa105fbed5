# %% [markdown]
# # Parity, residues, Lehmer and Korselt
#
# Odd solutions of phi(n) = m double into even ones, so at most half the
# preimage is odd.  For m = 2s with s odd the split is exactly even.

# %%
from collections import Counter

from totients import inverse_phi, is_carmichael, lehmer_search, no_carmichael_2p1, preimage_report

for m in (4, 6, 8, 10, 28, 54, 2**10):
    r = preimage_report(m)
    print(f"m={m:<5} O={r.odd_count} E={r.even_count} {list(r.elements)}")

# %%
shapes = Counter()
for s in range(3, 2001, 2):
    els = inverse_phi(2 * s)
    odd = sum(n % 2 for n in els)
    shapes[odd == len(els) - odd] += 1
print(shapes)

# %% [markdown]
# Preimage elements congruent to 1 mod m: m + 1 when it is prime, and
# otherwise a composite n with phi(n) | n - 1, of which none is known.

# %%
print([(m, preimage_report(m).lehmer_candidates) for m in (4, 6, 10, 12, 16, 22)])
print(lehmer_search(10**6))

# %% [markdown]
# No 2p + 1 is a Carmichael number.

# %%
print([n for n in range(2, 3000) if is_carmichael(n)])
print(no_carmichael_2p1(10**5))
