# %% [markdown]
# # Bounding and enumerating preimages
#
# Every n with phi(n) = m lies in (m, A(m)] and only uses primes p with
# (p - 1) | m.  The bound can be fractional.

# %%
from totients import bound_table, gupta_bound, inverse_phi, preimage_report, scan_preimage
from totients.render import display

for row in bound_table():
    cell = "-" if row.phi_of_bound is None else row.phi_of_bound
    print(f"{row.m:>3}  {display(row.bound):>6}  {cell}")

# %% [markdown]
# A is not monotone: A(12) > A(14).  And 14 has an empty preimage.

# %%
print(gupta_bound(12).value > gupta_bound(14).value)
print(gupta_bound(14).admissible_primes, scan_preimage(14))

# %% [markdown]
# Two independent routes to phi^-1(m): scanning the bounded window with a
# sieve, and assembling admissible prime powers.

# %%
for m in (1, 2, 4, 6, 8, 12, 28, 240):
    built, scanned = inverse_phi(m), scan_preimage(m)
    assert built == scanned
    print(m, built)

# %%
bad = [m for m in range(2, 3001, 2) if inverse_phi(m) != scan_preimage(m)]
print("disagreements up to 3000:", bad)

# %% [markdown]
# Nontotients among the first even numbers.

# %%
print([m for m in range(2, 200, 2) if not inverse_phi(m)])

# %%
r = preimage_report(4)
print(r.elements, r.odd_count, r.even_count, r.residue_classes, r.lehmer_candidates)
