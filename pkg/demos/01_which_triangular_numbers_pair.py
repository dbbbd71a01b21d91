# %% [markdown]
# # Which triangular numbers sit in a D(-1)-pair?
#
# {T_n, T_m} is a D(-1)-pair when T_n * T_m - 1 is a perfect square.
# Start from T_1 = 1 and follow the partners of every index found so far.

# %%
from triangular_dtuples import admissible, brute_force_pairs, check_pair_indices, enumerate_pairs

report = enumerate_pairs(1000)
for step in report.steps:
    found = ", ".join(map(str, step.discovered)) or "none"
    print(f"seed {step.seed:>4} -> {found}")
print("indices up to 1000:", report.result)

# %% [markdown]
# Each edge carries its square root as a witness.

# %%
for w in report.step_for(4).witnesses:
    print(f"T_{w.n} * T_{w.m} - 1 = {w.r}^2")

# %% [markdown]
# The pairwise scan over all indices up to the bound gives the same set.

# %%
print(brute_force_pairs(1000) == list(report.result))

# %% [markdown]
# The factorization test on n and n+1 is necessary but not sufficient:
# n = 100 passes it, yet T_100 never pairs with another triangular number
# (it does pair with the non-triangular 5653).

# %%
print(admissible(100))
print(admissible(2).violation)
print(100 in enumerate_pairs(10**4).result)
print(any(check_pair_indices(100, m) for m in range(1, 10**5) if m != 100))
