# %% [markdown]
# # From a pair to infinitely many triples
#
# Consecutive indices m_k, m_{k+1} from one solution class pair with each
# other as well as with n, so {T_n, T_{m_k}, T_{m_{k+1}}} is a D(-1)-triple.
# The new root is (2 m_k m_{k+1} + m_k + m_{k+1} - n) / 4.

# %%
from triangular_dtuples import build_triples, check_tuple, closed_form_root

for rep in build_triples(1, -1, 5):
    n, m1, m2 = rep.indices
    print(rep.indices, "roots", [r for _, _, r in rep.pair_results], "closed form", closed_form_root(n, m1, m2))

# %%
for rep in build_triples(148, -1, 6):
    print(rep.indices[1:], rep.is_valid)

# %% [markdown]
# A classic D(1)-triple family for comparison.

# %%
print(all(check_tuple({n, n + 4, 4 * n * n + 20 * n + 8}, 1).is_valid for n in range(1, 200)))
