# %% [markdown]
# # The Pell equation behind a pair
#
# T_n T_m - 1 = r^2 is x^2 - n(n+1) y^2 = -(n(n+1) + 16) with x = 4r and
# y = 2m + 1. Fundamental solutions sit in a small box; the unit
# (2n+1, 2) generates the rest.

# %%
from itertools import islice

from triangular_dtuples import fundamental_bounds, fundamental_solutions, make_problem, solution_classes
from triangular_dtuples.pell import iter_class, positive_solutions

for n in (1, 4, 25, 100):
    p = make_problem(n, -1)
    print(f"n={n:>3}  D={p.D:>5}  N={p.N:>6}  box={fundamental_bounds(p)}  "
          f"candidates={[tuple(f) for f in fundamental_solutions(p)]}")

# %% [markdown]
# For n = 4 the candidates (-12, 3) and (12, 3) give one class; n = 25
# has two distinct classes.

# %%
for n in (4, 25):
    p = make_problem(n, -1)
    for c in solution_classes(p):
        print(n, tuple(c.fundamental), positive_solutions(c, 10**6))

# %% [markdown]
# Terms grow by a factor of about 4n+2 per step; ints stay exact.

# %%
p = make_problem(148, -1)
c = solution_classes(p)[0]
for k, (x, y) in enumerate(islice(iter_class(c), 8)):
    assert x * x - p.D * y * y == p.N
    print(k, len(str(y)), "digits")
