# %% [markdown]
# # D(a) for other a
#
# The same construction works for any nonzero a: solve
# x^2 - n(n+1) y^2 = 16a - n(n+1) and keep classes with x = 4r, y = 2m + 1.
# When 16a > n(n+1) the right-hand side is positive and a different box
# applies.

# %%
from triangular_dtuples import build_triples, make_problem, solution_classes, triangular_classes
from triangular_dtuples.errors import NoPairsError

for n, a in [(1, -2), (2, 2), (3, 4), (5, -1)]:
    p = make_problem(n, a)
    all_classes = [tuple(c.fundamental) for c in solution_classes(p)]
    usable = [tuple(c.fundamental) for c in triangular_classes(p)]
    print(f"n={n} a={a:+d} N={p.N:+d} classes={all_classes} usable={usable}")
    try:
        for rep in build_triples(n, a, 3):
            print("   ", rep.indices, [r for _, _, r in rep.pair_results])
    except NoPairsError as exc:
        print("   ", exc)
