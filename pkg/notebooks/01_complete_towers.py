# %% [markdown]
# # Interval colorings of even complete graphs
#
# The round-robin schedule gives every K_{2n} an interval coloring with
# 2n - 1 colors, one per round.  Doubling a coloring of K_{2m} into one of
# K_{4m} adds 4m - 1 colors, so repeated doubling from a small base gives a
# lot more colors than the round-robin schedule.

# %%
from intcol import canonical_complete_coloring, verify_interval
from intcol.constructions import FactorizationParams, build_complete_tower, complete_tower_from_k2, double_complete

c = canonical_complete_coloring(2)
print("K_4 round robin:", dict(zip(c.graph.edges, c.colors)))
print(verify_interval(c.graph, c).message)

# %% [markdown]
# One doubling step from K_2 (a single edge with color 1) to K_4.

# %%
k2 = canonical_complete_coloring(1)
k4 = double_complete(k2)
print("K_4 doubled:", dict(zip(k4.graph.edges, k4.colors)), "t =", k4.t)

# %% [markdown]
# Towers for n = 2^q start from K_2.  The table compares the reached number
# of colors with the round-robin count.

# %%
print(f"{'graph':>6} {'round robin':>12} {'tower':>6}")
for q in range(1, 6):
    n = 2 ** q
    top, trace = complete_tower_from_k2(n)
    assert verify_interval(top.graph, top)
    print(f"{'K_' + str(2 * n):>6} {2 * n - 1:>12} {top.t:>6}")

# %% [markdown]
# For n = p * 2^q with p odd, the tower needs a base coloring of K_{2p}
# with 3p - 2 colors.  Without one, the round-robin base still works and
# gives fewer colors.

# %%
for n in (3, 5, 6, 10, 12):
    params = FactorizationParams.of(n)
    base = canonical_complete_coloring(params.p)
    top, _ = build_complete_tower(n, base)
    print(f"K_{2 * n}: p={params.p} q={params.q} canonical base -> t={top.t}, "
          f"with a (3p-2) base -> {params.complete_lower_bound}")
