# %% [markdown]
# # Interval colorings of hypercubes
#
# Coloring each edge of Q_n by the coordinate it flips is an interval
# n-coloring.  Doubling Q_{n-1} into Q_n adds n colors, so the tower from
# Q_1 reaches n(n+1)/2 colors.

# %%
from intcol import build_hypercube_tower, dimension_coloring, hypercube_graph, verify_interval
from intcol.coloring import graph_bounds

for n in range(1, 9):
    low = dimension_coloring(n)
    top, trace = build_hypercube_tower(n)
    assert verify_interval(low.graph, low) and verify_interval(top.graph, top)
    bound = graph_bounds(hypercube_graph(n)).upper_W
    print(f"Q_{n}: dimension t={low.t:>2}  tower t={top.t:>2}  upper bound {bound:>2}")

# %% [markdown]
# The trace records each doubling step and the colors it added.

# %%
_, trace = build_hypercube_tower(5)
for step in trace:
    print(step.to_dict())
