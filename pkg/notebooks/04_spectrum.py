# %% [markdown]
# # Every t between the extremes
#
# On a regular graph an interval t-coloring with t > degree can be turned
# into a (t-1)-coloring by recoloring the edges of color t.  Starting from
# the tower coloring this walks down to t = degree, so every value in
# between is reachable.

# %%
from intcol import build_hypercube_tower, spectrum_colorings, verify_interval
from intcol.constructions import complete_tower_from_k2

for top in (complete_tower_from_k2(4)[0], build_hypercube_tower(4)[0]):
    chain = spectrum_colorings(top)
    assert all(verify_interval(top.graph, c) for c in chain)
    print(top.graph.family.label(), [c.t for c in chain])

# %% [markdown]
# The number of edges of each color shrinks at the top of the range.

# %%
from collections import Counter

top = build_hypercube_tower(3)[0]
for c in spectrum_colorings(top):
    counts = Counter(c.colors)
    print(c.t, [counts[k] for k in range(1, c.t + 1)])
