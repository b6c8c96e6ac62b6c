# %% [markdown]
# # Exact answers on small graphs
#
# The backtracking search decides whether a graph has an interval
# t-coloring.  On small graphs it settles the largest and smallest t
# exactly, which the constructions alone cannot do.

# %%
from intcol import complete_graph, hypercube_graph
from intcol.search import SearchBudget, exact_W, exact_w, find_interval_coloring

budget = SearchBudget(seconds=60)
for g in (complete_graph(4), complete_graph(6), hypercube_graph(2), hypercube_graph(3)):
    hi = exact_W(g, budget)
    lo = exact_w(g, budget)
    print(f"{g.family.label()}: w={lo.value} W={hi.value} ({hi.nodes} nodes)")

# %% [markdown]
# Odd complete graphs have no interval coloring at all.  The search proves
# this for every t up to the general upper bound.

# %%
for p in (3, 5):
    g = complete_graph(p)
    statuses = {t: find_interval_coloring(g, t, budget).status.value for t in range(1, 2 * p - 3)}
    print(f"K_{p}:", statuses)

# %% [markdown]
# The K_6 7-coloring is the base that feeds the K_{12}, K_{24}, ... towers.

# %%
out = find_interval_coloring(complete_graph(6), 7, budget)
print(out.status.value, out.stats())
print(dict(zip(out.coloring.graph.edges, out.coloring.colors)))
