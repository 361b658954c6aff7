"""
Contact graphs and tree-width
=============================

Min-fill elimination gives an upper bound on tree-width together with a
tree decomposition that can be checked independently.
"""

# %%
import itertools

from cpdtw import Graph, min_fill_ordering, normalized_width, tree_decomposition_from_order
from cpdtw.graphs import format_decomposition

grid = [(r * 4 + c, r * 4 + c + 1) for r in range(4) for c in range(3)]
grid += [(r * 4 + c, (r + 1) * 4 + c) for r in range(3) for c in range(4)]
g = Graph.from_edges(16, grid)

eo = min_fill_ordering(g)
print("4x4 grid width:", eo.width, "(exact value is 4)")
print("normalized:", round(normalized_width(eo.width, g.n_vertices), 3))

# %%
td = tree_decomposition_from_order(g, eo.order)
print("decomposition valid:", td.is_valid(g), "| bags:", len(td.bags))
print(format_decomposition(td)[:300])

# %%
# Cliques are the worst case: every elimination order has width n - 1.
for n in (4, 7, 10):
    k = Graph.from_edges(n, itertools.combinations(range(n), 2))
    print(f"K{n}: width {min_fill_ordering(k).width}")

# %%
# For a real structure, residues become vertices and an edge joins two
# residues whose closest heavy atoms are under 8 Angstrom apart:
#
# .. code-block:: python
#
#     from cpdtw import build_contact_graph, read_pdb
#     g = build_contact_graph(read_pdb("1xaw.pdb"), cutoff=8.0)
