"""
Graphs, generators and the text formats
=======================================

Graphs are immutable and simple.  Edge ids follow input order, and every
pair is stored low end first.
"""

from chroma import GenSpec, build_graph, generate, max_degree, parse_edge_list, write_edge_list

# A 4-cycle given out of order; (3, 0) is stored as (0, 3).
g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
print(g, g.edges, "max degree", max_degree(g))

# Generators are seeded with SplitMix64, so the same spec always gives the
# same graph on every platform.
a = generate(GenSpec("gnm", 50, 120, seed=7)).graph
b = generate(GenSpec("gnm", 50, 120, seed=7)).graph
print("gnm reproducible:", a == b)

# forest-union overlays k random spanning trees and certifies arboricity <= k.
fu = generate(GenSpec("forest-union", 30, 3, seed=1))
print(fu.graph, "arboricity bound", fu.arboricity_bound, "layer sizes", [len(x) for x in fu.layers])

# Edge-list files round-trip exactly.
text = write_edge_list(g)
print(text, end="")
assert parse_edge_list(text) == g
