"""
Independent verification
========================

The checkers recompute everything from the graph and the claimed output.
They return a result that is truthy on success and carries a witness on
failure.
"""

from chroma import GenSpec, check_palette, check_proper, generate, vizing_color

g = generate(GenSpec("gnm", 40, 120, seed=9)).graph
col = vizing_color(g)
print(check_proper(g, col).line(), check_palette(col, col.palette).line())

# Break the coloring on purpose: give edge 0 the color of a neighbouring edge.
u, v = g.endpoints(0)
e = next(e for e, _ in g.adjacency[u] if e != 0)
col.color[0] = col.color[e]
res = check_proper(g, col)
print(res.line())
print("witness:", res.witness)
