"""
The Delta + 1 base case
=======================

Leaves of the recursion are colored by Vizing fans.  The palette is always
max degree + 1, which is optimal up to one color.
"""

from chroma import GenSpec, check_proper, generate, invert_cd_path, max_degree, vizing_color

# Odd cycles need three colors; Delta + 1 = 3 is exactly enough.
c5 = generate(GenSpec("cycle", 5)).graph
col = vizing_color(c5)
print("C5 colors", col.colors(), "palette", col.palette)

# Complete graphs of even order are class one, but the base case only
# promises Delta + 1.
k8 = generate(GenSpec("complete", 8)).graph
col = vizing_color(k8)
print("K8 max color", col.max_color(), "delta", max_degree(k8), check_proper(k8, col).line())

# Alternating paths are the key move inside the fan procedure.  Swapping the
# two colors along a maximal path keeps the coloring proper.
g = generate(GenSpec("gnm", 60, 300, seed=5)).graph
col = vizing_color(g)
a, b = 1, 2
v = next(v for v in range(g.n) if (col.edge_at(v, a) is None) != (col.edge_at(v, b) is None))
path = invert_cd_path(col, v, a, b)
print(f"swapped {a}/{b} along {len(path)} edges from vertex {v}:", check_proper(g, col).line())
