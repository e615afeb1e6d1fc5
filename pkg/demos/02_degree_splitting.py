"""
Splitting degrees in half
=========================

An Euler split labels every edge 1 or -1 so that each vertex sees nearly as
many of one label as the other.  The oriented variant keeps in-degrees and
out-degrees balanced separately.
"""

from collections import Counter

from chroma import (
    GenSpec,
    check_ad_decomposition,
    check_discrepancy,
    degree_split,
    forests_decomposition_orientation,
    generate,
    ad_paths_decomposition,
    oriented_degree_split,
)

g = generate(GenSpec("gnm", 200, 1500, seed=3)).graph

p = degree_split(g)
print("sides", len(p.side1), len(p.side2), "of", g.m)
# Per-vertex |#1 - #(-1)| never exceeds 2.
print("discrepancy profile", sorted(Counter(p.discrepancy(v) for v in range(g.n)).items()))
print(check_discrepancy(g, p, 2).line())

# With a fixed orientation, edges are first cut into alternating-directions
# paths: inside a path every vertex has one edge in and one edge out, or both
# edges pointing the same way.
mu = forests_decomposition_orientation(g).orientation
d = ad_paths_decomposition(g, mu)
print(len(d.paths), "AD paths,", sum(q.is_cycle for q in d.paths), "closed")
print(check_ad_decomposition(g, mu, d).line())

# Alternating labels along each path bound both in- and out-discrepancy by 1.
op = oriented_degree_split(g, mu)
print("worst in/out discrepancy",
      max(op.in_discrepancy(v) for v in range(g.n)),
      max(op.out_discrepancy(v) for v in range(g.n)))
print(check_discrepancy(g, op, 1, oriented=True).line())
