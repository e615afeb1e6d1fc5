"""
Low out-degree orientations by peeling
======================================

Repeatedly removing a minimum-degree vertex and pointing its remaining edges
away from it gives an acyclic orientation whose out-degrees are at most the
degeneracy, which in turn is below twice the arboricity.
"""

from chroma import GenSpec, arboricity_estimate, check_orientation, forests_decomposition_orientation, generate

for k in (2, 4, 8):
    out = generate(GenSpec("forest-union", 400, k, seed=k))
    g = out.graph
    peel = forests_decomposition_orientation(g)
    outdeg = max(len(a) for a in peel.orientation.out_list)
    print(f"k={k}: degeneracy {peel.degeneracy}, alpha_hat {peel.alpha_hat}, max outdegree {outdeg}")
    # The certified bound k gives the check 2k on out-degrees.
    print("  ", check_orientation(g, peel.orientation, 2 * k).line())
    assert arboricity_estimate(g) == peel.alpha_hat
