"""
Trading colors for recursion depth
==================================

``color_with_epsilon`` picks a depth ``h`` so that the extra colors over
Delta stay within eps * Delta (delta mode) or eps * alpha_hat (arboricity
mode).  A larger eps allows deeper recursion and smaller Vizing leaves.
"""

from chroma import GenSpec, check_palette, check_proper, check_trace, color_with_epsilon, generate

g = generate(GenSpec("gnm", 2000, 40000, seed=11)).graph
for eps in ("1/2", "1/4", "1/10"):
    run = color_with_epsilon(g, eps)
    p = run.params
    print(f"eps={eps}: Delta={p.delta} h={p.h} palette={run.coloring.palette} bound={p.bound}")
    assert check_proper(g, run.coloring) and check_palette(run.coloring, p.bound)

# In arboricity mode the surplus scales with alpha_hat instead of Delta.
out = generate(GenSpec("forest-union", 3000, 30, seed=2))
g = out.graph
for mode in ("delta", "arboricity"):
    run = color_with_epsilon(g, "1/2", mode)
    print(f"{mode:10s} Delta={run.params.delta} alpha_hat={run.params.alpha_hat} "
          f"h={run.params.h} palette={run.coloring.palette} bound={run.params.bound}")

# Every level of the recursion is recorded and can be re-checked.
print("trace nodes:", len(run.trace.nodes), check_trace(run.trace, g).line())
for line in run.trace.to_lines()[:3]:
    print("  ", line)
