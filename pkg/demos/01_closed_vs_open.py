"""
Closed versus open curve distance
=================================

A closed curve has no distinguished starting vertex.  The open distance
changes when you renumber the vertices of the same loop; the closed distance
does not.
"""

from frechet import frechet_closed_logstar, frechet_open, gen_curve
from frechet.metric_core import cyclic_shift

# two noisy traces of the same loop, sampled at different densities
u = gen_curve("noisy-polygon", 16, seed=1)
v = gen_curve("noisy-polygon", 21, seed=2)

print("open distance   :", frechet_open(u, v))
print("closed distance :", frechet_closed_logstar(u, v))

# now renumber u so the "first" vertex is a third of the way around the loop
shifted = cyclic_shift(u, 5)

# the open distance jumps: it is forced to pair the new first vertices
print("\nafter rotating one input by 5 vertices:")
print("open distance   :", frechet_open(shifted, v))
print("closed distance :", frechet_closed_logstar(shifted, v))

# the closed distance is exactly the minimum of the open distance over all
# rotations of both inputs; brute-forcing that minimum reproduces it
best = min(
    frechet_open(cyclic_shift(u, s), cyclic_shift(v, t))
    for s in range(len(u))
    for t in range(len(v))
)
print("\nmin over all rotations of the open distance:", best)
print("matches the closed distance:", best == frechet_closed_logstar(u, v))
