"""
Extracting a witness coupling
=============================

The distance value alone says how similar two loops are; the witness says
why.  It is an explicit cyclic pairing of vertices, each side advancing one
step at a time, whose worst pair realizes the distance.
"""

from frechet import (
    DeltaBelowDistance,
    frechet_closed_sort,
    gen_curve,
    metric_eval,
    witness_coupling,
)

u = gen_curve("noisy-polygon", 10, seed=11)
v = gen_curve("circle", 8)

dist = frechet_closed_sort(u, v)
print(f"closed distance: {dist:.6f}\n")

w = witness_coupling(u, v, dist)
print("witness pairs (u vertex, v vertex) and their separations:")
for a, b in w.pairs:
    d = metric_eval("euclidean", u[a - 1], v[b - 1])
    mark = "  <-- tight" if d == w.length else ""
    print(f"  u{a:<3d} v{b:<3d} {d:.6f}{mark}")
print(f"\nwitness length: {w.length:.6f} (equals the distance: {w.length == dist})")

# a more generous threshold also works, it just returns a slacker coupling
loose = witness_coupling(u, v, dist * 1.5)
print(f"at threshold {dist * 1.5:.6f} the coupling length is {loose.length:.6f}")

# but no coupling can beat the distance itself
try:
    witness_coupling(u, v, dist * 0.999)
except DeltaBelowDistance as exc:
    print(f"\nthreshold below the distance -> {type(exc).__name__}: {exc}")
