"""How the domination number responds to gluing a path between two vertices.

For a pair (u, v) and k >= 0, the modified graph keeps all of G and adds
a u-v path with k fresh internal vertices (k=0 is plain edge addition).
The pair's path addition number is the least k >= 1 that forces the
domination number up.  This demo traces the whole gamma-by-k curve for a
few pairs and assembles full profiles, including the infinity
conventions for edgeless and complete graphs.

Run:  python demos/02_path_addition.py
"""

from pathdom import (
    add_path,
    complete,
    cycle,
    domination_after_path,
    domination_number,
    edgeless,
    path,
    path_addition_number,
    path_addition_profile,
    rook,
)


def trace(name, g, u, v):
    gamma = domination_number(g)
    kind = "adjacent" if g.has_edge(u, v) else "nonadjacent"
    curve = {k: domination_after_path(g, u, v, k) for k in range(7)}
    pa = path_addition_number(g, u, v)
    print(f"{name}, pair ({u},{v}) [{kind}], gamma={gamma}")
    print("  k:     " + "  ".join(f"{k}" for k in curve))
    print("  gamma: " + "  ".join(f"{v}" for v in curve.values()))
    print(f"  first rise at k = {pa}\n")


print("=== gamma-by-k curves ===\n")
trace("C4", cycle(4), 0, 1)
trace("C4", cycle(4), 0, 2)
trace("P4", path(4), 1, 2)
trace("K3", complete(3), 0, 1)

print("=== the glued graph itself ===\n")
g = add_path(cycle(4), 0, 2, 3)
print("C4 with a 3-vertex path glued between the antipodal pair:")
print(" ", g.edges(), "\n")

print("=== whole-graph profiles ===\n")
for name, g in [
    ("rook(3)", rook(3)),
    ("C5", cycle(5)),
    ("K4 (complete: nonadjacent class is empty)", complete(4)),
    ("3K1 (edgeless: adjacent class is empty)", edgeless(3)),
]:
    prof = path_addition_profile(g)
    print(f"{name}:")
    print(f"  adjacent    min/max = {prof.min_adjacent}/{prof.max_adjacent}")
    print(f"  nonadjacent min/max = {prof.min_nonadjacent}/{prof.max_nonadjacent}")
    print()

print("Windows that always hold: adjacent values live in 1..3,")
print("nonadjacent values live in 1..5 (infinite only by convention above).")
