"""
Pathwidth certificates
======================

For squares of maximum degree 5, a root forces small BFS levels: any
three consecutive levels hold at most 28 vertices. The bags
``L_i | L_{i+1} | L_{i+2}`` then form a path decomposition of width at
most 27, so a square of larger pathwidth has no root. This script checks
the decomposition on planted roots and shows the lower bounds used to
certify "pathwidth above 27".
"""

# %%
import numpy as np

from graphroots import square
from graphroots.certificates.decomposition import bfs_triple_decomposition, validate_path_decomposition
from graphroots.certificates.pathwidth import (
    congestion_bound,
    contraction_degeneracy_bound,
    degeneracy,
    greedy_clique_bound,
    pathwidth,
)
from graphroots.generators import complete, planted, subdivide, wall

# %%
# Level-triple decompositions from every source of 50 planted roots.
widths = []
for seed in range(50):
    inst = planted(seed, 40, "le5")
    for s in range(inst.root.n):
        pd = bfs_triple_decomposition(inst.root, s)
        assert validate_path_decomposition(inst.square, pd)
        widths.append(pd.width)
widths = np.array(widths)
print(f"{widths.size} decompositions, width max {widths.max()}, mean {widths.mean():.2f}")

# %%
# Exact pathwidth on small graphs, with a checked decomposition.
for k in range(1, 9):
    print(f"pw(K_{k}) = {pathwidth(complete(k))[0]}")

# %%
# Lower bounds on squares of subdivided walls. Clique and degeneracy
# bounds stall at the degree; the congestion bound (shortest-path flow
# that must cross the middle of any layout) keeps growing with the wall.
print(" h     n  clique  degen  contract  congestion")
for h in (4, 6, 8):
    g = square(subdivide(wall(h)))
    print(
        f"{h:2d} {g.n:5d} {greedy_clique_bound(g):7d} {degeneracy(g):6d}"
        f" {contraction_degeneracy_bound(g):9d} {congestion_bound(g):11d}"
    )
