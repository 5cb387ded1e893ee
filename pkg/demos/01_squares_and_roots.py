"""
Squares and square roots
========================

A square root of ``G`` is a graph ``H`` on the same vertices whose square
(join every pair at distance at most two) is ``G``. This script builds a few
squares, solves them back, and shows the two classic small cases: a path
on three vertices has no root, and the square of a 7-cycle has exactly one.
"""

# %%
from graphroots import LabeledInstance, brute_force_roots, solve, solve_labeled, square
from graphroots.generators import cycle, path, planted
from graphroots.io import emit_graph6

# %%
# The square of a path on four vertices gains the two distance-2 chords.
p4 = path(4)
g = square(p4)
print("P4 edges:       ", p4.edges())
print("square(P4):     ", g.edges(), " graph6:", emit_graph6(g))

# %%
# The solver returns the least root in canonical edge order: scan the
# edges of G in order and prefer roots that contain the earlier edge.
out = solve(g)
print("status:", out.status.value, " witness:", out.witness)
print("all roots (brute force):", [sorted(r) for r in brute_force_roots(g)])

# %%
# P3 has a cut vertex whose two neighbors are not adjacent, so no root exists.
out = solve(path(3))
print("P3:", out.status.value, out.certificate.value)

# %%
# The square of C7 has a unique root, C7 itself.
g = square(cycle(7))
roots = brute_force_roots(g)
print("roots of square(C7):", len(roots), " equals C7:", roots[0] == frozenset(cycle(7).edges()))

# %%
# Labels: require or forbid particular edges in the root. Forbidding an
# edge of the unique root makes the instance infeasible.
inst = LabeledInstance(g, forbidden=frozenset({(0, 1)}))
print("forbid 0-1:", solve_labeled(inst).status.value)

# %%
# A planted instance is a random root together with its square. The solver
# always finds some root (not necessarily the planted one).
inst = planted(seed=3, n=30, profile="le6")
out = solve(inst.square)
print("planted n=30:", out.status.value, f"{len(out.witness)} root edges vs {inst.root.m} planted")
