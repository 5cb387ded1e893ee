"""
Recognizable edges
==================

An edge ``uv`` is recognizable when the common neighborhood of ``u`` and
``v`` splits into two non-adjacent cliques ``X`` and ``Y`` with every other
neighbor of ``u`` attached to ``X`` only and every other neighbor of ``v``
attached to ``Y`` only. Squares without such edges and with maximum degree
at most 6 are small, which is what makes the degree-6 case tractable. Two
families mark the edge of that statement: squares of ladders (degree 7,
never recognizable edges, arbitrarily large) and squares of subdivided
walls (degree 6, but they do have recognizable edges).
"""

# %%
import numpy as np

from graphroots import find_recognizable_edge, max_degree, recognizable_edges, square
from graphroots.generators import ladder, path, subdivide, wall

# %%
# In the square of P4 the middle edge is recognizable with X = {0}, Y = {3}.
for edge, witness in recognizable_edges(square(path(4))):
    print(witness)

# %%
# Ladders: degree 7 and no recognizable edge, at every size tried.
sizes = np.arange(5, 201)
degrees = np.array([max_degree(square(ladder(int(n)))) for n in sizes])
found = np.array([find_recognizable_edge(square(ladder(int(n)))) is not None for n in sizes])
print(f"ladders n=5..200: degrees {set(degrees.tolist())}, any recognizable edge: {found.any()}")

# %%
# Subdivided walls: degree at most 6, and a recognizable edge is always
# present once the graph has more than 103 vertices.
for h in range(2, 7):
    g = square(subdivide(wall(h)))
    edge, witness = find_recognizable_edge(g)
    print(f"h={h}: n={g.n:4d} max_degree={max_degree(g)}  first: {witness}")
