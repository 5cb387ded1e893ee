"""Slow, independent reference implementations used only by the tests.

Nothing here shares code with the package beyond the ``Graph`` container:
squares come from networkx, roots and recognizable partitions from plain
subset enumeration, vertex separation from a dynamic program over subsets.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import networkx as nx

from graphroots.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def from_nx(gx: nx.Graph) -> Graph:
    relabel = {v: i for i, v in enumerate(sorted(gx.nodes()))}
    return Graph(len(relabel), [(relabel[a], relabel[b]) for a, b in gx.edges()])


def nx_square_edges(g: Graph) -> set[tuple[int, int]]:
    return {tuple(sorted(e)) for e in nx.power(to_nx(g), 2).edges()}


def naive_roots(g: Graph, required=(), forbidden=()) -> list[frozenset]:
    edges = sorted(g.edges())
    target = set(edges)
    req = {tuple(sorted(e)) for e in required}
    forb = {tuple(sorted(e)) for e in forbidden}
    out = []
    for r in range(len(edges) + 1):
        for sub in itertools.combinations(edges, r):
            s = set(sub)
            if not req <= s or s & forb:
                continue
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(sub)
            if {tuple(sorted(e)) for e in nx.power(h, 2).edges()} == target:
                out.append(frozenset(sub))
    return out


def least_root(g: Graph, roots) -> frozenset | None:
    """Least root in the order: first differing canonical edge, containing it is smaller."""
    edges = sorted(g.edges())
    if not roots:
        return None
    return min(roots, key=lambda r: [0 if e in r else 1 for e in edges])


def naive_recognizable_xs(g: Graph, u: int, v: int) -> list[tuple[int, ...]]:
    """Every ``X`` (sorted) for which ``(X, C - X)`` satisfies conditions a) to f)."""
    gx = to_nx(g)
    nu, nv = set(gx[u]), set(gx[v])
    common = sorted(nu & nv)
    good = []
    for r in range(1, len(common)):
        for xs in itertools.combinations(common, r):
            x = set(xs)
            y = set(common) - x
            if not _clique(gx, x) or not _clique(gx, y):
                continue
            if any(gx.has_edge(a, b) for a in x for b in y):
                continue
            rest_u = nu - x - y - {v}
            rest_v = nv - x - y - {u}
            if any(gx.has_edge(w, b) for w in rest_u for b in y):
                continue
            if any(gx.has_edge(w, a) for w in rest_v for a in x):
                continue
            if not all(any(gx.has_edge(w, a) for a in x) for w in rest_u):
                continue
            if not all(any(gx.has_edge(w, b) for b in y) for w in rest_v):
                continue
            good.append(xs)
    return good


def _clique(gx: nx.Graph, s: set[int]) -> bool:
    return all(gx.has_edge(a, b) for a, b in itertools.combinations(s, 2))


def naive_vertex_separation(g: Graph) -> int:
    """Minimum over layouts of the largest boundary of a prefix."""
    n = g.n
    nbrs = [set(g.neighbors(v)) for v in range(n)]

    def boundary(s: frozenset) -> int:
        return sum(1 for a in s if nbrs[a] - s)

    @lru_cache(maxsize=None)
    def best(s: frozenset) -> int:
        if not s:
            return 0
        return max(boundary(s), min(best(s - {v}) for v in s))

    return best(frozenset(range(n)))


def layout_permutation_width(g: Graph) -> int:
    """The same quantity straight from the definition, over all permutations."""
    nbrs = [set(g.neighbors(v)) for v in range(g.n)]
    best = g.n
    for perm in itertools.permutations(range(g.n)):
        placed: set[int] = set()
        w = 0
        for v in perm:
            placed.add(v)
            w = max(w, sum(1 for a in placed if nbrs[a] - placed))
        best = min(best, w)
    return best if g.n else 0


def atlas_connected(max_n: int) -> list[Graph]:
    return [from_nx(gx) for gx in nx.graph_atlas_g() if 1 <= gx.number_of_nodes() <= max_n and nx.is_connected(gx)]


def atlas_all(max_n: int) -> list[Graph]:
    return [from_nx(gx) for gx in nx.graph_atlas_g() if gx.number_of_nodes() <= max_n]


def random_graph(rng: random.Random, n: int, max_edges: int | None = None) -> Graph:
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    p = rng.random()
    edges = [e for e in pairs if rng.random() < p]
    if max_edges is not None and len(edges) > max_edges:
        edges = rng.sample(edges, max_edges)
    return Graph(n, edges)


def random_graph_m(rng: random.Random, n: int, max_edges: int) -> Graph:
    """``n`` vertices and an edge count drawn uniformly from ``0..min(max_edges, C(n, 2))``."""
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    m = rng.randint(0, min(max_edges, len(pairs)))
    return Graph(n, rng.sample(pairs, m))


def cycle_chord_root(rng: random.Random, n: int) -> Graph:
    """A Hamiltonian cycle in random vertex order plus up to ``n // 2`` random chords."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[(i + 1) % n]))) for i in range(n)}
    for _ in range(rng.randint(0, n // 2)):
        a, b = rng.sample(range(n), 2)
        edges.add((min(a, b), max(a, b)))
    return Graph(n, edges)


def diamond_chain(k: int, tails: int) -> Graph:
    """Hubs ``0..k``, consecutive hubs joined by two internally disjoint 2-paths, and a pendant path
    of length ``tails`` at each end hub."""
    edges = []
    n = k + 1
    for i in range(k):
        for _ in range(2):
            edges += [(i, n), (n, i + 1)]
            n += 1
    a, b = 0, k
    for _ in range(tails):
        edges.append((a, n))
        a, n = n, n + 1
        edges.append((b, n))
        b, n = n, n + 1
    return Graph(n, edges)


# Roots at diameter 6 whose squares have maximum degree 6 and no recognizable
# edges, found by a mutation search from the small-graph atlas.
DIAMETER_SIX_ROOTS = ("HBYKCOO", "HBYKCWO", "HJYKCWO")


def random_labels(rng: random.Random, g: Graph, p: float = 0.15):
    req, forb = [], []
    for e in g.edges():
        r = rng.random()
        if r < p:
            req.append(e)
        elif r < 2 * p:
            forb.append(e)
    return req, forb
