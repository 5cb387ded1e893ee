"""Immutable simple graphs over dense vertex ids, with bitset adjacency.

Adjacency of vertex ``v`` is stored as a Python ``int`` whose bit ``u`` is set
iff ``uv`` is an edge. Squaring a graph is then a union of neighbor bitsets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

Edge = tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; every operation that changes structure returns
    a new graph.
    """

    __slots__ = ("_n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)
        self._edges: tuple[Edge, ...] | None = None

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> "Graph":
        """Build from per-vertex neighbor bitsets (checked for symmetry)."""
        adj = tuple(adj)
        n = len(adj)
        full = (1 << n) - 1
        for v, mask in enumerate(adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} has a neighbor out of range")
            if mask >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(mask):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        g = cls.__new__(cls)
        g._n = n
        g._adj = adj
        g._edges = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> tuple[int, ...]:
        return self._adj

    @property
    def m(self) -> int:
        return sum(mask.bit_count() for mask in self._adj) // 2

    def edges(self) -> tuple[Edge, ...]:
        """Edges as ``(min, max)`` pairs in lexicographic order."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self._n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))
            )
        return self._edges

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def neighbor_mask(self, v: int) -> int:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``(subgraph, mapping)`` where ``mapping[i]`` is the original id of vertex ``i``."""
        mapping = sorted(set(vertices))
        index = {v: i for i, v in enumerate(mapping)}
        sub_edges = [
            (index[u], index[v]) for u, v in self.edges() if u in index and v in index
        ]
        return Graph(len(mapping), sub_edges), mapping

    def spanning_subgraph(self, edges: Iterable[Edge]) -> "Graph":
        return Graph(self._n, edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def square(h: Graph) -> Graph:
    """Join every pair of vertices at distance at most two in ``h``."""
    adj = h.adjacency
    out = []
    for v in range(h.n):
        acc = adj[v]
        for u in bits(adj[v]):
            acc |= adj[u]
        out.append(acc & ~(1 << v))
    g = Graph.__new__(Graph)
    g._n = h.n
    g._adj = tuple(out)
    g._edges = None
    return g


def is_square_root(h: Graph, g: Graph) -> bool:
    if h.n != g.n:
        raise ValueError(f"vertex counts differ: {h.n} != {g.n}")
    return square(h).adjacency == g.adjacency


def max_degree(g: Graph) -> int:
    return max((mask.bit_count() for mask in g.adjacency), default=0)


def distances_from(g: Graph, source: int) -> list[int]:
    """BFS distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        v = queue.popleft()
        for u in bits(adj[v]):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their minimum vertex id."""
    seen = 0
    comps = []
    adj = g.adjacency
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= adj[v]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        comps.append(frozenset(bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def diameter(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    best = 0
    for v in range(g.n):
        dist = distances_from(g, v)
        if -1 in dist:
            raise ValueError("diameter is undefined for a disconnected graph")
        best = max(best, max(dist))
    return best


@dataclass(frozen=True)
class BfsLayering:
    """Distance levels of a breadth-first search.

    ``parents[v]`` and ``children[v]`` hold *all* neighbors one level up and
    one level down, so a vertex may have several parents. ``tree_parent``
    is the canonical BFS tree that picks the lowest-id parent; the source
    and unreachable vertices map to -1.
    """

    source: int
    levels: tuple[frozenset[int], ...]
    level_of: tuple[int, ...]
    parents: tuple[tuple[int, ...], ...]
    children: tuple[tuple[int, ...], ...]
    tree_parent: tuple[int, ...]
    _tree_children: tuple[tuple[int, ...], ...] = field(repr=False, compare=False, default=())

    @property
    def depth(self) -> int:
        """The eccentricity ``s`` of the source: index of the last level."""
        return len(self.levels) - 1

    def level(self, i: int) -> frozenset[int]:
        """Level ``i``, or the empty set past either end."""
        if 0 <= i < len(self.levels):
            return self.levels[i]
        return frozenset()

    def tree_children(self, v: int) -> tuple[int, ...]:
        return self._tree_children[v]

    def tree_descendants(self, v: int) -> list[int]:
        """Proper descendants of ``v`` in the canonical BFS tree."""
        out = []
        stack = list(self._tree_children[v])
        while stack:
            w = stack.pop()
            out.append(w)
            stack.extend(self._tree_children[w])
        return out


def bfs_layering(g: Graph, source: int) -> BfsLayering:
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for n={g.n}")
    dist = distances_from(g, source)
    depth = max(dist)
    levels = [set() for _ in range(depth + 1)]
    for v, d in enumerate(dist):
        if d >= 0:
            levels[d].add(v)
    parents = []
    children = []
    tree_parent = []
    for v in range(g.n):
        d = dist[v]
        if d < 0:
            parents.append(())
            children.append(())
            tree_parent.append(-1)
            continue
        nbrs = g.neighbors(v)
        ps = tuple(u for u in nbrs if dist[u] == d - 1)
        parents.append(ps)
        children.append(tuple(u for u in nbrs if dist[u] == d + 1))
        tree_parent.append(ps[0] if ps else -1)
    tree_children: list[list[int]] = [[] for _ in range(g.n)]
    for v, p in enumerate(tree_parent):
        if p >= 0:
            tree_children[p].append(v)
    return BfsLayering(
        source=source,
        levels=tuple(frozenset(level) for level in levels),
        level_of=tuple(dist),
        parents=tuple(parents),
        children=tuple(children),
        tree_parent=tuple(tree_parent),
        _tree_children=tuple(tuple(c) for c in tree_children),
    )


@dataclass(frozen=True)
class LabeledInstance:
    """A graph with required edges ``required`` and forbidden edges ``forbidden``.

    Both label sets must be subsets of the edge set. An instance whose label
    sets intersect is representable; it simply has no solution.
    """

    g: Graph
    required: frozenset[Edge] = frozenset()
    forbidden: frozenset[Edge] = frozenset()

    def __post_init__(self):
        req = frozenset(canonical_edge(*e) for e in self.required)
        forb = frozenset(canonical_edge(*e) for e in self.forbidden)
        for e in req | forb:
            if not self.g.has_edge(*e):
                raise ValueError(f"labeled pair {e} is not an edge of the graph")
        object.__setattr__(self, "required", req)
        object.__setattr__(self, "forbidden", forb)
