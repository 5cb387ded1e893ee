"""Pathwidth: exact vertex-separation search under a budget, plus sound lower bounds.

Pathwidth equals the vertex separation number: the minimum over vertex
layouts of the largest number of placed vertices that still have an
unplaced neighbor. The exact routine searches layouts prefix by prefix with
memoized dead prefixes. Lower bounds come first so that many ``no``
answers never reach the search.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum

from ..budget import UNLIMITED, Budget, BudgetExhausted, Tracker
from ..graph import Graph, bits, components
from .decomposition import PathDecomposition, layout_decomposition, validate_path_decomposition


class Answer(str, Enum):
    YES = "yes"
    NO = "no"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class PathwidthResult:
    answer: Answer
    decomposition: PathDecomposition | None = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.answer is Answer.YES


def _boundary(adj: tuple[int, ...], placed: int) -> int:
    out = ~placed
    return sum(1 for a in bits(placed) if adj[a] & out)


def layout_width(g: Graph, order: list[int]) -> int:
    """Vertex separation of a layout (0 for the empty graph)."""
    adj = g.adjacency
    placed = 0
    best = 0
    for v in order:
        placed |= 1 << v
        best = max(best, _boundary(adj, placed))
    return best


def _greedy_layout(adj: tuple[int, ...], n: int, start: int) -> list[int]:
    # Ties go to the vertex nearest the start, so the layout sweeps across the graph.
    dist = _bfs_dist(adj, start)
    placed = 1 << start
    order = [start]
    cost = _boundary(adj, placed)
    full = (1 << n) - 1
    while placed != full:
        frontier = 0
        for a in bits(placed):
            frontier |= adj[a]
        frontier &= ~placed
        cands = frontier or (full & ~placed)
        best_v, best_key = -1, None
        for v in bits(cands):
            key = (_boundary(adj, placed | 1 << v), dist[v], v)
            if best_key is None or key < best_key:
                best_v, best_key = v, key
        best_c = best_key[0]
        placed |= 1 << best_v
        order.append(best_v)
        cost = max(cost, best_c)
    return order


def _heuristic_layout(g: Graph, starts: int = 6) -> list[int]:
    """Best greedy layout over a few peripheral start vertices (connected ``g``)."""
    adj = g.adjacency
    candidates = []
    v = 0
    for _ in range(starts):
        if v in candidates:
            break
        candidates.append(v)
        dist = _bfs_dist(adj, v)
        v = max(range(g.n), key=lambda w: (dist[w], -w))
    best = None
    for s in candidates:
        order = _greedy_layout(adj, g.n, s)
        w = layout_width(g, order)
        if best is None or w < best[0]:
            best = (w, order)
    return best[1]


def _bfs_dist(adj: tuple[int, ...], source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in bits(adj[v]):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def _exact_layout(g: Graph, k: int, tracker: Tracker) -> list[int] | None:
    """A layout of width at most ``k``, or None if none exists. May raise BudgetExhausted."""
    adj = g.adjacency
    n = g.n
    full = (1 << n) - 1
    dead: set[int] = set()

    def extend(placed: int, cost: int) -> list[int] | None:
        # A move that does not raise the boundary is always safe: the
        # boundary size is submodular, so taking it early never hurts.
        forced = []
        progress = True
        while progress and placed != full:
            progress = False
            for v in bits(full & ~placed):
                c = _boundary(adj, placed | 1 << v)
                if c <= cost:
                    placed |= 1 << v
                    cost = c
                    forced.append(v)
                    progress = True
                    break
        if placed == full:
            return forced
        if placed in dead:
            return None
        tracker.tick()
        moves = []
        for v in bits(full & ~placed):
            c = _boundary(adj, placed | 1 << v)
            if c <= k:
                moves.append((c, v))
        moves.sort()
        for c, v in moves:
            rest = extend(placed | 1 << v, c)
            if rest is not None:
                return forced + [v] + rest
        dead.add(placed)
        return None

    return extend(0, 0)


def pathwidth_at_most(g: Graph, k: int, budget: Budget = UNLIMITED) -> PathwidthResult:
    """Decide whether the pathwidth of ``g`` is at most ``k``.

    Each component is handled separately: trivially small components pass,
    a certified lower bound above ``k`` answers ``no``, a greedy layout of
    width at most ``k`` answers ``yes``, and otherwise an exact layout
    search runs until ``budget`` is spent. ``yes`` answers carry a validated
    decomposition.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    tracker = budget.tracker()
    order: list[int] = []
    for comp in components(g):
        sub, mapping = g.induced_subgraph(comp)
        if sub.n <= k + 1:
            order.extend(mapping)
            continue
        if pathwidth_lower_bound(sub) > k:
            return PathwidthResult(Answer.NO, nodes=tracker.nodes)
        layout = _heuristic_layout(sub)
        if layout_width(sub, layout) > k:
            try:
                layout = _exact_layout(sub, k, tracker)
            except BudgetExhausted:
                return PathwidthResult(Answer.UNDECIDED, nodes=tracker.nodes)
            if layout is None:
                return PathwidthResult(Answer.NO, nodes=tracker.nodes)
        order.extend(mapping[v] for v in layout)
    pd = layout_decomposition(g, order)
    if not validate_path_decomposition(g, pd) or pd.width > k:
        raise AssertionError("layout search produced an invalid decomposition")
    return PathwidthResult(Answer.YES, pd, tracker.nodes)


def pathwidth(g: Graph, budget: Budget = UNLIMITED) -> tuple[int, PathDecomposition]:
    """Exact pathwidth with an optimal decomposition. Raises BudgetExhausted past the budget."""
    if g.n == 0:
        return 0, PathDecomposition(())
    k = max(pathwidth_lower_bound(g), 0)
    while True:
        res = pathwidth_at_most(g, k, budget)
        if res.answer is Answer.YES:
            return res.decomposition.width, res.decomposition
        if res.answer is Answer.UNDECIDED:
            raise BudgetExhausted
        k += 1


# Lower bounds. Each is a lower bound on treewidth or directly on vertex
# separation, hence on pathwidth.

def greedy_clique_bound(g: Graph) -> int:
    """Size of a greedily grown clique, minus one."""
    adj = g.adjacency
    best = 0
    for v in range(g.n):
        clique = 1 << v
        cand = adj[v]
        size = 1
        while cand:
            w = max(bits(cand), key=lambda x: ((adj[x] & cand).bit_count(), -x))
            clique |= 1 << w
            size += 1
            cand &= adj[w]
        best = max(best, size)
    return best - 1 if g.n else 0


def degeneracy(g: Graph) -> int:
    """Largest minimum degree over subgraphs, found by peeling minimum-degree vertices."""
    deg = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    best = 0
    while alive:
        v = min(alive, key=lambda w: (deg[w], w))
        best = max(best, deg[v])
        alive.remove(v)
        for u in g.neighbors(v):
            if u in alive:
                deg[u] -= 1
    return best


def contraction_degeneracy_bound(g: Graph) -> int:
    """Minimum degree over a sequence of minors (min-degree vertex contracted into its min-degree neighbor).

    Treewidth is minor-monotone and at least the minimum degree, so the
    largest minimum degree seen is a lower bound.
    """
    nbrs = {v: set(g.neighbors(v)) for v in range(g.n)}
    best = 0
    while len(nbrs) > 1:
        v = min(nbrs, key=lambda w: (len(nbrs[w]), w))
        best = max(best, len(nbrs[v]))
        if not nbrs[v]:
            del nbrs[v]
            continue
        u = min(nbrs[v], key=lambda w: (len(nbrs[w]), w))
        for w in nbrs.pop(v):
            nbrs[w].discard(v)
            if w != u:
                nbrs[w].add(u)
                nbrs[u].add(w)
    return best


def _path_loads(adj: tuple[int, ...], sources: list[int]) -> list[float]:
    """Flow through each vertex when every source sends one unit to every other vertex,
    split evenly over shortest paths. Endpoints count as carrying the flow."""
    n = len(adj)
    load = [0.0] * n
    for s in sources:
        dist = [-1] * n
        sigma = [0] * n
        dist[s] = 0
        sigma[s] = 1
        order = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in bits(adj[v]):
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                    order.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
        delta = [0.0] * n
        for w in reversed(order):
            if w == s:
                continue
            share = (1.0 + delta[w]) / sigma[w]
            for v in bits(adj[w]):
                if dist[v] == dist[w] - 1:
                    delta[v] += sigma[v] * share
            load[w] += 1.0 + delta[w]
        load[s] += len(order) - 1
    return load


def congestion_bound(g: Graph, max_sources: int = 300) -> int:
    """Vertex-separation lower bound from shortest-path congestion (connected ``g``).

    Fix sources ``A``; each sends one unit to every other vertex along
    shortest paths. Any prefix ``S`` of a layout with ``|S| = n // 2`` is
    crossed by at least ``|A| * (n // 2)`` units, and each unit passes
    through a placed vertex that has an unplaced neighbor. So the boundary
    of ``S`` needs at least as many vertices as it takes the heaviest loads
    to sum to that demand.
    """
    n = g.n
    if n < 2:
        return 0
    step = max(1, math.ceil(n / max_sources))
    sources = list(range(0, n, step))
    loads = sorted(_path_loads(g.adjacency, sources), reverse=True)
    demand = len(sources) * (n // 2) * (1.0 - 1e-9)
    acc = 0.0
    for j, x in enumerate(loads, start=1):
        acc += x
        if acc >= demand:
            return j
    return n


def pathwidth_lower_bound(g: Graph, flow: bool = True) -> int:
    """Certified lower bound on pathwidth: the best of the clique, degeneracy,
    contraction and (optionally) congestion bounds, per component."""
    best = 0
    for comp in components(g):
        sub, _ = g.induced_subgraph(comp) if len(comp) < g.n else (g, None)
        bounds = [greedy_clique_bound(sub), degeneracy(sub), contraction_degeneracy_bound(sub)]
        if flow:
            bounds.append(congestion_bound(sub))
        best = max(best, *bounds)
    return best
