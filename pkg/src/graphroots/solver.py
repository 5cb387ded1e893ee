"""Exact square-root search with labels, the brute-force oracle, and the low-degree pipelines.

The search space is the spanning subgraphs of ``G``: every edge of a root is
an edge of its square. Edges are decided in canonical order, ``in`` before
``out``, so the first witness found is the least one in that order: two
roots compare by the first canonical edge on which they differ, and the
root containing that edge is the smaller.

A subgraph ``H`` of ``G`` is a root exactly when

* (closure) no two ``H``-edges ``uw, wv`` join a non-adjacent pair ``u, v`` of ``G``;
* (coverage) every edge ``uv`` of ``G`` is in ``H`` or has some ``w`` with
  ``uw, wv`` in ``H``.

The pruning rules propagate these constraints during the search.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import numpy as np

from .budget import UNLIMITED, Budget, BudgetExhausted, Tracker
from .certificates.pathwidth import Answer, pathwidth_at_most, pathwidth_lower_bound
from .graph import Edge, Graph, LabeledInstance, canonical_edge, components, is_square_root, max_degree
from .recognizable import find_recognizable_edge

PATHWIDTH_LIMIT = 27
SIZE_LIMIT = 103
ORACLE_MAX_EDGES = 22


class Status(str, Enum):
    YES = "YES"
    NO = "NO"
    UNDECIDED = "UNDECIDED"


class Certificate(str, Enum):
    PATHWIDTH_EXCEEDED = "pathwidth-exceeded"
    SIZE_BOUND_EXCEEDED = "size-bound-exceeded"
    LABEL_CONTRADICTION = "label-contradiction"
    EXHAUSTED_SEARCH = "exhausted-search"


@dataclass(frozen=True)
class SolveOutcome:
    status: Status
    witness: tuple[Edge, ...] | None = None
    certificate: Certificate | None = None
    component: frozenset[int] | None = None
    detail: str = ""
    nodes: int = 0
    seconds: float = 0.0

    def __post_init__(self):
        if self.status is Status.YES and self.witness is None:
            raise ValueError("YES outcomes carry a witness")
        if self.status is Status.NO and self.certificate is None:
            raise ValueError("NO outcomes carry a certificate")

    def root(self, n: int) -> Graph:
        return Graph(n, self.witness)


@dataclass(frozen=True)
class Pruning:
    """Switches for the individual pruning rules; the search is exact with any subset."""

    closure: bool = True
    coverage: bool = True
    degree_cap: bool = True
    unit_propagation: bool = True


ALL_RULES = Pruning()


class _Conflict(Exception):
    pass


class _Search:
    """Backtracking over the edges of one connected graph with propagation and a trail."""

    def __init__(self, g: Graph, rules: Pruning, tracker: Tracker):
        self.g = g
        self.rules = rules
        self.tracker = tracker
        self.edges = g.edges()
        m = len(self.edges)
        self.index = {e: i for i, e in enumerate(self.edges)}
        adj = g.adjacency

        self.conflicts: list[list[int]] = [[] for _ in range(m)]
        for i, (u, w) in enumerate(self.edges):
            for a, b in ((u, w), (w, u)):
                # H-edge ab plus H-edge bx makes a, x adjacent in the square.
                for x in g.neighbors(b):
                    if x != a and not adj[a] >> x & 1:
                        self.conflicts[i].append(self.index[canonical_edge(b, x)])

        self.options: list[list[tuple[int, ...]]] = []
        self.occurs: list[list[tuple[int, int]]] = [[] for _ in range(m)]
        for c, (u, v) in enumerate(self.edges):
            opts = [(c,)]
            common = adj[u] & adj[v]
            w = 0
            while common:
                if common & 1:
                    opts.append((self.index[canonical_edge(u, w)], self.index[canonical_edge(w, v)]))
                common >>= 1
                w += 1
            for k, opt in enumerate(opts):
                for e in opt:
                    self.occurs[e].append((c, k))
            self.options.append(opts)

        self.val = [-1] * m
        self.dead = [[0] * len(opts) for opts in self.options]
        self.alive = [len(opts) for opts in self.options]
        self.hadj = [0] * g.n
        self.closed_size = [g.degree(v) + 1 for v in range(g.n)]
        self.trail: list[int] = []

    # Assignment and undo.

    def _assign(self, e: int, value: int, queue: list[tuple[int, int]]) -> None:
        cur = self.val[e]
        if cur == value:
            return
        if cur != -1:
            raise _Conflict
        self.val[e] = value
        self.trail.append(e)
        rules = self.rules
        if value == 1:
            u, w = self.edges[e]
            self.hadj[u] |= 1 << w
            self.hadj[w] |= 1 << u
            if rules.closure:
                for f in self.conflicts[e]:
                    if self.val[f] == 1:
                        raise _Conflict
                    if self.val[f] == -1:
                        queue.append((f, 0))
            if rules.degree_cap:
                self._check_balls(u, w)
        else:
            for c, k in self.occurs[e]:
                self.dead[c][k] += 1
                if self.dead[c][k] == 1:
                    self.alive[c] -= 1
                    left = self.alive[c]
                    if left == 0 and rules.coverage:
                        raise _Conflict
                    if left == 1 and rules.unit_propagation:
                        for k2, opt in enumerate(self.options[c]):
                            if self.dead[c][k2] == 0:
                                queue.extend((f, 1) for f in opt if self.val[f] != 1)
                                break

    def _check_balls(self, u: int, w: int) -> None:
        hadj = self.hadj
        touched = hadj[u] | hadj[w] | (1 << u) | (1 << w)
        while touched:
            low = touched & -touched
            x = low.bit_length() - 1
            touched ^= low
            ball = hadj[x] | low
            nb = hadj[x]
            while nb:
                lb = nb & -nb
                ball |= hadj[lb.bit_length() - 1]
                nb ^= lb
            if ball.bit_count() > self.closed_size[x]:
                raise _Conflict

    def _propagate(self, queue: list[tuple[int, int]]) -> None:
        while queue:
            e, value = queue.pop()
            self._assign(e, value, queue)

    def _undo_to(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            e = trail.pop()
            if self.val[e] == 1:
                u, w = self.edges[e]
                self.hadj[u] &= ~(1 << w)
                self.hadj[w] &= ~(1 << u)
            else:
                for c, k in self.occurs[e]:
                    self.dead[c][k] -= 1
                    if self.dead[c][k] == 0:
                        self.alive[c] += 1
            self.val[e] = -1

    def _try(self, assignments: Iterable[tuple[int, int]]) -> bool:
        """Apply assignments with propagation; on conflict undo and return False."""
        mark = len(self.trail)
        queue = list(assignments)
        try:
            self._propagate(queue)
        except _Conflict:
            self._undo_to(mark)
            return False
        return True

    def run(self, required: Iterable[int], forbidden: Iterable[int]) -> list[Edge] | None:
        initial = [(e, 1) for e in required] + [(e, 0) for e in forbidden]
        if self.rules.unit_propagation:
            initial += [(f, 1) for c, opts in enumerate(self.options) if len(opts) == 1 for f in opts[0]]
        if not self._try(initial):
            return None
        m = len(self.edges)
        # Each frame: (edge, trail mark, next value to try or None when exhausted).
        stack: list[tuple[int, int, int | None]] = []
        cursor = 0
        while True:
            while cursor < m and self.val[cursor] != -1:
                cursor += 1
            if cursor == m:
                witness = [self.edges[e] for e in range(m) if self.val[e] == 1]
                if is_square_root(Graph(self.g.n, witness), self.g):
                    return witness
            else:
                self.tracker.tick()
                mark = len(self.trail)
                ok = self._try([(cursor, 1)])
                if ok:
                    stack.append((cursor, mark, 0))
                    continue
                ok = self._try([(cursor, 0)])
                if ok:
                    stack.append((cursor, mark, None))
                    continue
            # Backtrack to the most recent frame with an untried value.
            while True:
                if not stack:
                    return None
                e, mark, nxt = stack.pop()
                self._undo_to(mark)
                if nxt is None:
                    continue
                if self._try([(e, nxt)]):
                    stack.append((e, mark, None))
                    cursor = e
                    break


def _solve_component(
    g: Graph,
    required: frozenset[Edge],
    forbidden: frozenset[Edge],
    rules: Pruning,
    budget: Budget,
) -> tuple[str, list[Edge] | None, int]:
    """Returns ``(kind, witness, nodes)`` with kind in {"yes", "no", "budget"}."""
    tracker = budget.tracker()
    search = _Search(g, rules, tracker)
    req = [search.index[e] for e in sorted(required)]
    forb = [search.index[e] for e in sorted(forbidden)]
    try:
        witness = search.run(req, forb)
    except BudgetExhausted:
        return "budget", None, tracker.nodes
    if witness is None:
        return "no", None, tracker.nodes
    return "yes", witness, tracker.nodes


def _component_tasks(inst: LabeledInstance) -> list[tuple[frozenset[int], Graph, list[int], frozenset[Edge], frozenset[Edge]]]:
    tasks = []
    for comp in components(inst.g):
        sub, mapping = inst.g.induced_subgraph(comp)
        local = {v: i for i, v in enumerate(mapping)}

        def relabel(es: Iterable[Edge]) -> frozenset[Edge]:
            return frozenset(canonical_edge(local[a], local[b]) for a, b in es if a in local)

        tasks.append((comp, sub, mapping, relabel(inst.required), relabel(inst.forbidden)))
    return tasks


def _run_task(args):
    _, sub, _, req, forb, rules, budget = args
    return _solve_component(sub, req, forb, rules, budget)


def solve_labeled(
    inst: LabeledInstance,
    budget: Budget = UNLIMITED,
    rules: Pruning = ALL_RULES,
    threads: int = 1,
) -> SolveOutcome:
    """Decide the labeled square-root problem exactly.

    Components are solved independently and their witnesses joined. The
    budget applies to each component separately, so the outcome does not
    depend on ``threads``; with ``threads > 1`` components are farmed out
    to worker processes and merged in component order.
    """
    started = time.perf_counter()
    clash = inst.required & inst.forbidden
    if clash:
        e = min(clash)
        return SolveOutcome(
            Status.NO,
            certificate=Certificate.LABEL_CONTRADICTION,
            detail=f"edge {e[0]} {e[1]} is both required and forbidden",
            seconds=time.perf_counter() - started,
        )
    tasks = _component_tasks(inst)
    payload = [(*t, rules, budget) for t in tasks]
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_task, payload))
    else:
        results = [_run_task(p) for p in payload]

    witness: list[Edge] = []
    nodes = 0
    undecided = None
    for (comp, _, mapping, _, _), (kind, local_witness, used) in zip(tasks, results):
        nodes += used
        if kind == "no":
            return SolveOutcome(
                Status.NO,
                certificate=Certificate.EXHAUSTED_SEARCH,
                component=comp,
                nodes=nodes,
                seconds=time.perf_counter() - started,
            )
        if kind == "budget":
            undecided = undecided or comp
            continue
        witness.extend(canonical_edge(mapping[a], mapping[b]) for a, b in local_witness)
    elapsed = time.perf_counter() - started
    if undecided is not None:
        return SolveOutcome(Status.UNDECIDED, component=undecided, detail="budget exhausted", nodes=nodes, seconds=elapsed)
    return SolveOutcome(Status.YES, witness=tuple(sorted(witness)), nodes=nodes, seconds=elapsed)


def solve(g: Graph, budget: Budget = UNLIMITED, **kwargs) -> SolveOutcome:
    return solve_labeled(LabeledInstance(g), budget, **kwargs)


def brute_force_roots(
    g: Graph,
    max_edges: int = ORACLE_MAX_EDGES,
    required: Iterable[Edge] = (),
    forbidden: Iterable[Edge] = (),
) -> list[frozenset[Edge]]:
    """Every spanning subgraph ``H`` of ``g`` with ``H^2 = g``, by exhaustive enumeration.

    Subsets containing ``required`` and avoiding ``forbidden`` are all
    enumerated (vectorized over chunks of subsets). Roots are returned
    sorted by edge count, then by sorted edge list.
    """
    edges = g.edges()
    m = len(edges)
    if m > max_edges:
        raise ValueError(f"oracle refuses {m} edges (limit {max_edges})")
    index = {e: i for i, e in enumerate(edges)}
    req = {index[canonical_edge(*e)] for e in required}
    forb = {index[canonical_edge(*e)] for e in forbidden}
    if req & forb:
        return []
    free = [i for i in range(m) if i not in req and i not in forb]
    base = sum(1 << i for i in req)
    n = g.n
    target = np.array(g.adjacency, dtype=np.int64)
    found: list[int] = []
    chunk_bits = min(len(free), 16)
    low = np.arange(1 << chunk_bits, dtype=np.int64)
    # Spread the chunk counter over the first free edge positions once.
    spread_low = np.full(low.shape, base, dtype=np.int64)
    for k in range(chunk_bits):
        spread_low |= ((low >> k) & 1) << free[k]
    for high in range(1 << (len(free) - chunk_bits)):
        masks = spread_low.copy()
        for k in range(chunk_bits, len(free)):
            if high >> (k - chunk_bits) & 1:
                masks |= 1 << free[k]
        adj = [np.zeros(masks.shape, dtype=np.int64) for _ in range(n)]
        for i, (u, v) in enumerate(edges):
            bit = (masks >> i) & 1
            adj[u] |= bit << v
            adj[v] |= bit << u
        keep = np.ones(masks.shape, dtype=bool)
        for v in range(n):
            sq = adj[v].copy()
            for u in g.neighbors(v):
                sq |= np.where((adj[v] >> u) & 1 == 1, adj[u], 0)
            sq &= ~(1 << v)
            keep &= sq == target[v]
            if not keep.any():
                break
        found.extend(int(x) for x in masks[keep])
    roots = [frozenset(edges[i] for i in range(m) if mask >> i & 1) for mask in found]
    roots.sort(key=lambda r: (len(r), sorted(r)))
    return roots


def _check_degree(g: Graph, limit: int) -> None:
    delta = max_degree(g)
    if delta > limit:
        raise ValueError(f"maximum degree {delta} exceeds {limit}")


def _combine(g: Graph, pieces: list[tuple[frozenset[int], SolveOutcome]], started: float) -> SolveOutcome:
    witness: list[Edge] = []
    nodes = sum(out.nodes for _, out in pieces)
    undecided = None
    for comp, out in pieces:
        if out.status is Status.NO:
            return SolveOutcome(
                Status.NO,
                certificate=out.certificate,
                component=comp,
                detail=out.detail,
                nodes=nodes,
                seconds=time.perf_counter() - started,
            )
        if out.status is Status.UNDECIDED:
            undecided = undecided or comp
            continue
        witness.extend(out.witness)
    elapsed = time.perf_counter() - started
    if undecided is not None:
        return SolveOutcome(Status.UNDECIDED, component=undecided, detail="budget exhausted", nodes=nodes, seconds=elapsed)
    return SolveOutcome(Status.YES, witness=tuple(sorted(witness)), nodes=nodes, seconds=elapsed)


def _lift(out: SolveOutcome, mapping: list[int]) -> SolveOutcome:
    if out.witness is None:
        return out
    lifted = tuple(sorted(canonical_edge(mapping[a], mapping[b]) for a, b in out.witness))
    return SolveOutcome(out.status, lifted, out.certificate, out.component, out.detail, out.nodes, out.seconds)


def solve_max_deg5(g: Graph, budget: Budget = UNLIMITED, width_budget: Budget = Budget(max_nodes=20000)) -> SolveOutcome:
    """Square root for maximum degree at most 5.

    A component whose pathwidth exceeds 27 has no root; that is tested with
    certified lower bounds and a budgeted exact width search. Components
    that pass (or whose width search runs out of budget) go to the exact
    solver.
    """
    _check_degree(g, 5)
    started = time.perf_counter()
    pieces = []
    for comp in components(g):
        sub, mapping = g.induced_subgraph(comp)
        if sub.n > PATHWIDTH_LIMIT + 1:
            bound = pathwidth_lower_bound(sub)
            verdict = None
            if bound > PATHWIDTH_LIMIT:
                verdict = f"pathwidth lower bound {bound} > {PATHWIDTH_LIMIT}"
            elif pathwidth_at_most(sub, PATHWIDTH_LIMIT, width_budget).answer is Answer.NO:
                verdict = f"exact search: pathwidth > {PATHWIDTH_LIMIT}"
            if verdict is not None:
                pieces.append((comp, SolveOutcome(Status.NO, certificate=Certificate.PATHWIDTH_EXCEEDED, detail=verdict)))
                break
        pieces.append((comp, _lift(solve(sub, budget), mapping)))
        if pieces[-1][1].status is Status.NO:
            break
    return _combine(g, pieces, started)


def solve_max_deg6(g: Graph, budget: Budget = UNLIMITED) -> SolveOutcome:
    """Square root for maximum degree at most 6.

    A connected component without recognizable edges and with more than
    103 vertices has no root. Every other component, including those with
    recognizable edges, goes to the exact solver.
    """
    _check_degree(g, 6)
    started = time.perf_counter()
    pieces = []
    for comp in components(g):
        sub, mapping = g.induced_subgraph(comp)
        if sub.n > SIZE_LIMIT and find_recognizable_edge(sub) is None:
            pieces.append(
                (comp, SolveOutcome(
                    Status.NO,
                    certificate=Certificate.SIZE_BOUND_EXCEEDED,
                    detail=f"{sub.n} > {SIZE_LIMIT} vertices and no recognizable edge",
                ))
            )
            break
        pieces.append((comp, _lift(solve(sub, budget), mapping)))
        if pieces[-1][1].status is Status.NO:
            break
    return _combine(g, pieces, started)


def verify_outcome(g: Graph, out: SolveOutcome, required: Iterable[Edge] = (), forbidden: Iterable[Edge] = ()) -> bool:
    """Independently re-check an outcome.

    YES: the witness squares to ``g`` and respects the labels. NO with a
    structural certificate: the certificate's hypotheses are re-derived
    for the reported component. NO by exhausted search: cross-checked with
    the brute-force oracle when the graph is small enough, else accepted.
    """
    req = {canonical_edge(*e) for e in required}
    forb = {canonical_edge(*e) for e in forbidden}
    if out.status is Status.YES:
        if out.witness is None:
            return False
        w = set(out.witness)
        if any(not g.has_edge(*e) for e in w):
            return False
        return is_square_root(Graph(g.n, w), g) and req <= w and not (forb & w)
    if out.status is Status.UNDECIDED:
        return True
    cert = out.certificate
    if cert is Certificate.LABEL_CONTRADICTION:
        return bool(req & forb)
    if cert is Certificate.EXHAUSTED_SEARCH:
        if g.m <= ORACLE_MAX_EDGES:
            return not brute_force_roots(g, required=req, forbidden=forb)
        return True
    if out.component is None:
        return False
    sub, _ = g.induced_subgraph(out.component)
    if sub.n and len(components(sub)) != 1:
        return False
    if cert is Certificate.SIZE_BOUND_EXCEEDED:
        return max_degree(sub) <= 6 and sub.n > SIZE_LIMIT and find_recognizable_edge(sub) is None
    if cert is Certificate.PATHWIDTH_EXCEEDED:
        if max_degree(sub) > 5:
            return False
        if pathwidth_lower_bound(sub) > PATHWIDTH_LIMIT:
            return True
        return pathwidth_at_most(sub, PATHWIDTH_LIMIT).answer is Answer.NO
    return False
