"""Structural audits of square roots of low-degree squares, and the size certificate.

Each audit takes a root ``h`` of some square ``g = square(h)``, checks the
hypotheses (connectivity, maximum degree of ``g``, and for the degree-6
audit the absence of recognizable edges in ``g``) and then verifies the
structural claims that are guaranteed to hold under them. A violation on an
applicable instance would be a counterexample, so the reports list each one
with its witness vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import BfsLayering, Graph, bfs_layering, components, distances_from, is_connected, max_degree, square
from ..recognizable import find_recognizable_edge

LEVEL_TRIPLE_LIMIT = 28
DEG6_DIAMETER_LIMIT = 8
DEG6_SIZE_LIMIT = 103


@dataclass
class AuditReport:
    applicable: bool
    reason: str = ""
    violations: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)
    stats: dict[str, object] = field(default_factory=dict)
    checked: list[str] = field(default_factory=list)
    notes: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def violation_count(self, claim: str) -> int:
        return sum(1 for c, _ in self.violations if c == claim)

    def to_text(self) -> str:
        lines = [f"applicable: {str(self.applicable).lower()}"]
        if self.reason:
            lines.append(f"reason: {self.reason}")
        for claim in self.checked:
            bad = [w for c, w in self.violations if c == claim]
            status = "ok" if not bad else f"FAIL {len(bad)}"
            detail = "" if not bad else " first=" + ",".join(map(str, bad[0]))
            lines.append(f"claim {claim}: {status}{detail}")
        for claim, witness in self.notes:
            lines.append(f"note {claim}: " + ",".join(map(str, witness)))
        for key in sorted(self.stats):
            lines.append(f"stat {key}: {self.stats[key]}")
        return "\n".join(lines) + "\n"


def _tree_descendants_by_level(layers: BfsLayering, x: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for d in layers.tree_descendants(x):
        lvl = layers.level_of[d]
        counts[lvl] = counts.get(lvl, 0) + 1
    return counts


def audit_deg5_root(h: Graph, source: int) -> AuditReport:
    """Child and descendant counts in the canonical BFS tree of a root whose square has maximum degree 5.

    Checked for every vertex ``x`` in level ``i >= 2``: at most three tree
    children (``children``) and at most four tree descendants in
    ``L_j | L_{j+1}`` for every ``j`` in ``i+1..s-1`` (``descendants``).
    Also every union of three consecutive levels has at most 28 vertices
    (``level-triple``).
    """
    if h.n == 0 or not is_connected(h):
        return AuditReport(False, "root is not connected")
    g = square(h)
    delta = max_degree(g)
    if delta > 5:
        return AuditReport(False, f"maximum degree of the square is {delta} > 5", stats={"max_degree": delta})
    layers = bfs_layering(h, source)
    s = layers.depth
    report = AuditReport(True, checked=["children", "descendants", "level-triple"])
    max_children = 0
    max_desc = 0
    for i in range(2, s + 1):
        for x in sorted(layers.levels[i]):
            kids = layers.tree_children(x)
            max_children = max(max_children, len(kids))
            if len(kids) > 3:
                report.violations.append(("children", (x, *kids)))
            per_level = _tree_descendants_by_level(layers, x)
            for j in range(i + 1, s):
                c = per_level.get(j, 0) + per_level.get(j + 1, 0)
                max_desc = max(max_desc, c)
                if c > 4:
                    report.violations.append(("descendants", (x, j)))
    triples = [len(layers.level(i) | layers.level(i + 1) | layers.level(i + 2)) for i in range(s + 1)]
    for i, size in enumerate(triples):
        if size > LEVEL_TRIPLE_LIMIT:
            report.violations.append(("level-triple", (i,)))
    report.stats.update(
        depth=s,
        level_sizes=[len(level) for level in layers.levels],
        max_children=max_children,
        max_descendants_in_two_levels=max_desc,
        max_level_triple=max(triples),
        max_degree=delta,
    )
    return report


def _descendants_by_level(layers: BfsLayering, x: int) -> dict[int, set[int]]:
    """Descendants of ``x`` (vertices reachable by a level-increasing path), grouped by level."""
    out: dict[int, set[int]] = {}
    frontier = {x}
    lvl = layers.level_of[x]
    while frontier:
        nxt = set()
        for w in frontier:
            nxt.update(layers.children[w])
        lvl += 1
        if nxt:
            out[lvl] = nxt
        frontier = nxt
    return out


def _diameter_pair(h: Graph) -> tuple[int, int, int]:
    """Lexicographically least ``(u, v)`` with ``dist(u, v) = diam(h)``, and the diameter."""
    best = (-1, 0, 0)
    for u in range(h.n):
        dist = distances_from(h, u)
        far = max(dist)
        if far > best[0]:
            best = (far, u, dist.index(far))
    return best[1], best[2], best[0]


def _canonical_shortest_path(h: Graph, u: int, v: int) -> list[int]:
    """Shortest ``u``-``v`` path taking the lowest-id admissible neighbor at each step."""
    to_v = distances_from(h, v)
    path = [u]
    while path[-1] != v:
        w = path[-1]
        path.append(min(x for x in h.neighbors(w) if to_v[x] == to_v[w] - 1))
    return path


def audit_deg6_instance(h: Graph) -> AuditReport:
    """Diameter and level structure of a root whose square has maximum degree at most 6 and no recognizable edges.

    The search starts from the end ``u`` of a diametral pair ``(u, v)``.
    Parent/child relations are the root's edges between consecutive
    levels, so a vertex may have several parents. Claims:

    - ``A``: a level ``i >= 2`` vertex with two or more grandchildren has
      exactly one child that has children;
    - ``B``: a level ``i >= 2`` vertex has at most four descendants in each
      deeper level;
    - ``C``: on a canonical shortest ``u``-``v`` path ``x_0..x_s``,
      ``x_{i+1}`` is the only child of ``x_i`` for ``i`` in ``3..s-4``;
    - ``D``: ``x_{i-1}`` is the only parent of ``x_i`` for ``i`` in ``4..s-3``;
    - ``diameter``: ``s <= 8``; ``size``: at most 103 vertices.

    Index ``i = s-3`` of claim C is also examined; a miss there is logged
    in ``notes``, not counted as a violation.
    """
    if h.n == 0 or not is_connected(h):
        return AuditReport(False, "root is not connected")
    g = square(h)
    delta = max_degree(g)
    if delta > 6:
        return AuditReport(False, f"maximum degree of the square is {delta} > 6", stats={"max_degree": delta})
    rec = find_recognizable_edge(g)
    if rec is not None:
        (a, b), _ = rec
        return AuditReport(False, f"square has a recognizable edge {a} {b}", stats={"max_degree": delta})

    u, v, s = _diameter_pair(h)
    layers = bfs_layering(h, u)
    report = AuditReport(True, checked=["A", "B", "C", "D", "diameter", "size"])
    max_desc = 0
    for i in range(2, s + 1):
        for x in sorted(layers.levels[i]):
            kids = layers.children[x]
            grandkids = set()
            for y in kids:
                grandkids.update(layers.children[y])
            if len(grandkids) >= 2:
                parents_of_grandkids = [y for y in kids if layers.children[y]]
                if len(parents_of_grandkids) != 1:
                    report.violations.append(("A", (x, *parents_of_grandkids)))
            for j, desc in _descendants_by_level(layers, x).items():
                max_desc = max(max_desc, len(desc))
                if len(desc) > 4:
                    report.violations.append(("B", (x, j)))
    p = _canonical_shortest_path(h, u, v)
    for i in range(3, s - 2):
        kids = layers.children[p[i]]
        if kids != (p[i + 1],):
            if i <= s - 4:
                report.violations.append(("C", (i, p[i], *kids)))
            else:
                report.notes.append(("C-wide", (i, p[i], *kids)))
    for i in range(4, s - 2):
        if layers.parents[p[i]] != (p[i - 1],):
            report.violations.append(("D", (i, p[i], *layers.parents[p[i]])))
    if s > DEG6_DIAMETER_LIMIT:
        report.violations.append(("diameter", (u, v)))
    if h.n > DEG6_SIZE_LIMIT:
        report.violations.append(("size", (h.n,)))
    report.stats.update(
        diameter=s,
        diametral_pair=(u, v),
        level_sizes=[len(level) for level in layers.levels],
        max_descendants_per_level=max_desc,
        vertices=h.n,
        max_degree=delta,
    )
    return report


@dataclass(frozen=True)
class SizeCertificate:
    """Proof that a connected graph with maximum degree at most 6 and no recognizable edges has no square root."""

    vertices: int
    limit: int = DEG6_SIZE_LIMIT

    def __str__(self) -> str:
        return f"size-bound-exceeded: {self.vertices} > {self.limit} vertices"


class HypothesisError(ValueError):
    def __init__(self, hypothesis: str, detail: str):
        super().__init__(f"hypothesis '{hypothesis}' fails: {detail}")
        self.hypothesis = hypothesis


def size_certificate_deg6(g: Graph) -> SizeCertificate | None:
    """NO-certificate for ``g`` when it has more than 103 vertices.

    Raises :class:`HypothesisError` naming the first hypothesis that fails
    (``connected``, ``max-degree``, ``no-recognizable-edges``).
    """
    if g.n == 0 or len(components(g)) != 1:
        raise HypothesisError("connected", "graph is empty or disconnected")
    delta = max_degree(g)
    if delta > 6:
        raise HypothesisError("max-degree", f"maximum degree {delta} > 6")
    rec = find_recognizable_edge(g)
    if rec is not None:
        raise HypothesisError("no-recognizable-edges", str(rec[1]))
    if g.n > DEG6_SIZE_LIMIT:
        return SizeCertificate(g.n)
    return None
