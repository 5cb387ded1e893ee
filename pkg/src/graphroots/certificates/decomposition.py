"""Path decompositions: validation, serialization, and the level-triple construction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..graph import Graph, bfs_layering, is_connected, square


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, bags: Iterable[Iterable[int]]) -> "PathDecomposition":
        return cls(tuple(frozenset(b) for b in bags))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def to_text(self) -> str:
        return "".join(" ".join(map(str, sorted(b))) + "\n" for b in self.bags)

    @classmethod
    def from_text(cls, text: str) -> "PathDecomposition":
        return cls.of([int(tok) for tok in line.split()] for line in text.splitlines())


def validate_path_decomposition(g: Graph, pd: PathDecomposition) -> bool:
    """True iff ``pd`` covers every vertex and edge and each vertex occupies a contiguous run of bags."""
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    count: dict[int, int] = {}
    for i, bag in enumerate(pd.bags):
        for v in bag:
            if not 0 <= v < g.n:
                return False
            first.setdefault(v, i)
            last[v] = i
            count[v] = count.get(v, 0) + 1
    if len(first) != g.n:
        return False
    if any(last[v] - first[v] + 1 != count[v] for v in first):
        return False
    for u, v in g.edges():
        # Intervals overlap iff some bag holds both endpoints.
        if max(first[u], first[v]) > min(last[u], last[v]):
            return False
    return True


def bfs_triple_decomposition(h: Graph, source: int) -> PathDecomposition:
    """Bags ``L_i | L_{i+1} | L_{i+2}`` over the BFS levels of ``h`` from ``source``.

    Every edge of the square of ``h`` joins levels at most two apart, so the
    result is a path decomposition of ``square(h)``.
    """
    if h.n == 0 or not is_connected(h):
        raise ValueError("level-triple decomposition needs a connected, non-empty root")
    layers = bfs_layering(h, source)
    s = layers.depth
    bags = [layers.level(i) | layers.level(i + 1) | layers.level(i + 2) for i in range(s + 1)]
    pd = PathDecomposition(tuple(bags))
    assert validate_path_decomposition(square(h), pd)
    return pd


def layout_decomposition(g: Graph, order: list[int]) -> PathDecomposition:
    """Path decomposition induced by a vertex layout.

    Bag ``i`` holds ``order[i]`` plus every earlier vertex that still has a
    neighbor at position ``i`` or later; its width equals the layout's
    vertex separation.
    """
    pos = {v: i for i, v in enumerate(order)}
    last_needed = [pos[v] for v in range(g.n)]
    for u, v in g.edges():
        if pos[u] < pos[v]:
            last_needed[u] = max(last_needed[u], pos[v])
        else:
            last_needed[v] = max(last_needed[v], pos[u])
    bags: list[set[int]] = [set() for _ in order]
    for v in range(g.n):
        for i in range(pos[v], last_needed[v] + 1):
            bags[i].add(v)
    return PathDecomposition.of(bags)
