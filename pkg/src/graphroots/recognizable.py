"""Detection of recognizable edges.

An edge ``uv`` is recognizable when the common neighborhood of ``u`` and
``v`` splits into two non-empty, mutually non-adjacent cliques ``X`` and
``Y`` such that every other neighbor of ``u`` sees some vertex of ``X`` and
no vertex of ``Y``, and symmetrically every other neighbor of ``v`` sees
some vertex of ``Y`` and no vertex of ``X``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Edge, Graph, bits


@dataclass(frozen=True)
class RecognizablePartition:
    u: int
    v: int
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __str__(self) -> str:
        xs = ", ".join(map(str, self.x))
        ys = ", ".join(map(str, self.y))
        return f"edge {self.u} {self.v} | X = {{{xs}}} | Y = {{{ys}}}"


def _is_clique(adj: tuple[int, ...], mask: int) -> bool:
    return all((adj[w] | 1 << w) & mask == mask for w in bits(mask))


def _mask_components(adj: tuple[int, ...], mask: int) -> list[int]:
    comps = []
    rest = mask
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            reach = 0
            for w in bits(frontier):
                reach |= adj[w]
            frontier = reach & mask & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def satisfies_conditions(g: Graph, u: int, v: int, x_mask: int, y_mask: int) -> bool:
    """Check all six conditions for the split ``(x_mask, y_mask)`` of the common neighborhood."""
    adj = g.adjacency
    if not x_mask or not y_mask or x_mask & y_mask:
        return False
    if x_mask | y_mask != adj[u] & adj[v]:
        return False
    if not (_is_clique(adj, x_mask) and _is_clique(adj, y_mask)):
        return False
    if any(adj[w] & y_mask for w in bits(x_mask)):
        return False
    xy = x_mask | y_mask
    for w in bits(adj[u] & ~xy & ~(1 << v)):
        if adj[w] & y_mask or not adj[w] & x_mask:
            return False
    for w in bits(adj[v] & ~xy & ~(1 << u)):
        if adj[w] & x_mask or not adj[w] & y_mask:
            return False
    return True


def recognizable_partition(g: Graph, u: int, v: int) -> RecognizablePartition | None:
    """Witness ``(X, Y)`` for the edge ``uv``, or None.

    Two distinct components of the common neighborhood are non-adjacent, so
    each component must be a clique placed wholly on one side; we enumerate
    the side assignments of components. Among several witnesses the one
    whose sorted ``X`` is lexicographically least is returned.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    adj = g.adjacency
    common = adj[u] & adj[v]
    comps = _mask_components(adj, common)
    if len(comps) < 2 or not all(_is_clique(adj, c) for c in comps):
        return None
    best = None
    for assign in range(1, (1 << len(comps)) - 1):
        x_mask = 0
        for k, comp in enumerate(comps):
            if assign >> k & 1:
                x_mask |= comp
        y_mask = common & ~x_mask
        if satisfies_conditions(g, u, v, x_mask, y_mask):
            x = tuple(bits(x_mask))
            if best is None or x < best.x:
                best = RecognizablePartition(u, v, x, tuple(bits(y_mask)))
    return best


def recognizable_edges(g: Graph) -> Iterator[tuple[Edge, RecognizablePartition]]:
    """All recognizable edges with witnesses, in canonical edge order."""
    for e in g.edges():
        witness = recognizable_partition(g, *e)
        if witness is not None:
            yield e, witness


def find_recognizable_edge(g: Graph) -> tuple[Edge, RecognizablePartition] | None:
    return next(recognizable_edges(g), None)
