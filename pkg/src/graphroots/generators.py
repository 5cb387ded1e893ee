"""Deterministic constructions: walls, subdivisions, ladders, planted roots."""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .graph import Graph, bits, max_degree, square


class Profile(str, Enum):
    """Degree class required of the square of a planted root."""

    LE5 = "le5"
    LE6 = "le6"
    EQ7 = "eq7"
    UNBOUNDED = "unbounded"

    def admits(self, degree: int) -> bool:
        if self is Profile.LE5:
            return degree <= 5
        if self is Profile.LE6:
            return degree <= 6
        if self is Profile.EQ7:
            return degree == 7
        return True


@dataclass(frozen=True)
class PlantedInstance:
    root: Graph
    square: Graph
    profile: Profile
    seed: int


def wall_rows(h: int) -> list[list[int]]:
    """x-coordinates of the vertices in each row of a wall of height ``h``.

    Rows ``0..h``; interior rows span ``0..2h+1``. The outer rows drop the
    single column that would otherwise be a pendant vertex.
    """
    width = 2 * h + 1
    rows = []
    for y in range(h + 1):
        xs = list(range(width + 1))
        if y == 0:
            xs = xs[1:]
        elif y == h:
            xs = xs[:-1] if h % 2 == 0 else xs[1:]
        rows.append(xs)
    return rows


def wall(h: int) -> Graph:
    """The brick wall of height ``h``, vertex ids assigned row by row, left to right.

    Vertical edges between rows ``y`` and ``y+1`` sit at the columns ``x``
    with ``x + y`` odd. For ``h`` in 2..4 this reproduces the usual drawings
    (16, 30 and 48 vertices); larger heights continue the same rule.
    """
    if h < 2:
        raise ValueError("wall height must be at least 2")
    rows = wall_rows(h)
    ids: dict[tuple[int, int], int] = {}
    for y, xs in enumerate(rows):
        for x in xs:
            ids[(x, y)] = len(ids)
    edges = []
    for y, xs in enumerate(rows):
        edges.extend((ids[(a, y)], ids[(b, y)]) for a, b in zip(xs, xs[1:]))
        if y < h:
            for x in xs:
                if (x + y) % 2 == 1 and (x, y + 1) in ids:
                    edges.append((ids[(x, y)], ids[(x, y + 1)]))
    return Graph(len(ids), edges)


def subdivide(g: Graph) -> Graph:
    """Replace each edge by a path of length two through a new midpoint.

    Original ids are kept; midpoints are numbered from ``g.n`` upward in
    canonical edge order.
    """
    edges = []
    for k, (u, v) in enumerate(g.edges()):
        mid = g.n + k
        edges.append((u, mid))
        edges.append((mid, v))
    return Graph(g.n + g.m, edges)


def ladder(n: int) -> Graph:
    """Two paths ``u_1..u_n`` (ids ``0..n-1``) and ``v_1..v_n`` (ids ``n..2n-1``) joined by rungs."""
    if n < 1:
        raise ValueError("a ladder needs at least one rung")
    edges = [(i, n + i) for i in range(n)]
    edges += [(i, i + 1) for i in range(n - 1)]
    edges += [(n + i, n + i + 1) for i in range(n - 1)]
    return Graph(2 * n, edges)


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def circulant(n: int, jumps: tuple[int, ...]) -> Graph:
    edges = {tuple(sorted((i, (i + j) % n))) for i in range(n) for j in jumps}
    return Graph(n, edges)


def random_tree(rng: random.Random, n: int, max_deg: int | None = None) -> Graph:
    """Random recursive tree; each new vertex attaches to an earlier one with spare degree."""
    deg = [0] * n
    edges = []
    for v in range(1, n):
        choices = [u for u in range(v) if max_deg is None or deg[u] < max_deg]
        u = rng.choice(choices)
        deg[u] += 1
        deg[v] += 1
        edges.append((u, v))
    return Graph(n, edges)


def _square_degree_cap(profile: Profile) -> int | None:
    return {Profile.LE5: 5, Profile.LE6: 6, Profile.EQ7: 7}.get(profile)


def _random_root(rng: random.Random, n: int, profile: Profile) -> Graph | None:
    """Random tree grown one vertex at a time, then random chords.

    Attachments and chords that would push the square past the profile's
    degree cap are skipped, so only the exact-degree profile can fail here.
    """
    cap = _square_degree_cap(profile)

    def fits(adj: list[int]) -> bool:
        if cap is None:
            return True
        for v in range(len(adj)):
            ball = adj[v]
            for u in bits(adj[v]):
                ball |= adj[u]
            if (ball & ~(1 << v)).bit_count() > cap:
                return False
        return True

    adj = [0] * n
    for v in range(1, n):
        hosts = list(range(v))
        rng.shuffle(hosts)
        for u in hosts:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            if fits(adj[: v + 1]):
                break
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        else:
            return None
    for _ in range(rng.randint(0, max(1, n // 3))):
        if n < 2:
            break
        u, v = rng.sample(range(n), 2)
        if adj[u] >> v & 1:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        if not fits(adj):
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
    return Graph.from_adjacency(adj)


def planted(seed: int, n: int, profile: Profile | str = Profile.UNBOUNDED, attempts: int = 2000) -> PlantedInstance:
    """A random connected root ``H`` on ``n`` vertices whose square fits ``profile``.

    The construction is a random tree plus random extra edges, with steps
    that break the profile's degree cap skipped and whole attempts rejected
    otherwise. The only randomness is a ``random.Random`` seeded from
    ``(seed, n, profile)``, so results are reproducible across runs and
    platforms.
    """
    profile = Profile(profile)
    if n < 1:
        raise ValueError("planted instances need at least one vertex")
    rng = random.Random(f"planted:{seed}:{n}:{profile.value}")
    for _ in range(attempts):
        h = _random_root(rng, n, profile)
        if h is None:
            continue
        g = square(h)
        if profile.admits(max_degree(g)):
            return PlantedInstance(h, g, profile, seed)
    raise RuntimeError(
        f"no root with square in profile {profile.value} found for n={n} after {attempts} attempts; "
        "try a smaller n or a looser profile"
    )
