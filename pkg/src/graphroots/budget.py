"""Resource limits shared by the exact search routines."""

from __future__ import annotations

import time
from dataclasses import dataclass


class BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class Budget:
    """Limits on search effort. ``None`` means unlimited.

    Node limits make runs reproducible; a time limit is a safety net whose
    outcome can depend on machine speed.
    """

    max_nodes: int | None = None
    max_seconds: float | None = None

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("node budget must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("time budget must be positive")

    def tracker(self) -> "Tracker":
        return Tracker(self)


UNLIMITED = Budget()


class Tracker:
    """Counts expanded nodes against a :class:`Budget`."""

    # Checking the clock on every node is measurably slow.
    CLOCK_EVERY = 256

    def __init__(self, budget: Budget):
        self.budget = budget
        self.nodes = 0
        self.started = time.perf_counter()
        self._deadline = None if budget.max_seconds is None else self.started + budget.max_seconds

    def tick(self) -> None:
        self.nodes += 1
        limit = self.budget.max_nodes
        if limit is not None and self.nodes > limit:
            raise BudgetExhausted
        if self._deadline is not None and self.nodes % self.CLOCK_EVERY == 0:
            if time.perf_counter() > self._deadline:
                raise BudgetExhausted

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.started
