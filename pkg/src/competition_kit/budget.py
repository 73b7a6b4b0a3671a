import logging
import time
from dataclasses import dataclass

from . import settings
from .exceptions import BudgetExceeded

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Budget:
    """
    Limits for an exponential search.

    Attributes:
        max_ms (int, optional): Wall-clock limit in milliseconds, None means unlimited.
        max_nodes (int, optional): Limit on search nodes, None means unlimited.
        max_vertices (int, optional): Largest graph the exact competition search
            accepts.
    """

    max_ms: int | None = settings.DEFAULT_BUDGET_MS
    max_nodes: int | None = settings.DEFAULT_BUDGET_NODES
    max_vertices: int | None = settings.DEFAULT_EXACT_MAX_VERTICES

    def __post_init__(self):
        for name in ("max_ms", "max_nodes", "max_vertices"):
            value = getattr(self, name)
            if value is not None and (not isinstance(value, int) or value < 0):
                raise ValueError(f"{name} must be a non-negative integer or None")

    @classmethod
    def unlimited(cls):
        return cls(max_ms=None, max_nodes=None, max_vertices=None)


class SearchTracker:
    """
    Counts search nodes against a budget.

    A tracker is shared by every solver call that belongs to one top-level
    computation, so `nodes` is the total work done for it.
    """

    # Only look at the clock every so many nodes.
    CLOCK_INTERVAL = 1024

    def __init__(self, budget=None):
        self.budget = budget or Budget.unlimited()
        self.nodes = 0
        self._started = time.perf_counter()
        self._deadline = None
        if self.budget.max_ms is not None:
            self._deadline = self._started + self.budget.max_ms / 1000

    @property
    def elapsed_ms(self):
        return (time.perf_counter() - self._started) * 1000

    def tick(self):
        """
        Account for one search node.

        Raises:
            BudgetExceeded: If the node or time budget is exhausted.
        """
        self.nodes += 1
        if self.budget.max_nodes is not None and self.nodes > self.budget.max_nodes:
            logger.warning("Node budget of %d exhausted", self.budget.max_nodes)
            raise BudgetExceeded(f"node budget of {self.budget.max_nodes} exhausted")
        if (
            self._deadline is not None
            and self.nodes % self.CLOCK_INTERVAL == 0
            and time.perf_counter() > self._deadline
        ):
            logger.warning("Time budget of %d ms exhausted", self.budget.max_ms)
            raise BudgetExceeded(f"time budget of {self.budget.max_ms} ms exhausted")
