import pytest

from ..budget import Budget, SearchTracker
from ..exceptions import BudgetExceeded


class TestBudget:
    def test_defaults_come_from_settings(self):
        budget = Budget()
        assert budget.max_ms == 10_000
        assert budget.max_nodes == 10_000_000
        assert budget.max_vertices == 10

    def test_unlimited(self):
        assert Budget.unlimited() == Budget(
            max_ms=None, max_nodes=None, max_vertices=None
        )

    @pytest.mark.parametrize("field", ["max_ms", "max_nodes", "max_vertices"])
    @pytest.mark.parametrize("value", [-1, 1.5, "10"])
    def test_rejects_invalid_limits(self, field, value):
        with pytest.raises(ValueError):
            Budget(**{field: value})


class TestSearchTracker:
    def test_counts_nodes(self):
        tracker = SearchTracker()
        for _ in range(5):
            tracker.tick()
        assert tracker.nodes == 5

    def test_node_limit(self):
        tracker = SearchTracker(Budget(max_ms=None, max_nodes=3))
        for _ in range(3):
            tracker.tick()
        with pytest.raises(BudgetExceeded, match="node budget of 3"):
            tracker.tick()

    def test_time_limit_is_checked_at_the_clock_interval(self):
        tracker = SearchTracker(Budget(max_ms=0, max_nodes=None))
        with pytest.raises(BudgetExceeded, match="time budget"):
            for _ in range(SearchTracker.CLOCK_INTERVAL):
                tracker.tick()
        assert tracker.nodes == SearchTracker.CLOCK_INTERVAL

    def test_elapsed_time_grows(self):
        tracker = SearchTracker()
        assert tracker.elapsed_ms >= 0
