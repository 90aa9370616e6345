"""Defines explicit resource budgets for the Gröbner machinery."""

import time
from dataclasses import dataclass, field


class BudgetExceededError(RuntimeError):
    """Raised when a computation exceeds one of its resource limits.

    Parameters:
        limit: Name of the exceeded limit, e.g. ``"max_basis_size"``.
        value: The value that tripped the limit.
        bound: The configured bound.
    """

    def __init__(self, limit: str, value: float, bound: float) -> None:
        super().__init__(f"Resource budget exceeded: {limit} reached {value} (bound {bound})")
        self.limit = limit
        self.value = value
        self.bound = bound


@dataclass(frozen=True)
class Budget:
    max_basis_size: int = 5000
    max_degree: int = 40
    max_seconds: float | None = None

    def start(self) -> "BudgetClock":
        return BudgetClock(self)


UNLIMITED = Budget(max_basis_size=10**9, max_degree=10**9, max_seconds=None)


@dataclass
class BudgetClock:
    """Tracks one run against a budget; the wall clock starts at creation."""

    budget: Budget
    started: float = field(default_factory=time.monotonic)

    def check_basis(self, size: int) -> None:
        if size > self.budget.max_basis_size:
            raise BudgetExceededError("max_basis_size", size, self.budget.max_basis_size)

    def check_degree(self, degree: int) -> None:
        if degree > self.budget.max_degree:
            raise BudgetExceededError("max_degree", degree, self.budget.max_degree)

    def check_time(self) -> None:
        if self.budget.max_seconds is None:
            return
        elapsed = time.monotonic() - self.started
        if elapsed > self.budget.max_seconds:
            raise BudgetExceededError("max_seconds", round(elapsed, 3), self.budget.max_seconds)
