"""Explicit resource budgets for long-running algebra.

A :class:`Budget` bounds the Gröbner engine (maximal S-pair degree, number of
processed pairs, wall-clock seconds).  Exceeding it raises
:class:`BudgetExhausted`; nothing is ever silently truncated.

Budgets are installed with :func:`use_budget` and consulted by the engine
through :func:`current`.
"""

from __future__ import annotations

import contextlib
import contextvars
import time
from dataclasses import asdict, dataclass, field

__all__ = ["Budget", "BudgetExhausted", "use_budget", "current"]


class BudgetExhausted(RuntimeError):
    """Raised when a computation exceeds its configured budget."""

    def __init__(self, what: str, limit, budget: "Budget | None" = None):
        super().__init__(f"budget exhausted: {what} exceeded {limit}")
        self.what = what
        self.limit = limit
        self.budget = budget


@dataclass
class Budget:
    max_degree: int | None = None
    max_pairs: int | None = None
    seconds: float | None = None
    _deadline: float | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        for name in ("max_degree", "max_pairs", "seconds"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ValueError(f"budget {name} must be positive")

    def start(self) -> "Budget":
        if self.seconds is not None and self._deadline is None:
            self._deadline = time.monotonic() + self.seconds
        return self

    def check_time(self):
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise BudgetExhausted("wall-clock seconds", self.seconds, self)

    def check_degree(self, deg: int):
        if self.max_degree is not None and deg > self.max_degree:
            raise BudgetExhausted("S-pair degree", self.max_degree, self)

    def check_pairs(self, count: int):
        if self.max_pairs is not None and count > self.max_pairs:
            raise BudgetExhausted("processed pairs", self.max_pairs, self)

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("_deadline", None)
        return d


_UNLIMITED = Budget()
_current: contextvars.ContextVar[Budget] = contextvars.ContextVar(
    "logdiv_budget", default=_UNLIMITED
)


def current() -> Budget:
    return _current.get()


@contextlib.contextmanager
def use_budget(budget: Budget | None):
    """Install ``budget`` for the enclosed computations (``None`` = unlimited)."""
    b = (budget or Budget()).start()
    token = _current.set(b)
    try:
        yield b
    finally:
        _current.reset(token)
