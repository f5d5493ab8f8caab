"""Multiply-accumulate counting for the benchmark suite.

Counting is opt-in via the mac_counter() context manager. When no counter
is active the hook is a single ContextVar read per operation call (not per
element), so the training and scoring paths pay nothing measurable.
ContextVars do not leak into worker threads started inside the context,
which keeps parallel fold evaluation out of the books.
"""
from __future__ import annotations

import contextvars
from contextlib import contextmanager

# Pass names used by the core. "means_pass" and "scores_pass" are the two
# full sweeps over the training matrix; the rest are per-model overhead.
TRAIN_PASSES = ("means_pass", "weights", "scores_pass", "taus", "bias")
DATA_PASSES = ("means_pass", "scores_pass")


class MacCounter:
    """Tally of multiply-accumulate operations, keyed by pass name."""

    __slots__ = ("counts",)

    def __init__(self) -> None:
        self.counts: dict[str, int] = {}

    def add(self, pass_name: str, n: int) -> None:
        self.counts[pass_name] = self.counts.get(pass_name, 0) + int(n)

    def of(self, *pass_names: str) -> int:
        return sum(self.counts.get(name, 0) for name in pass_names)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def train_macs(self) -> int:
        return self.of(*TRAIN_PASSES)

    @property
    def data_pass_macs(self) -> int:
        """MACs spent streaming the training matrix (two passes per model)."""
        return self.of(*DATA_PASSES)

    @property
    def predict_macs(self) -> int:
        return self.of("predict")

    def __repr__(self) -> str:
        return f"MacCounter({self.counts!r})"


_ACTIVE: contextvars.ContextVar[MacCounter | None] = contextvars.ContextVar(
    "sefr_mac_counter", default=None
)


def add_macs(pass_name: str, n: int) -> None:
    """Record n MACs against the active counter, if any."""
    counter = _ACTIVE.get()
    if counter is not None:
        counter.add(pass_name, n)


@contextmanager
def mac_counter():
    """Enable MAC counting for the duration of the with-block."""
    counter = MacCounter()
    token = _ACTIVE.set(counter)
    try:
        yield counter
    finally:
        _ACTIVE.reset(token)
