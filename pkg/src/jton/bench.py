"""Timing helpers for the bench subcommand and the performance tests."""

from __future__ import annotations

import time
from dataclasses import dataclass


@dataclass
class BenchRow:
    label: str
    bytes_processed: int
    seconds_per_iter: float

    @property
    def bytes_per_second(self) -> float:
        if self.seconds_per_iter <= 0:
            return float("inf")
        return self.bytes_processed / self.seconds_per_iter

    @property
    def mb_per_second(self) -> float:
        return self.bytes_per_second / 1e6


def time_call(fn, iters: int, warmup: int = 1) -> float:
    """Average seconds per call over ``iters`` timed runs."""
    for _ in range(warmup):
        fn()
    t0 = time.perf_counter()
    for _ in range(iters):
        fn()
    return (time.perf_counter() - t0) / max(iters, 1)


def bench_row(label: str, fn, nbytes: int, iters: int, warmup: int = 1) -> BenchRow:
    return BenchRow(label, nbytes, time_call(fn, iters, warmup))
