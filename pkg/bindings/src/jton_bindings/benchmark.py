"""Parse-speed comparison against the stdlib json module.

Generates tabular datasets, serializes each to compact JSON, and times
``json.loads`` against ``jton_bindings.loads`` on the same text. Emits one
row per dataset: name, input size, baseline ms, jton ms, speedup. The
speedup column is informational; a pure-Python parser is not expected to
beat the C-accelerated stdlib, the row shape is what downstream tooling
consumes.

Run:  python -m jton_bindings.benchmark [--rows N] [--iters N]
"""

from __future__ import annotations

import argparse
import json
import time

from jton.datasets import generate
from jton.writer import serialize

from . import loads

# row counts sized so the employee payload crosses 500 KiB
DEFAULT_ROWS = {"employees": 7000, "products": 6000, "metrics": 8000}


def time_best(fn, iters: int) -> float:
    fn()  # warmup
    best = float("inf")
    for _ in range(iters):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_dataset(name: str, rows: int, iters: int) -> dict:
    payload = serialize(generate(name, rows, seed=0))
    data = payload.encode()
    baseline = time_best(lambda: json.loads(payload), iters)
    ours = time_best(lambda: loads(data), iters)
    return {
        "dataset": name,
        "rows": rows,
        "bytes": len(data),
        "baseline_ms": baseline * 1e3,
        "jton_ms": ours * 1e3,
        "speedup": baseline / ours if ours else float("inf"),
    }


def run(rows_override: int | None = None, iters: int = 3) -> list:
    results = []
    for name, rows in DEFAULT_ROWS.items():
        results.append(bench_dataset(name, rows_override or rows, iters))
    return results


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rows", type=int, default=None,
                    help="override the per-dataset row count")
    ap.add_argument("--iters", type=int, default=3)
    args = ap.parse_args(argv)
    rows = run(args.rows, args.iters)
    print(f"{'dataset':12} {'size_kb':>8} {'baseline_ms':>12} {'jton_ms':>10} {'speedup':>8}")
    for r in rows:
        print(f"{r['dataset']:12} {r['bytes'] / 1024:8.1f} "
              f"{r['baseline_ms']:12.3f} {r['jton_ms']:10.3f} {r['speedup']:7.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
