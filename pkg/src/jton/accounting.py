"""Token accounting: measure serialized size under pluggable counters and
compare against the analytic savings model.

Counters implement one operation, ``count(text) -> int``. Bytes and
code-point counters are built in; external tokenizers (e.g. a BPE
tokenizer) run as subprocess plugins speaking a newline protocol:
request = decimal payload byte length + ``\\n`` + UTF-8 payload,
response = decimal count + ``\\n``.

The analytic model says a table with n rows and k columns saves
``(n - 1) * k * (mean_header_tokens + struct_tokens)`` tokens over compact
JSON, because every row after the first stops repeating the k keys and
their per-key structure (quotes + colon; about 3 tokens' worth). At byte
level the model is exact once the fixed structural corrections are added,
which ``zen_byte_savings_exact`` does.
"""

from __future__ import annotations

import subprocess
import sys
import threading
from dataclasses import dataclass, field

from .errors import PluginFailure
from .writer import Mode, SerializeOptions, Spacing, plan_grid, serialize

JSON_PRETTY = "json-pretty"
JSON_COMPACT = "json-compact"
ZEN = "zen"
ZEN_BARE = "zen-bare"

_FORMAT_OPTIONS = {
    JSON_PRETTY: SerializeOptions(mode=Mode.JSON_PRETTY),
    JSON_COMPACT: SerializeOptions(mode=Mode.JSON_COMPACT),
    ZEN: SerializeOptions(mode=Mode.ZEN),
    ZEN_BARE: SerializeOptions(mode=Mode.ZEN, bare_strings=True),
}


class ByteCounter:
    name = "bytes"

    def count(self, text: str) -> int:
        return len(text.encode("utf-8"))


class CharCounter:
    name = "chars"

    def count(self, text: str) -> int:
        return len(text)


class PluginCounter:
    """Counter backed by a subprocess; one in-flight request at a time."""

    def __init__(self, path: str):
        self.name = f"plugin:{path}"
        self.path = path
        cmd = [sys.executable, path] if path.endswith(".py") else [path]
        try:
            self._proc = subprocess.Popen(
                cmd, stdin=subprocess.PIPE, stdout=subprocess.PIPE)
        except OSError as e:
            raise PluginFailure(f"cannot start counter plugin {path}: {e}") from e
        self._lock = threading.Lock()

    def count(self, text: str) -> int:
        payload = text.encode("utf-8")
        with self._lock:
            if self._proc.poll() is not None:
                raise PluginFailure(f"counter plugin {self.path} exited")
            try:
                self._proc.stdin.write(b"%d\n" % len(payload))
                self._proc.stdin.write(payload)
                self._proc.stdin.flush()
                line = self._proc.stdout.readline()
            except OSError as e:
                raise PluginFailure(f"counter plugin {self.path} I/O failed: {e}") from e
        if not line:
            raise PluginFailure(f"counter plugin {self.path} closed its output")
        try:
            n = int(line)
        except ValueError:
            raise PluginFailure(
                f"counter plugin {self.path} sent a non-numeric reply {line!r}") from None
        if n < 0:
            raise PluginFailure(f"counter plugin {self.path} sent a negative count")
        return n

    def close(self):
        if self._proc.poll() is None:
            self._proc.stdin.close()
            self._proc.wait(timeout=5)


def get_counter(selector: str):
    """Build a counter from a CLI selector: bytes | chars | plugin:<path>."""
    if selector == "bytes":
        return ByteCounter()
    if selector == "chars":
        return CharCounter()
    if selector.startswith("plugin:"):
        return PluginCounter(selector[len("plugin:"):])
    raise ValueError(f"unknown counter {selector!r}")


def predicted_savings(n: int, k: int, mean_header_tokens: float,
                      struct_tokens: float) -> float:
    """Analytic per-table savings of Zen Grid over compact JSON."""
    if n < 1 or k < 1 or mean_header_tokens < 0:
        raise ValueError("need n >= 1, k >= 1, mean_header_tokens >= 0")
    return (n - 1) * k * (mean_header_tokens + struct_tokens)


def zen_byte_savings_exact(n: int, k: int, header_bytes_total: int,
                           emit_row_count: bool = True) -> int:
    """Exact byte difference, compact JSON minus compact Zen Grid.

    Derivation (all headers identifier-bare, bare_strings/implicit_null off,
    no nested grids): one JSON row costs 2 braces + k-1 commas + per key
    quotes+colon (3 bytes) + key bytes + value bytes, plus a separating
    comma; one Zen row costs a leading ';' + k-1 commas + the same value
    bytes. Value bytes cancel, leaving

        (n-1) * (H + 3k)        header+structure no longer repeated
        + 2n + 2k - 1           braces per row and first-row bookkeeping
        - len(str(n))           the row-count prefix, when emitted

    where H is the total header byte length. The leading term is the
    analytic model with byte-true header cost and struct cost exactly 3.
    """
    d = (n - 1) * (header_bytes_total + 3 * k) + 2 * n + 2 * k - 1
    if emit_row_count:
        d -= len(str(n))
    return d


def calibrate(counter, headers) -> tuple:
    """Measure (mean header tokens, per-key struct tokens) with a counter.

    Struct cost is counted from one quoted-key-plus-colon sample, so the
    analytic prediction uses the counter's own arithmetic, not an assumed
    constant.
    """
    if not headers:
        raise ValueError("need at least one header")
    mean_h = sum(counter.count(h) for h in headers) / len(headers)
    h0 = headers[0]
    struct = counter.count(f'"{h0}":') - counter.count(h0)
    return mean_h, struct


@dataclass
class SavingsReport:
    rows: int | None
    cols: int | None
    counter: str
    sizes: dict = field(default_factory=dict)
    delta_vs_compact: dict = field(default_factory=dict)
    predicted_delta_tokens: float | None = None
    note: str = ""


def savings_report(v, counter) -> SavingsReport:
    """Serialize ``v`` in the four benchmark formats and count each.

    Zen slots are absent when ``v`` is not a grid-eligible array; deltas are
    signed percentages relative to compact JSON.
    """
    plan = plan_grid(v) if type(v) is list else plan_grid([])
    formats = [JSON_PRETTY, JSON_COMPACT]
    if plan.eligible:
        formats += [ZEN, ZEN_BARE]
        report = SavingsReport(rows=len(v), cols=len(plan.headers), counter=counter.name)
        mean_h, struct = calibrate(counter, plan.headers)
        report.predicted_delta_tokens = predicted_savings(
            len(v), len(plan.headers), mean_h, struct)
    else:
        report = SavingsReport(rows=None, cols=None, counter=counter.name,
                               note="input is not Zen Grid eligible; JSON sizes only")
    for fmt in formats:
        report.sizes[fmt] = counter.count(serialize(v, _FORMAT_OPTIONS[fmt]))
    compact = report.sizes[JSON_COMPACT]
    for fmt in formats:
        if compact:
            report.delta_vs_compact[fmt] = (report.sizes[fmt] - compact) / compact * 100.0
        else:
            report.delta_vs_compact[fmt] = 0.0
    return report
