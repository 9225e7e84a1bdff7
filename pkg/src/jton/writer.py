"""Serializer: JSON (pretty or compact) and Zen Grid output.

In Zen mode every array that passes the grid detection heuristic is emitted
as a ``[N: headers; row; row]`` table, recursively; everything else is
compact JSON. Detection requires >=2 elements, all dicts, >=70% of elements
sharing the first element's key set, and (so no data can silently vanish)
every key set a subset of the first's. Rows missing a header serialize that
column as null, which is what the reader pads missing cells with; such rows
therefore reparse with an explicit null where the key was absent.

Float text uses the shortest representation that round-trips binary64
exactly. Non-finite floats serialize as Infinity/-Infinity/NaN literals
unless strict_json=True, which raises instead.
"""

from __future__ import annotations

import enum
import functools
import math
import re
import sys
from dataclasses import dataclass

from .errors import StrictJsonViolation
from .reader import decode_cell

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_ESCAPE_RE = re.compile(r'["\\\x00-\x1f]')
_SHORT_ESCAPES = {
    '"': '\\"', "\\": "\\\\", "\b": "\\b", "\f": "\\f",
    "\n": "\\n", "\r": "\\r", "\t": "\\t",
}
_RESERVED_CELL_WORDS = frozenset({"true", "false", "null", "Infinity", "NaN"})


class Mode(enum.Enum):
    JSON_PRETTY = "json-pretty"
    JSON_COMPACT = "json-compact"
    ZEN = "zen"


class Spacing(enum.Enum):
    COMPACT = "compact"
    SPACED = "spaced"


@dataclass
class SerializeOptions:
    mode: Mode = Mode.JSON_COMPACT
    bare_strings: bool = False      # Zen mode only
    implicit_null: bool = False     # Zen mode only
    emit_row_count: bool = True     # Zen mode only
    spacing: Spacing = Spacing.COMPACT  # Zen mode only
    indent: int = 2                 # pretty mode only
    strict_json: bool = False

    def __post_init__(self):
        if self.indent < 0:
            raise ValueError("indent must be >= 0")


@dataclass
class GridPlan:
    eligible: bool
    headers: list


def plan_grid(arr) -> GridPlan:
    """Decide whether an array serializes as a Zen Grid, and with which headers."""
    if type(arr) is not list or len(arr) < 2:
        return GridPlan(False, [])
    if any(type(el) is not dict for el in arr):
        return GridPlan(False, [])
    headers = list(arr[0].keys())
    if not headers:
        return GridPlan(False, [])
    first_set = frozenset(headers)
    matching = 0
    for el in arr:
        keys = frozenset(el.keys())
        if not keys <= first_set:
            return GridPlan(False, [])  # an extra key would have no column
        if keys == first_set:
            matching += 1
    if matching * 10 < len(arr) * 7:  # the >=70% rule, exact in integers
        return GridPlan(False, [])
    return GridPlan(True, headers)


def escape_string(s: str) -> str:
    """Escape quote, backslash, and control characters; the caller adds quotes."""
    def repl(m):
        c = m.group()
        return _SHORT_ESCAPES.get(c) or "\\u%04x" % ord(c)
    return _ESCAPE_RE.sub(repl, s)


def _quote(s: str) -> str:
    return '"' + escape_string(s) + '"'


@functools.lru_cache(maxsize=4096)
def is_bare_safe(s: str) -> bool:
    """True when a string value may be written unquoted in a grid cell."""
    if not _IDENT_RE.fullmatch(s) or s in _RESERVED_CELL_WORDS:
        return False
    return decode_cell(s.encode("ascii")) == s  # self-check against the reader


def _float_text(f: float, opts: SerializeOptions) -> str:
    if math.isinf(f) or math.isnan(f):
        if opts.strict_json:
            raise StrictJsonViolation(f"cannot serialize {f!r} with strict_json=True")
        if math.isnan(f):
            return "NaN"
        return "Infinity" if f > 0 else "-Infinity"
    return repr(f)


def _scalar_text(v, opts: SerializeOptions) -> str:
    if v is None:
        return "null"
    t = type(v)
    if t is bool:
        return "true" if v else "false"
    if t is int:
        return str(v)
    if t is float:
        return _float_text(v, opts)
    if t is str:
        return _quote(v)
    raise TypeError(f"cannot serialize value of type {t.__name__}")


def _write_compact(v, parts, opts):
    t = type(v)
    if t is list:
        parts.append("[")
        for i, item in enumerate(v):
            if i:
                parts.append(",")
            _write_compact(item, parts, opts)
        parts.append("]")
    elif t is dict:
        parts.append("{")
        first = True
        for k, item in v.items():
            if not isinstance(k, str):
                raise TypeError("object keys must be str")
            if not first:
                parts.append(",")
            first = False
            parts.append(_quote(k))
            parts.append(":")
            _write_compact(item, parts, opts)
        parts.append("}")
    else:
        parts.append(_scalar_text(v, opts))


def _write_pretty(v, parts, depth, opts):
    t = type(v)
    if t is list:
        if not v:
            parts.append("[]")
            return
        pad = " " * (opts.indent * (depth + 1))
        parts.append("[\n")
        for i, item in enumerate(v):
            if i:
                parts.append(",\n")
            parts.append(pad)
            _write_pretty(item, parts, depth + 1, opts)
        parts.append("\n" + " " * (opts.indent * depth) + "]")
    elif t is dict:
        if not v:
            parts.append("{}")
            return
        pad = " " * (opts.indent * (depth + 1))
        parts.append("{\n")
        first = True
        for k, item in v.items():
            if not isinstance(k, str):
                raise TypeError("object keys must be str")
            if not first:
                parts.append(",\n")
            first = False
            parts.append(pad)
            parts.append(_quote(k))
            parts.append(": ")
            _write_pretty(item, parts, depth + 1, opts)
        parts.append("\n" + " " * (opts.indent * depth) + "}")
    else:
        parts.append(_scalar_text(v, opts))


def encode_cell(v, opts: SerializeOptions) -> str:
    """Render one grid cell: None may become empty, strings may drop quotes."""
    if v is None:
        return "" if opts.implicit_null else "null"
    t = type(v)
    if t is str:
        if opts.bare_strings and is_bare_safe(v):
            return v
        return _quote(v)
    if t is list or t is dict:
        sub = []
        _write_zen(v, sub, opts)
        return "".join(sub)
    return _scalar_text(v, opts)


def _write_grid(rows, headers, parts, opts):
    spaced = opts.spacing is Spacing.SPACED
    comma = ", " if spaced else ","
    parts.append("[")
    if opts.emit_row_count:
        parts.append(str(len(rows)))
    parts.append(": " if spaced else ":")
    parts.append(comma.join(
        h if _IDENT_RE.fullmatch(h) else _quote(h) for h in headers))
    for row in rows:
        cells = [encode_cell(row.get(h), opts) for h in headers]
        if opts.implicit_null:
            while cells and cells[-1] == "":
                cells.pop()
            if not cells:
                cells = ["null"]  # a fully empty row has no grammar production
        parts.append("; " if spaced else ";")
        parts.append(comma.join(cells))
    parts.append(" ]" if spaced else "]")


def _write_zen(v, parts, opts):
    t = type(v)
    if t is list:
        plan = plan_grid(v)
        if plan.eligible:
            _write_grid(v, plan.headers, parts, opts)
            return
        parts.append("[")
        for i, item in enumerate(v):
            if i:
                parts.append(",")
            _write_zen(item, parts, opts)
        parts.append("]")
    elif t is dict:
        parts.append("{")
        first = True
        for k, item in v.items():
            if not isinstance(k, str):
                raise TypeError("object keys must be str")
            if not first:
                parts.append(",")
            first = False
            parts.append(_quote(k))
            parts.append(":")
            _write_zen(item, parts, opts)
        parts.append("}")
    else:
        parts.append(_scalar_text(v, opts))


def serialize(v, options: SerializeOptions | None = None) -> str:
    """Serialize a value tree; the output reparses to an equal value."""
    opts = options or SerializeOptions()
    parts = []
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(old_limit + 8192)
    try:
        if opts.mode is Mode.JSON_PRETTY:
            _write_pretty(v, parts, 0, opts)
        elif opts.mode is Mode.ZEN:
            _write_zen(v, parts, opts)
        else:
            _write_compact(v, parts, opts)
    finally:
        sys.setrecursionlimit(old_limit)
    return "".join(parts)
