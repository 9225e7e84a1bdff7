"""Drop-in ``loads``/``dumps`` over the jton core.

``loads(text)`` parses JTON (strict JSON plus comments, unquoted keys,
special numbers, and Zen Grid tables) into plain Python values; Zen Grid
tables arrive as lists of dicts with key order following the header row.
``dumps(value, zen=True, bare_strings=True, implicit_null=True)`` mirrors
the core serializer options as keywords.

Object keys are interned through a per-thread LRU cache by default, so a
large grid's repeated keys share one str object per column; pass
``intern_keys=False`` to opt out (results are equal either way).
"""

from __future__ import annotations

from jton import (
    Mode,
    ParseError,
    ParseOptions,
    RowCountPolicy,
    SerializeOptions,
    Spacing,
    StrictJsonViolation,
    parse_document,
    serialize,
)
from jton.values import INT64_MAX, INT64_MIN

from .intern import InternCache, reset_thread_cache, thread_cache

__version__ = "0.1.0"
__all__ = [
    "JTONDecodeError", "JTONEncodeError", "InternCache", "StrictJsonViolation",
    "dumps", "loads", "reset_thread_cache", "thread_cache", "__version__",
]


class JTONDecodeError(ValueError):
    """Parse failure; carries the error kind and byte offset."""

    def __init__(self, kind: str, offset: int, detail: str):
        self.kind = kind
        self.offset = offset
        self.detail = detail
        super().__init__(f"{kind} at byte {offset}: {detail}")


class JTONEncodeError(TypeError):
    """A value in the tree cannot be serialized; names the offending path."""

    def __init__(self, path: str, detail: str):
        self.path = path
        super().__init__(f"{path}: {detail}")


def loads(text, *, strict_json: bool = False, max_depth: int = 1024,
          lenient_row_count: bool = False, intern_keys: bool = True):
    """Parse a JTON document from str or UTF-8 bytes."""
    options = ParseOptions(
        max_depth=max_depth,
        zen_row_count_policy=(RowCountPolicy.IGNORE if lenient_row_count
                              else RowCountPolicy.STRICT),
        allow_extensions=not strict_json,
    )
    hook = thread_cache().lookup if intern_keys else None
    try:
        return parse_document(text, options, key_intern=hook)
    except ParseError as e:
        raise JTONDecodeError(e.kind, e.offset, e.detail) from None


def dumps(value, *, zen: bool = False, bare_strings: bool = False,
          implicit_null: bool = False, pretty: bool = False, indent: int = 2,
          spaced: bool = False, emit_row_count: bool = True,
          strict_json: bool = False) -> str:
    """Serialize a Python value tree to JTON text.

    ``zen=True`` turns eligible arrays of dicts into Zen Grid tables;
    ``pretty=True`` selects indented JSON instead of compact. Unsupported
    types, non-string dict keys, and ints outside signed 64 bits raise
    JTONEncodeError naming the offending path.
    """
    import sys
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(old_limit + 8192)
    try:
        normalized = _normalize(value, "$")
    finally:
        sys.setrecursionlimit(old_limit)
    if zen:
        mode = Mode.ZEN
    elif pretty:
        mode = Mode.JSON_PRETTY
    else:
        mode = Mode.JSON_COMPACT
    options = SerializeOptions(
        mode=mode,
        bare_strings=bare_strings,
        implicit_null=implicit_null,
        emit_row_count=emit_row_count,
        spacing=Spacing.SPACED if spaced else Spacing.COMPACT,
        indent=indent,
        strict_json=strict_json,
    )
    return serialize(normalized, options)


def _normalize(v, path: str):
    """Validate one host value and map it onto the core value model."""
    if v is None or v is True or v is False:
        return v
    t = type(v)
    if t is int:
        if not INT64_MIN <= v <= INT64_MAX:
            raise JTONEncodeError(path, f"integer {v} exceeds signed 64-bit range")
        return v
    if t is float:
        return v
    if t is str:
        return _checked_str(v, path)
    if t is list or t is tuple:
        return [_normalize(x, f"{path}[{i}]") for i, x in enumerate(v)]
    if t is dict:
        out = {}
        for k, x in v.items():
            if type(k) is not str:
                raise JTONEncodeError(f"{path}.{k!r}",
                                      f"object keys must be str, not {type(k).__name__}")
            out[k] = _normalize(x, f"{path}.{k}")
        return out
    if isinstance(v, bool):  # bool subclasses that dodge the identity checks
        return bool(v)
    if isinstance(v, int):
        return _normalize(int(v), path)
    if isinstance(v, float):
        return float(v)
    if isinstance(v, str):
        return _checked_str(str(v), path)
    if isinstance(v, (list, tuple)):
        return [_normalize(x, f"{path}[{i}]") for i, x in enumerate(v)]
    if isinstance(v, dict):
        return _normalize(dict(v), path)
    raise JTONEncodeError(path, f"cannot serialize {type(v).__name__}")


def _checked_str(v: str, path: str) -> str:
    try:
        v.encode("utf-8")
    except UnicodeEncodeError:
        raise JTONEncodeError(path, "string contains unpaired surrogates") from None
    return v
