"""Error types shared across the toolkit."""

from __future__ import annotations

# Parse error kinds. Kept as plain strings so they are cheap to compare,
# render, and name in .reject vector files.
UNEXPECTED_CHAR = "UnexpectedChar"
UNTERMINATED_STRING = "UnterminatedString"
UNTERMINATED_COMMENT = "UnterminatedComment"
BAD_NUMBER = "BadNumber"
BAD_ESCAPE = "BadEscape"
DEPTH_EXCEEDED = "DepthExceeded"
DUPLICATE_HEADER = "DuplicateHeader"
ROW_TOO_WIDE = "RowTooWide"
ROW_COUNT_MISMATCH = "RowCountMismatch"
TRAILING_DATA = "TrailingData"
BAD_UNICODE_ESCAPE = "BadUnicodeEscape"

PARSE_ERROR_KINDS = frozenset({
    UNEXPECTED_CHAR,
    UNTERMINATED_STRING,
    UNTERMINATED_COMMENT,
    BAD_NUMBER,
    BAD_ESCAPE,
    DEPTH_EXCEEDED,
    DUPLICATE_HEADER,
    ROW_TOO_WIDE,
    ROW_COUNT_MISMATCH,
    TRAILING_DATA,
    BAD_UNICODE_ESCAPE,
})


class ParseError(ValueError):
    """Raised for any malformed document. Carries a kind, byte offset, and detail."""

    def __init__(self, kind: str, offset: int, detail: str):
        assert kind in PARSE_ERROR_KINDS, kind
        self.kind = kind
        self.offset = offset
        self.detail = detail
        super().__init__(f"{kind} at byte {offset}: {detail}")


class StrictJsonViolation(ValueError):
    """Raised by the writer when strict_json=True and the value holds NaN or infinity."""


class PluginFailure(RuntimeError):
    """Raised when an external token-counter subprocess misbehaves."""


class ManifestError(ValueError):
    """Raised when a conformance vector directory violates the manifest format."""

    def __init__(self, path: str, line: int, detail: str):
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: {detail}")
