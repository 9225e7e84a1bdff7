"""Stage-2 parser: index-jumping over the structural index.

The parser never re-scans bytes for structure. It walks a merged, sorted
stream of the scanner's positions with monotonically advancing cursors;
finding the next delimiter is a list lookup. Scalar tokens are sliced
between events and decoded by a three-way router (integer / float / special
literal). Zen Grid tables materialize as lists of dicts: header i maps to
cell i, short rows pad with None, and nested containers inside cells are
parsed by ordinary recursion so their commas and semicolons never split
cells.

Grammar: JSON, plus unquoted object keys, // and /* */ comments,
Infinity/-Infinity/NaN, and Zen Grid ``[N: headers; row; row]`` tables.
With ``allow_extensions=False`` only strict JSON is accepted.
"""

from __future__ import annotations

import enum
import re
import sys
from bisect import bisect_left
from dataclasses import dataclass

from .errors import (
    ParseError,
    BAD_ESCAPE,
    BAD_NUMBER,
    BAD_UNICODE_ESCAPE,
    DEPTH_EXCEEDED,
    DUPLICATE_HEADER,
    ROW_COUNT_MISMATCH,
    ROW_TOO_WIDE,
    TRAILING_DATA,
    UNEXPECTED_CHAR,
)
from .scanner import CLASS_BYTES, scan
from .values import INT64_MAX, INT64_MIN

_LBRACE, _RBRACE, _LBRACKET, _RBRACKET, _COLON, _SEMI, _COMMA, _QUOTE = range(8)

_WS_RE = re.compile(rb"[ \t\r\n]*")
_TOKEN_RE = re.compile(rb'[^ \t\r\n{}\[\]:;,"]+')
_NUMBER_RE = re.compile(rb"-?(?:0|[1-9][0-9]*)(\.[0-9]+)?([eE][+-]?[0-9]+)?")
_IDENT_RE = re.compile(rb"[A-Za-z_][A-Za-z0-9_]*")
_CTRL_RE = re.compile(rb"[\x00-\x1f]")

_SPECIAL_FLOATS = {
    b"Infinity": float("inf"),
    b"-Infinity": float("-inf"),
    b"NaN": float("nan"),
}
_SHORT_ESCAPES = {
    0x22: '"', 0x5C: "\\", 0x2F: "/",
    0x62: "\b", 0x66: "\f", 0x6E: "\n", 0x72: "\r", 0x74: "\t",
}


class RowCountPolicy(enum.Enum):
    STRICT = "strict"
    IGNORE = "ignore"


@dataclass
class ParseOptions:
    max_depth: int = 1024
    zen_row_count_policy: RowCountPolicy = RowCountPolicy.STRICT
    allow_extensions: bool = True

    def __post_init__(self):
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")


DEFAULT_OPTIONS = ParseOptions()


def parse_number(slice_: bytes, allow_specials: bool = True):
    """Decode one number lexeme: int for <=19-digit integers fitting signed
    64 bits, float for fractions/exponents/specials/overflow.

    Strictly rejects malformed forms (-01, 1., 0.e1, +1, .5, lone -).
    """
    if isinstance(slice_, str):
        slice_ = slice_.encode()
    if allow_specials:
        special = _SPECIAL_FLOATS.get(slice_)
        if special is not None:
            return special
    m = _NUMBER_RE.fullmatch(slice_)
    if m is None:
        raise ParseError(BAD_NUMBER, 0, f"malformed number {slice_!r}")
    if m.group(1) or m.group(2):
        return float(slice_)
    v = int(slice_)
    if INT64_MIN <= v <= INT64_MAX:
        return v
    return float(slice_)


def _decode_string(data: bytes, start: int, end: int) -> str:
    """Decode string content bytes data[start:end] (between the quotes)."""
    out = []
    i = start
    while True:
        j = data.find(b"\\", i, end)
        chunk_end = j if j >= 0 else end
        chunk = data[i:chunk_end]
        ctrl = _CTRL_RE.search(chunk)
        if ctrl:
            raise ParseError(UNEXPECTED_CHAR, i + ctrl.start(),
                             "unescaped control character in string")
        out.append(chunk.decode("utf-8"))
        if j < 0:
            return "".join(out)
        # j points at a backslash; the closing quote is unescaped, so an
        # escape sequence never runs off the end of the slice
        c = data[j + 1] if j + 1 < end else -1
        short = _SHORT_ESCAPES.get(c)
        if short is not None:
            out.append(short)
            i = j + 2
            continue
        if c != 0x75:  # not \u
            raise ParseError(BAD_ESCAPE, j, f"invalid escape \\{chr(c) if c >= 0 else ''}")
        cp = _hex4(data, j + 2, end)
        i = j + 6
        if 0xD800 <= cp <= 0xDBFF:
            if data[i:i + 2] != b"\\u":
                raise ParseError(BAD_UNICODE_ESCAPE, j, "lone high surrogate")
            low = _hex4(data, i + 2, end)
            if not 0xDC00 <= low <= 0xDFFF:
                raise ParseError(BAD_UNICODE_ESCAPE, j, "high surrogate not followed by low")
            cp = 0x10000 + ((cp - 0xD800) << 10) + (low - 0xDC00)
            i += 6
        elif 0xDC00 <= cp <= 0xDFFF:
            raise ParseError(BAD_UNICODE_ESCAPE, j, "lone low surrogate")
        out.append(chr(cp))


_HEX4_RE = re.compile(rb"[0-9a-fA-F]{4}")


def _hex4(data: bytes, at: int, end: int) -> int:
    h = data[at:at + 4]
    if len(h) != 4 or at + 4 > end:
        raise ParseError(BAD_UNICODE_ESCAPE, at - 2, "truncated \\u escape")
    if not _HEX4_RE.fullmatch(h):  # int() would tolerate signs and underscores
        raise ParseError(BAD_UNICODE_ESCAPE, at - 2,
                         f"non-hex digits in \\u escape {h!r}")
    return int(h, 16)


def parse_string(slice_: bytes) -> str:
    """Decode one complete string literal slice (including both quotes)."""
    if isinstance(slice_, str):
        slice_ = slice_.encode()
    if not slice_ or slice_[0] != 0x22:
        raise ParseError(UNEXPECTED_CHAR, 0, "expected a string literal")
    close = _find_string_end(slice_, 0)
    if close != len(slice_) - 1:
        raise ParseError(TRAILING_DATA, close + 1, "bytes after string literal")
    return _decode_string(slice_, 1, close)


def _find_string_end(data: bytes, open_pos: int) -> int:
    esc = False
    for i in range(open_pos + 1, len(data)):
        b = data[i]
        if esc:
            esc = False
        elif b == 0x5C:
            esc = True
        elif b == 0x22:
            return i
    from .errors import UNTERMINATED_STRING
    raise ParseError(UNTERMINATED_STRING, open_pos, "string is never closed")


def decode_cell(token, offset: int = 0):
    """Decode one Zen Grid cell token (whitespace already stripped).

    Empty -> None; reserved literals decode as their typed values; other
    identifier-shaped tokens are strings; anything else must be a valid
    number lexeme.
    """
    if isinstance(token, str):
        token = token.encode()
    if token == b"":
        return None
    if token == b"true":
        return True
    if token == b"false":
        return False
    if token == b"null":
        return None
    special = _SPECIAL_FLOATS.get(token)
    if special is not None:
        return special
    if _IDENT_RE.fullmatch(token):
        return token.decode("ascii")
    try:
        return parse_number(token)
    except ParseError:
        raise ParseError(UNEXPECTED_CHAR, offset,
                         f"cell token {token!r} is neither an identifier nor a value") from None


class _Parser:
    def __init__(self, data: bytes, index, options: ParseOptions, key_intern, trace):
        self.data = data
        self.n = index.length
        self.cmask = index.comment_mask
        self.options = options
        self.key_intern = key_intern
        self.trace = trace
        self.depth = 0
        # merge the eight position vectors into one sorted event stream
        pairs = []
        for cls, plist in enumerate(index.positions):
            pairs.extend((p, cls) for p in plist)
        pairs.sort()
        self.epos = [p for p, _ in pairs]
        self.ecls = [c for _, c in pairs]
        self.ei = 0

    # -- low-level cursor machinery ------------------------------------

    def _consume(self, pos: int, want_cls: int):
        ei = self.ei
        epos = self.epos
        if ei >= len(epos) or epos[ei] != pos:
            ei = bisect_left(epos, pos, ei)
        assert ei < len(epos) and epos[ei] == pos and self.ecls[ei] == want_cls, \
            (pos, want_cls)
        if self.trace is not None:
            self.trace.append((want_cls, pos))
        self.ei = ei + 1

    def skip_trivia(self, pos: int) -> int:
        data, n, cmask = self.data, self.n, self.cmask
        while pos < n:
            pos = _WS_RE.match(data, pos).end()
            if pos < n and cmask[pos]:
                nxt = cmask.find(b"\x00", pos)
                pos = nxt if nxt >= 0 else n
            else:
                break
        return pos

    def token_at(self, pos: int):
        m = _TOKEN_RE.match(self.data, pos)
        if m is None:
            raise ParseError(UNEXPECTED_CHAR, pos,
                             f"unexpected character {chr(self.data[pos])!r}")
        end = m.end()
        c = self.cmask.find(b"\x01", pos, end)
        if c != -1:
            end = c
        return self.data[pos:end], end

    def _enter(self, open_pos: int):
        self.depth += 1
        if self.depth > self.options.max_depth:
            raise ParseError(DEPTH_EXCEEDED, open_pos,
                             f"nesting deeper than max_depth={self.options.max_depth}")

    # -- values ---------------------------------------------------------

    def parse_value_at(self, pos: int):
        if pos >= self.n:
            raise ParseError(UNEXPECTED_CHAR, self.n, "expected a value")
        b = self.data[pos]
        if b == 0x7B:  # {
            return self.parse_object(pos)
        if b == 0x5B:  # [
            return self.parse_array_or_grid(pos)
        if b == 0x22:  # "
            return self.parse_string_at(pos)
        tok, end = self.token_at(pos)
        return self.decode_value_token(tok, pos), end

    def decode_value_token(self, tok: bytes, pos: int):
        if tok == b"true":
            return True
        if tok == b"false":
            return False
        if tok == b"null":
            return None
        first = tok[0]
        ext = self.options.allow_extensions
        if first == 0x2D or 0x30 <= first <= 0x39:  # - or digit
            try:
                return parse_number(tok, allow_specials=ext)
            except ParseError as e:
                raise ParseError(BAD_NUMBER, pos + e.offset, e.detail) from None
        if ext and first in (0x49, 0x4E):  # I, N
            try:
                return parse_number(tok)
            except ParseError as e:
                raise ParseError(BAD_NUMBER, pos + e.offset, e.detail) from None
        raise ParseError(UNEXPECTED_CHAR, pos, f"unexpected token {tok!r}")

    def parse_string_at(self, pos: int):
        self._consume(pos, _QUOTE)
        # the interior is fully masked, so the very next event is the closer
        assert self.ei < len(self.epos) and self.ecls[self.ei] == _QUOTE
        close = self.epos[self.ei]
        self._consume(close, _QUOTE)
        return _decode_string(self.data, pos + 1, close), close + 1

    def parse_object(self, open_pos: int):
        self._consume(open_pos, _LBRACE)
        self._enter(open_pos)
        obj = {}
        p = self.skip_trivia(open_pos + 1)
        if p < self.n and self.data[p] == 0x7D:
            self._consume(p, _RBRACE)
            self.depth -= 1
            return obj, p + 1
        while True:
            if p >= self.n:
                raise ParseError(UNEXPECTED_CHAR, self.n, "unterminated object")
            b = self.data[p]
            if b == 0x22:
                key, p = self.parse_string_at(p)
            elif self.options.allow_extensions:
                tok, end = self.token_at(p)
                if not _IDENT_RE.fullmatch(tok):
                    raise ParseError(UNEXPECTED_CHAR, p, "expected object key")
                key = tok.decode("ascii")
                p = end
            else:
                raise ParseError(UNEXPECTED_CHAR, p, "expected quoted object key")
            if self.key_intern is not None:
                key = self.key_intern(key)
            p = self.skip_trivia(p)
            if p >= self.n or self.data[p] != 0x3A:
                raise ParseError(UNEXPECTED_CHAR, min(p, self.n), "expected ':' after key")
            self._consume(p, _COLON)
            p = self.skip_trivia(p + 1)
            value, p = self.parse_value_at(p)
            obj[key] = value  # duplicate keys collapse last-wins
            p = self.skip_trivia(p)
            if p >= self.n:
                raise ParseError(UNEXPECTED_CHAR, self.n, "unterminated object")
            b = self.data[p]
            if b == 0x2C:
                self._consume(p, _COMMA)
                p = self.skip_trivia(p + 1)
                continue
            if b == 0x7D:
                self._consume(p, _RBRACE)
                self.depth -= 1
                return obj, p + 1
            raise ParseError(UNEXPECTED_CHAR, p, "expected ',' or '}' in object")

    def parse_array_or_grid(self, open_pos: int):
        self._consume(open_pos, _LBRACKET)
        self._enter(open_pos)
        p = self.skip_trivia(open_pos + 1)
        if self.options.allow_extensions and p < self.n:
            b = self.data[p]
            if b == 0x3A:
                return self.parse_zen(open_pos, None, p, p)
            if 0x30 <= b <= 0x39:
                q = p + 1
                while q < self.n and 0x30 <= self.data[q] <= 0x39:
                    q += 1
                p2 = self.skip_trivia(q)
                if p2 < self.n and self.data[p2] == 0x3A:
                    return self.parse_zen(open_pos, int(self.data[p:q]), p, p2)
        return self.parse_plain_array(open_pos, p)

    def parse_plain_array(self, open_pos: int, p: int):
        items = []
        if p < self.n and self.data[p] == 0x5D:
            self._consume(p, _RBRACKET)
            self.depth -= 1
            return items, p + 1
        while True:
            value, p = self.parse_value_at(p)
            items.append(value)
            p = self.skip_trivia(p)
            if p >= self.n:
                raise ParseError(UNEXPECTED_CHAR, self.n, "unterminated array")
            b = self.data[p]
            if b == 0x2C:
                self._consume(p, _COMMA)
                p = self.skip_trivia(p + 1)
                continue
            if b == 0x5D:
                self._consume(p, _RBRACKET)
                self.depth -= 1
                return items, p + 1
            raise ParseError(UNEXPECTED_CHAR, p, "expected ',' or ']' in array")

    def parse_zen(self, open_pos: int, declared, count_pos: int, colon_pos: int):
        self._consume(colon_pos, _COLON)
        p = self.skip_trivia(colon_pos + 1)
        headers = []
        seen = set()
        while True:
            if p >= self.n:
                raise ParseError(UNEXPECTED_CHAR, self.n, "unterminated Zen Grid header row")
            hstart = p
            if self.data[p] == 0x22:
                h, p = self.parse_string_at(p)
            else:
                tok, end = self.token_at(p)
                if not _IDENT_RE.fullmatch(tok):
                    raise ParseError(UNEXPECTED_CHAR, p, "expected a Zen Grid header")
                h = tok.decode("ascii")
                p = end
            if h in seen:
                raise ParseError(DUPLICATE_HEADER, hstart, f"duplicate header {h!r}")
            seen.add(h)
            if self.key_intern is not None:
                h = self.key_intern(h)
            headers.append(h)
            p = self.skip_trivia(p)
            if p >= self.n:
                raise ParseError(UNEXPECTED_CHAR, self.n, "unterminated Zen Grid")
            b = self.data[p]
            if b == 0x2C:
                self._consume(p, _COMMA)
                p = self.skip_trivia(p + 1)
                continue
            if b in (0x3B, 0x5D):
                break
            raise ParseError(UNEXPECTED_CHAR, p, "expected ',', ';', or ']' after header")

        k = len(headers)
        rows = []
        while self.data[p] == 0x3B:
            self._consume(p, _SEMI)
            p = self.skip_trivia(p + 1)
            if p >= self.n:
                raise ParseError(UNEXPECTED_CHAR, self.n, "unterminated Zen Grid row")
            if self.data[p] == 0x5D:
                # grammar has no empty-row production before the closer
                raise ParseError(UNEXPECTED_CHAR, p, "trailing ';' before ']'")
            cells = []
            row_done = False
            while not row_done:
                if p >= self.n:
                    raise ParseError(UNEXPECTED_CHAR, self.n, "unterminated Zen Grid row")
                cell_start = p
                b = self.data[p]
                if b in (0x2C, 0x3B, 0x5D):
                    value = None
                else:
                    value, p = self.parse_cell(p)
                    p = self.skip_trivia(p)
                    if p >= self.n:
                        raise ParseError(UNEXPECTED_CHAR, self.n, "unterminated Zen Grid row")
                    b = self.data[p]
                if len(cells) == k:
                    raise ParseError(ROW_TOO_WIDE, cell_start,
                                     f"row has more than {k} cells")
                cells.append(value)
                if b == 0x2C:
                    self._consume(p, _COMMA)
                    p = self.skip_trivia(p + 1)
                    continue
                if b in (0x3B, 0x5D):
                    row_done = True
                    continue
                raise ParseError(UNEXPECTED_CHAR, p, "expected ',', ';', or ']' in row")
            rows.append(dict(zip(headers, cells + [None] * (k - len(cells)))))

        # here data[p] == ']'
        self._consume(p, _RBRACKET)
        self.depth -= 1
        if (declared is not None
                and self.options.zen_row_count_policy is RowCountPolicy.STRICT
                and declared != len(rows)):
            raise ParseError(ROW_COUNT_MISMATCH, count_pos,
                             f"declared {declared} rows, found {len(rows)}")
        return rows, p + 1

    def parse_cell(self, pos: int):
        b = self.data[pos]
        if b in (0x7B, 0x5B, 0x22):
            return self.parse_value_at(pos)
        tok, end = self.token_at(pos)
        return decode_cell(tok, pos), end


def parse_zen_grid(data, index, start_offset: int = 0,
                   options: ParseOptions | None = None):
    """Parse one Zen Grid table starting at the ``[`` at ``start_offset``.

    ``index`` is the structural index of the whole input. The bracket must
    dispatch as a grid (``[`` followed, modulo trivia, by ``:`` or an
    unsigned integer then ``:``); a plain array raises UnexpectedChar.
    Returns the list of row dicts.
    """
    if isinstance(data, str):
        data = data.encode("utf-8")
    opts = options or DEFAULT_OPTIONS
    parser = _Parser(data, index, opts, None, None)
    if start_offset >= parser.n or data[start_offset] != 0x5B:
        raise ParseError(UNEXPECTED_CHAR, start_offset, "expected '[' of a Zen Grid")
    parser._consume(start_offset, _LBRACKET)
    parser._enter(start_offset)
    p = parser.skip_trivia(start_offset + 1)
    if p < parser.n:
        b = data[p]
        if b == 0x3A:
            value, _ = parser.parse_zen(start_offset, None, p, p)
            return value
        if 0x30 <= b <= 0x39:
            q = p + 1
            while q < parser.n and 0x30 <= data[q] <= 0x39:
                q += 1
            p2 = parser.skip_trivia(q)
            if p2 < parser.n and data[p2] == 0x3A:
                value, _ = parser.parse_zen(start_offset, int(data[p:q]), p, p2)
                return value
    raise ParseError(UNEXPECTED_CHAR, p if p < parser.n else parser.n,
                     "bracket does not open a Zen Grid")


def parse_document(data, options: ParseOptions | None = None, *,
                   key_intern=None, cursor_trace=None):
    """Parse one complete document and return its value.

    ``data`` may be str or UTF-8 bytes. Raises ParseError on any malformed
    input; ``cursor_trace`` (a list) collects (class, position) pairs for
    index-cursor instrumentation; ``key_intern`` is an optional
    str -> str hook applied to every decoded object key.
    """
    if isinstance(data, str):
        data = data.encode("utf-8")
    else:
        data = bytes(data)
        try:
            data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(UNEXPECTED_CHAR, e.start, "invalid UTF-8") from None
    opts = options or DEFAULT_OPTIONS

    index = scan(data)
    if not opts.allow_extensions:
        c = index.comment_mask.find(b"\x01")
        if c != -1:
            raise ParseError(UNEXPECTED_CHAR, c, "comments are not allowed in strict JSON")

    parser = _Parser(data, index, opts, key_intern, cursor_trace)
    old_limit = sys.getrecursionlimit()
    need = opts.max_depth * 6 + old_limit
    if need > old_limit:
        sys.setrecursionlimit(need)
    try:
        pos = parser.skip_trivia(0)
        if pos >= parser.n:
            raise ParseError(UNEXPECTED_CHAR, parser.n, "expected a value")
        value, pos = parser.parse_value_at(pos)
        pos = parser.skip_trivia(pos)
        if pos < parser.n:
            raise ParseError(TRAILING_DATA, pos, "data after the top-level value")
        return value
    finally:
        sys.setrecursionlimit(old_limit)
