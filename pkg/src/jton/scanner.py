"""Stage-1 structural scan.

One pass over the input classifies every byte and produces a StructuralIndex:
per-class position vectors for the eight structural characters
``{ } [ ] : ; , "`` plus bitmasks covering string interiors and comments.
Stage 2 (the reader) then jumps between recorded positions instead of
re-scanning bytes.

Two implementations are provided. ``scan_structural_scalar`` is the
reference: a plain byte-at-a-time state machine. ``scan_structural_accelerated``
classifies the whole buffer with numpy (nibble lookup tables, the Python
analog of wide-register shuffles) and must produce bit-identical output on
every input; it falls back to the scalar path when numpy is missing or
``JTON_FORCE_SCALAR=1`` is set.

Escape semantics are defined by global backslash-run parity over the raw
bytes: a quote is a string delimiter iff the run of backslashes immediately
before it has even length. This matches the intuitive in-string rule on all
well-formed documents and keeps the two paths exactly equivalent on garbage
input (where stage 2 rejects anyway). Comment delimiters are recognized on
raw bytes; a block of input containing ``/`` takes a slower sparse sweep so
comment state never enters the bulk-classified path.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import ParseError, UNTERMINATED_COMMENT, UNTERMINATED_STRING

try:
    import numpy as _np
except ImportError:  # pragma: no cover - numpy is a hard dep, but keep the fallback honest
    _np = None

CLASS_BYTES = b'{}[]:;,"'
N_CLASSES = len(CLASS_BYTES)
QUOTE_CLASS = CLASS_BYTES.index(b'"'[0])

_QUOTE = 0x22
_BACKSLASH = 0x5C
_SLASH = 0x2F
_STAR = 0x2A
_LF = 0x0A
_CR = 0x0D

# byte value -> class index, or -1
_CLASS_OF = [-1] * 256
for _i, _b in enumerate(CLASS_BYTES):
    _CLASS_OF[_b] = _i


@dataclass
class StructuralIndex:
    """Positions of structural characters plus string/comment interior masks.

    ``positions[k]`` is a strictly increasing list of byte offsets whose byte
    is ``CLASS_BYTES[k]`` and which lie outside both masks. Masks are one
    byte per input byte (0/1); string_mask excludes the delimiting quotes,
    comment_mask includes the comment delimiters.
    """

    length: int
    positions: tuple
    string_mask: bytes
    comment_mask: bytes

    def positions_for(self, ch: str):
        return self.positions[CLASS_BYTES.index(ch.encode()[0])]


def force_scalar() -> bool:
    """True when the JTON_FORCE_SCALAR environment variable disables the fast path."""
    v = os.environ.get("JTON_FORCE_SCALAR", "")
    return v not in ("", "0")


def scan_structural_scalar(data: bytes) -> StructuralIndex:
    """Reference scan: one state machine pass over the bytes."""
    n = len(data)
    positions = tuple([] for _ in range(N_CLASSES))
    string_mask = bytearray(n)
    comment_mask = bytearray(n)

    DEFAULT, IN_STRING, IN_LINE, IN_BLOCK = 0, 1, 2, 3
    state = DEFAULT
    open_pos = 0
    esc = False  # current byte is preceded by an odd backslash run
    i = 0
    while i < n:
        b = data[i]
        escaped_here = esc
        esc = (b == _BACKSLASH) and not esc
        if state == DEFAULT:
            cls = _CLASS_OF[b]
            if cls >= 0:
                positions[cls].append(i)
                if b == _QUOTE and not escaped_here:
                    state = IN_STRING
                    open_pos = i
            elif b == _SLASH and i + 1 < n:
                nxt = data[i + 1]
                if nxt == _SLASH:
                    state = IN_LINE
                    open_pos = i
                    i += 2
                    esc = False
                    continue
                if nxt == _STAR:
                    state = IN_BLOCK
                    open_pos = i
                    i += 2
                    esc = False
                    continue
        elif state == IN_STRING:
            if b == _QUOTE and not escaped_here:
                positions[QUOTE_CLASS].append(i)
                for j in range(open_pos + 1, i):
                    string_mask[j] = 1
                state = DEFAULT
        elif state == IN_LINE:
            if b == _LF or b == _CR:
                for j in range(open_pos, i):
                    comment_mask[j] = 1
                state = DEFAULT
                esc = False
        else:  # IN_BLOCK
            if b == _STAR and i + 1 < n and data[i + 1] == _SLASH:
                for j in range(open_pos, i + 2):
                    comment_mask[j] = 1
                state = DEFAULT
                i += 2
                esc = False
                continue
        i += 1

    if state == IN_STRING:
        raise ParseError(UNTERMINATED_STRING, open_pos, "string is never closed")
    if state == IN_BLOCK:
        raise ParseError(UNTERMINATED_COMMENT, open_pos, "block comment is never closed")
    if state == IN_LINE:
        for j in range(open_pos, n):
            comment_mask[j] = 1

    return StructuralIndex(n, positions, bytes(string_mask), bytes(comment_mask))


# --- accelerated path -------------------------------------------------------

def _build_nibble_tables():
    lo = _np.zeros(16, _np.uint8)
    hi = _np.zeros(16, _np.uint8)
    for k, b in enumerate(CLASS_BYTES):
        lo[b & 0x0F] |= 1 << k
        hi[b >> 4] |= 1 << k
    return lo, hi


if _np is not None:
    _LO_TABLE, _HI_TABLE = _build_nibble_tables()
    _BIT_TO_CLASS = {1 << k: k for k in range(N_CLASSES)}


def _escaped_mask(arr):
    """Boolean mask: byte i is preceded by an odd-length backslash run."""
    n = len(arr)
    is_bs = arr == _BACKSLASH
    if not is_bs.any():
        return _np.zeros(n, bool)
    idx = _np.arange(n, dtype=_np.int64)
    last_non_bs = _np.maximum.accumulate(_np.where(is_bs, -1, idx))
    run_before = _np.empty(n, _np.int64)
    run_before[0] = 0
    run_before[1:] = idx[1:] - 1 - last_non_bs[:-1]
    return (run_before & 1) == 1


def _span_mask(n, starts, ends):
    """Boolean mask set on [start, end) for each span, via a delta/cumsum fill."""
    delta = _np.zeros(n + 1, _np.int32)
    if len(starts):
        delta[starts] += 1
        delta[ends] -= 1
    return _np.cumsum(delta[:n]) > 0


def compute_string_mask(data: bytes) -> bytes:
    """String-interior bitmask by escape-run parity, ignoring comments.

    This is the quote-pairing building block of stage 1: bits are set for
    bytes strictly between an opening quote and its matching unescaped
    closing quote. Raises UnterminatedString (with the opener's offset) on
    an odd number of unescaped quotes.
    """
    if _np is None:
        return _string_mask_scalar(data)
    arr = _np.frombuffer(data, _np.uint8)
    n = len(arr)
    qpos = _np.flatnonzero((arr == _QUOTE) & ~_escaped_mask(arr))
    if len(qpos) % 2:
        raise ParseError(UNTERMINATED_STRING, int(qpos[-1]), "string is never closed")
    return _span_mask(n, qpos[0::2] + 1, qpos[1::2]).astype(_np.uint8).tobytes()


def _string_mask_scalar(data: bytes) -> bytes:
    mask = bytearray(len(data))
    esc = False
    open_pos = -1
    for i, b in enumerate(data):
        escaped_here = esc
        esc = (b == _BACKSLASH) and not esc
        if b == _QUOTE and not escaped_here:
            if open_pos < 0:
                open_pos = i
            else:
                for j in range(open_pos + 1, i):
                    mask[j] = 1
                open_pos = -1
    if open_pos >= 0:
        raise ParseError(UNTERMINATED_STRING, open_pos, "string is never closed")
    return bytes(mask)


def _sweep_with_slashes(data, n, qpos, spos):
    """Resolve string/comment spans when ``/`` is present.

    Walks only quote and slash events in byte order, mirroring the scalar
    state machine; comment ends are located with C-speed find().
    """
    str_starts, str_ends = [], []  # delimiter offsets (open, close)
    com_starts, com_ends = [], []  # byte ranges, end exclusive
    qi, si = 0, 0
    nq, ns = len(qpos), len(spos)
    while True:
        q = qpos[qi] if qi < nq else n
        s = spos[si] if si < ns else n
        if q >= n and s >= n:
            break
        if q < s:
            if qi + 1 >= nq:
                raise ParseError(UNTERMINATED_STRING, int(q), "string is never closed")
            close = qpos[qi + 1]
            str_starts.append(q)
            str_ends.append(close)
            qi += 2
            while si < ns and spos[si] < close:
                si += 1
        else:
            nxt = data[s + 1] if s + 1 < n else -1
            if nxt == _SLASH:
                e1 = data.find(b"\n", s + 2)
                e2 = data.find(b"\r", s + 2)
                cands = [e for e in (e1, e2) if e != -1]
                end = min(cands) if cands else n
                com_starts.append(s)
                com_ends.append(end)
            elif nxt == _STAR:
                c = data.find(b"*/", s + 2)
                if c == -1:
                    raise ParseError(UNTERMINATED_COMMENT, int(s),
                                     "block comment is never closed")
                end = c + 2
                com_starts.append(s)
                com_ends.append(end)
            else:
                si += 1
                continue
            while si < ns and spos[si] < end:
                si += 1
            while qi < nq and qpos[qi] < end:
                qi += 1
    return str_starts, str_ends, com_starts, com_ends


def scan_structural_accelerated(data: bytes) -> StructuralIndex:
    """Bulk-classified scan; output is bit-identical to the scalar path."""
    if _np is None or force_scalar():
        return scan_structural_scalar(data)
    n = len(data)
    if n == 0:
        return StructuralIndex(0, tuple([] for _ in range(N_CLASSES)), b"", b"")
    arr = _np.frombuffer(data, _np.uint8)

    qpos = _np.flatnonzero((arr == _QUOTE) & ~_escaped_mask(arr))
    if data.find(b"/") == -1:
        if len(qpos) % 2:
            raise ParseError(UNTERMINATED_STRING, int(qpos[-1]), "string is never closed")
        string_inside = _span_mask(n, qpos[0::2] + 1, qpos[1::2])
        comment_inside = _np.zeros(n, bool)
    else:
        spos = _np.flatnonzero(arr == _SLASH)
        ss, se, cs, ce = _sweep_with_slashes(data, n, qpos.tolist(), spos.tolist())
        ss = _np.asarray(ss, _np.int64)
        se = _np.asarray(se, _np.int64)
        string_inside = _span_mask(n, ss + 1, se) if len(ss) else _np.zeros(n, bool)
        comment_inside = _span_mask(n, _np.asarray(cs, _np.int64),
                                    _np.asarray(ce, _np.int64)) if cs else _np.zeros(n, bool)

    masked = string_inside | comment_inside
    code = _LO_TABLE[arr & 0x0F] & _HI_TABLE[arr >> 4]
    struct_pos = _np.flatnonzero(code)
    struct_pos = struct_pos[~masked[struct_pos]]
    bits = code[struct_pos]
    positions = tuple(struct_pos[bits == (1 << k)].tolist() for k in range(N_CLASSES))

    return StructuralIndex(
        n,
        positions,
        string_inside.astype(_np.uint8).tobytes(),
        comment_inside.astype(_np.uint8).tobytes(),
    )


def scan(data: bytes) -> StructuralIndex:
    """Default entry point: accelerated with transparent scalar fallback."""
    return scan_structural_accelerated(data)
