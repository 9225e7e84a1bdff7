import json
import math
import sys

import pytest
from hypothesis import given, settings, strategies as st

from jton.errors import ParseError
from jton.reader import (
    ParseOptions,
    RowCountPolicy,
    decode_cell,
    parse_document,
    parse_number,
    parse_string,
)
from jton.values import values_equal

STRICT = ParseOptions(allow_extensions=False)


def err(data, options=None):
    with pytest.raises(ParseError) as ei:
        parse_document(data, options)
    return ei.value


# --- documents -------------------------------------------------------------

def test_listing_table():
    v = parse_document(
        '[3: id, name, score; 1, "Alice", 95; 2, "Bob", 87; 3, "Carol", 92 ]')
    assert v == [
        {"id": 1, "name": "Alice", "score": 95},
        {"id": 2, "name": "Bob", "score": 87},
        {"id": 3, "name": "Carol", "score": 92},
    ]


def test_unquoted_keys():
    assert parse_document('{name: "Alice", age: 30}') == {"name": "Alice", "age": 30}


def test_comment_and_specials():
    v = parse_document("// note\n[1, Infinity, NaN]")
    assert v[0] == 1 and v[1] == math.inf and math.isnan(v[2])


def test_truncated_array():
    e = err("[1,2,")
    assert e.kind in ("UnexpectedChar", "TrailingData")
    assert e.offset == 5


def test_trailing_data():
    e = err("1 2")
    assert e.kind == "TrailingData" and e.offset == 2


def test_empty_input():
    assert err("").kind == "UnexpectedChar"
    assert err("   ").kind == "UnexpectedChar"


def test_error_offsets_bounded():
    for doc in ["[1,", '{"a":', '"abc', "-01", "[1 2]", "", "/*", "[: a; 1; ]"]:
        e = err(doc)
        assert 0 <= e.offset <= len(doc), doc


def test_error_rendering_format():
    e = err("-01")
    assert str(e).startswith("BadNumber at byte 0: ")


def test_invalid_utf8():
    e = err(b'["\xff"]')
    assert e.kind == "UnexpectedChar"


def test_duplicate_keys_last_wins():
    assert parse_document('{"a":1,"a":2}') == {"a": 2}


def test_key_order_preserved():
    assert list(parse_document('{"z":1,"a":2,"m":3}')) == ["z", "a", "m"]


def test_key_intern_hook():
    seen = []
    def intern(k):
        seen.append(k)
        return sys.intern(k)
    v = parse_document('[{"a":1},{"a":2}]', key_intern=intern)
    assert v == [{"a": 1}, {"a": 2}]
    assert seen == ["a", "a"]


# --- zen grid --------------------------------------------------------------

def test_zen_two_rows():
    assert parse_document("[2: h1, h2; 1, 2; 3, 4]") == [
        {"h1": 1, "h2": 2}, {"h1": 3, "h2": 4}]


def test_zen_missing_cells_pad_null():
    assert parse_document("[: a, b; 1]") == [{"a": 1, "b": None}]


def test_zen_nested_cell():
    # expansion oracle: equivalent JSON is [{"a": {"x": [1,2]}}]
    assert parse_document('[1: a; {"x": [1,2]}]') == \
        parse_document('[{"a": {"x": [1,2]}}]')


def test_zen_row_count_policies():
    e = err("[5: a; 1]")
    assert e.kind == "RowCountMismatch"
    lenient = ParseOptions(zen_row_count_policy=RowCountPolicy.IGNORE)
    assert parse_document("[5: a; 1]", lenient) == [{"a": 1}]


def test_zen_row_too_wide():
    assert err("[1: a; 1, 2]").kind == "RowTooWide"


def test_zen_duplicate_header():
    assert err("[2: a, a; 1, 2; 3, 4]").kind == "DuplicateHeader"
    assert err('[1: "a", a; 1, 2]').kind == "DuplicateHeader"


def test_zen_trailing_semicolon_rejected():
    assert err("[: a; 1; ]").kind == "UnexpectedChar"


def test_zen_empty_row_between_semicolons():
    assert parse_document("[: a, b; ; 1]") == [
        {"a": None, "b": None}, {"a": 1, "b": None}]


def test_zen_quoted_headers_protect_delimiters():
    assert parse_document('[: "a,b", "x;y"; 1, 2]') == [{"a,b": 1, "x;y": 2}]


def test_zen_cells():
    v = parse_document("[: a, b, c, d, e; Alice, true, , -Infinity, \"q\"]")
    assert v == [{"a": "Alice", "b": True, "c": None, "d": -math.inf, "e": "q"}]


def test_zen_cell_bad_token():
    assert err("[: a; 12ab]").kind == "UnexpectedChar"


def test_zen_dispatch_not_confused_by_numbers():
    assert parse_document("[3, 4]") == [3, 4]
    assert parse_document("[3 , 4]") == [3, 4]
    assert parse_document("[10]") == [10]
    # digits then colon means a grid even with spacing or comments between
    assert parse_document("[2 /*rows*/ : a; 1; 2]") == [{"a": 1}, {"a": 2}]


def test_zen_grid_in_cell():
    assert parse_document("[1: a; [2: x; 7; 8]]") == [{"a": [{"x": 7}, {"x": 8}]}]


def test_zen_strict_mode_rejects():
    assert err("[2: a; 1; 2]", STRICT).kind == "UnexpectedChar"
    assert err("[: a; 1]", STRICT).kind == "UnexpectedChar"


def test_parse_zen_grid_standalone():
    from jton.reader import parse_zen_grid
    from jton.scanner import scan

    data = b'{"t": [2: a; 1; 2]}'
    index = scan(data)
    assert parse_zen_grid(data, index, start_offset=6) == [{"a": 1}, {"a": 2}]
    plain = b"[1, 2]"
    with pytest.raises(ParseError) as ei:
        parse_zen_grid(plain, scan(plain), 0)
    assert ei.value.kind == "UnexpectedChar"


# --- numbers ---------------------------------------------------------------

@pytest.mark.parametrize("text", ["-01", "1.", "0.e1", "+1", ".5", "-", "Infinit"])
def test_parse_number_rejects(text):
    with pytest.raises(ParseError) as ei:
        parse_number(text.encode())
    assert ei.value.kind == "BadNumber"


def test_parse_number_values():
    assert parse_number(b"0") == 0 and isinstance(parse_number(b"0"), int)
    assert parse_number(b"-0") == 0
    assert parse_number(b"1e2") == 100.0 and isinstance(parse_number(b"1e2"), float)
    assert parse_number(b"-Infinity") == -math.inf
    assert math.isnan(parse_number(b"NaN"))
    assert parse_number(b"9223372036854775807") == 2**63 - 1
    assert isinstance(parse_number(b"9223372036854775807"), int)
    assert parse_number(b"-9223372036854775808") == -(2**63)
    assert isinstance(parse_number(b"-9223372036854775808"), int)


def test_int_overflow_becomes_float():
    # one past signed-64 max, checked against Python's own conversion
    v = parse_number(b"9223372036854775808")
    assert isinstance(v, float) and v == float(9223372036854775808)
    assert v == 9.223372036854776e18
    doc = parse_document("[9223372036854775808, -9223372036854775809]")
    assert all(isinstance(x, float) for x in doc)


def test_document_number_strictness():
    for text in ["-01", "1.", "0.e1"]:
        assert err(text).kind == "BadNumber"
    for text in ["Infinity", "-Infinity", "NaN"]:
        parse_document(text)


# --- strings ---------------------------------------------------------------

def test_parse_string_escapes():
    assert parse_string(b'"a\\nb"') == "a\nb"
    assert parse_string(b'"\\u0041"') == "A"
    assert parse_string(b'"\\"\\\\\\/\\b\\f\\n\\r\\t"') == '"\\/\b\f\n\r\t'


def test_surrogate_pair():
    # (0xD83D - 0xD800) << 10 | (0xDE00 - 0xDC00) + 0x10000 == 0x1F600
    assert parse_string(b'"\\ud83d\\ude00"') == "\U0001f600"


def test_bad_escapes():
    with pytest.raises(ParseError) as ei:
        parse_string(b'"\\q"')
    assert ei.value.kind == "BadEscape"
    for text, kind in [
        (b'"\\ud800"', "BadUnicodeEscape"),
        (b'"\\udc00"', "BadUnicodeEscape"),
        (b'"\\uZZZZ"', "BadUnicodeEscape"),
        (b'"\\u12"', "BadUnicodeEscape"),
    ]:
        with pytest.raises(ParseError) as ei:
            parse_string(text)
        assert ei.value.kind == kind


def test_raw_control_rejected():
    assert err(b'"a\x01b"').kind == "UnexpectedChar"
    assert err(b'"a\nb"').kind == "UnexpectedChar"


# --- cells -----------------------------------------------------------------

def test_decode_cell():
    assert decode_cell(b"Alice") == "Alice"
    assert decode_cell(b"") is None
    assert decode_cell(b"true") is True
    assert decode_cell(b"false") is False
    assert decode_cell(b"null") is None
    assert decode_cell(b"Infinity") == math.inf
    assert math.isnan(decode_cell(b"NaN"))
    assert decode_cell(b"-5") == -5
    assert decode_cell(b"2.5") == 2.5
    assert decode_cell(b"Infinityx") == "Infinityx"  # identifier, not special
    with pytest.raises(ParseError) as ei:
        decode_cell(b"12ab")
    assert ei.value.kind == "UnexpectedChar"


# --- options ---------------------------------------------------------------

def test_max_depth():
    doc = "[" * 1025 + "]" * 1025
    e = err(doc)
    assert e.kind == "DepthExceeded"
    assert parse_document("[" * 1024 + "]" * 1024, ParseOptions()) is not None
    shallow = ParseOptions(max_depth=2)
    assert err("[[[1]]]", shallow).kind == "DepthExceeded"
    assert parse_document("[[1]]", shallow) == [[1]]
    with pytest.raises(ValueError):
        ParseOptions(max_depth=0)


def test_strict_mode_rejects_extensions():
    assert err("// c\n1", STRICT).kind == "UnexpectedChar"
    assert err("/* c */ 1", STRICT).kind == "UnexpectedChar"
    assert err("{a: 1}", STRICT).kind == "UnexpectedChar"
    assert err("Infinity", STRICT).kind == "UnexpectedChar"
    assert err("NaN", STRICT).kind == "UnexpectedChar"
    assert err("-Infinity", STRICT).kind == "BadNumber"
    assert parse_document('{"a": 1}', STRICT) == {"a": 1}


def test_monotone_cursors():
    trace = []
    parse_document(
        '{"a": [2: x, y; 1, "s"; 2, [1,2]], "b": {"c": 3}} // end',
        cursor_trace=trace)
    last = {}
    assert trace, "trace should record consumed index positions"
    for cls, pos in trace:
        assert last.get(cls, -1) < pos, "cursor moved backwards"
        last[cls] = pos


# --- superset property -----------------------------------------------------

json_values = st.recursive(
    st.none() | st.booleans()
    | st.integers(min_value=-(2**63), max_value=2**63 - 1)
    | st.floats(allow_nan=False, allow_infinity=False) | st.text(max_size=10),
    lambda children: st.lists(children, max_size=4)
    | st.dictionaries(st.text(max_size=6), children, max_size=4),
    max_leaves=25,
)


@settings(max_examples=200, deadline=None)
@given(json_values, st.sampled_from([(",", ":"), (", ", ": "), None]))
def test_superset_of_strict_json(v, seps):
    if seps is None:
        text = json.dumps(v, indent=2)
    else:
        text = json.dumps(v, separators=seps)
    parsed = parse_document(text)
    assert values_equal(parsed, json.loads(text), nan_equal=True)
    # and the strict-mode grammar accepts it too
    assert values_equal(parse_document(text, STRICT), parsed, nan_equal=True)
