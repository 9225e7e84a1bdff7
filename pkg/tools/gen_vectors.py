#!/usr/bin/env python3
"""Materialize the conformance vector corpus under src/jton/conformance_vectors.

Run from the repository root:  python3 tools/gen_vectors.py

Every expectation is computed by an oracle independent of the package
reader: strict-JSON expectations come from Python's json module, Zen Grid
expectations from the mechanical expansion oracle in tests/zen_oracle.py.
The corpus is committed; re-running regenerates it deterministically.
"""

from __future__ import annotations

import json
import math
import random
import shutil
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from zen_oracle import random_table  # noqa: E402

OUT = ROOT / "src" / "jton" / "conformance_vectors"
SPECIAL_KEY = "__jton_special__"

vectors = []  # (category, name, input_bytes, kind, payload)


def accept(category, name, text, value):
    data = text.encode() if isinstance(text, str) else text
    vectors.append((category, name, data, "accept", expected_json(value)))


def reject(category, name, text, kind):
    data = text.encode() if isinstance(text, str) else text
    vectors.append((category, name, data, "reject", kind))


def roundtrip(category, name, text, modes):
    data = text.encode() if isinstance(text, str) else text
    vectors.append((category, name, data, "roundtrip", "\n".join(modes) + "\n"))


def expected_json(value) -> str:
    def fix(v):
        if isinstance(v, float):
            if math.isnan(v):
                return {SPECIAL_KEY: "nan"}
            if math.isinf(v):
                return {SPECIAL_KEY: "inf" if v > 0 else "-inf"}
        if isinstance(v, dict):
            return {k: fix(x) for k, x in v.items()}
        if isinstance(v, list):
            return [fix(x) for x in v]
        return v
    return json.dumps(fix(value), ensure_ascii=True, allow_nan=False)


def strict(category, name, text):
    """Accept vector whose expected value is json.loads(text) (the oracle)."""
    accept(category, name, text, json.loads(text))


# --------------------------------------------------------------------------
# strict_json: the base grammar
# --------------------------------------------------------------------------

def build_strict_json():
    c = "strict_json"
    strict(c, "scalar_true", "true")
    strict(c, "scalar_false", "false")
    strict(c, "scalar_null", "null")
    strict(c, "scalar_zero", "0")
    strict(c, "scalar_string", '"hello"')
    strict(c, "empty_array", "[]")
    strict(c, "empty_object", "{}")
    strict(c, "array_spaces", "[ 1 , 2 , 3 ]")
    strict(c, "array_newlines", "[\n1,\n2\n]")
    strict(c, "array_heterogeneous", '[1,"two",3.5,true,null,[],{}]')
    strict(c, "array_nested", "[[[[1]]]]")
    strict(c, "object_basic", '{"a":1,"b":2}')
    strict(c, "object_nested", '{"a":{"b":{"c":[1,2,3]}}}')
    strict(c, "object_empty_key", '{"":1}')
    strict(c, "object_duplicate_key_last_wins", '{"a":"first","a":"second"}')
    strict(c, "object_key_order", '{"z":1,"a":2,"m":3}')
    strict(c, "leading_trailing_ws", " \t\r\n[1] \t\r\n")
    strict(c, "lonely_int", "42")
    strict(c, "lonely_negative", "-42")
    strict(c, "lonely_float", "3.25")
    strict(c, "lonely_string_unicode", '"é字\U0001f600"')
    strict(c, "deep_mixed", '[{"a":[{"b":[1,2,{"c":null}]}]},false]')
    strict(c, "whitespace_only_string", '"   "')
    strict(c, "string_with_brackets", '"[1,2]{3:4};"')
    strict(c, "array_of_empties", '[[],{},[],{}]')
    strict(c, "object_many_types", '{"i":1,"f":2.5,"s":"x","b":true,"n":null,"a":[],"o":{}}')
    strict(c, "crlf_whitespace", '{"a":\r\n1}')

    reject(c, "trailing_comma_array", "[1,2,]", "UnexpectedChar")
    reject(c, "trailing_comma_object", '{"a":1,}', "UnexpectedChar")
    reject(c, "leading_comma_array", "[,1]", "UnexpectedChar")
    reject(c, "double_comma", "[1,,2]", "UnexpectedChar")
    reject(c, "unclosed_array", "[1,2", "UnexpectedChar")
    reject(c, "unclosed_object", '{"a":1', "UnexpectedChar")
    reject(c, "colon_in_array", '["a": 1]', "UnexpectedChar")
    reject(c, "missing_colon", '{"a" 1}', "UnexpectedChar")
    reject(c, "missing_value", '{"a":}', "UnexpectedChar")
    reject(c, "double_colon", '{"a"::1}', "UnexpectedChar")
    reject(c, "non_string_key_number", "{1:1}", "UnexpectedChar")
    reject(c, "mismatched_brackets", '["a"}', "UnexpectedChar")
    reject(c, "mismatched_braces", '{"a":1]', "UnexpectedChar")
    reject(c, "two_documents", "[1] [2]", "TrailingData")
    reject(c, "trailing_garbage", "1 x", "TrailingData")
    reject(c, "empty_input", "", "UnexpectedChar")
    reject(c, "whitespace_only", "  \n\t ", "UnexpectedChar")
    reject(c, "bare_word", "nul", "UnexpectedChar")
    reject(c, "capital_true", "True", "UnexpectedChar")
    reject(c, "single_quotes", "'a'", "UnexpectedChar")
    reject(c, "star_document", "*", "UnexpectedChar")
    reject(c, "angle_brackets", "<1>", "UnexpectedChar")
    reject(c, "close_bracket_only", "]", "UnexpectedChar")
    reject(c, "open_close_wrong_order", "][", "UnexpectedChar")
    reject(c, "utf8_bom", b"\xef\xbb\xbf[1]", "UnexpectedChar")
    reject(c, "invalid_utf8", b'["\xff\xfe"]', "UnexpectedChar")
    reject(c, "truncated_after_comma", "[1,2,", "UnexpectedChar")


# --------------------------------------------------------------------------
# extensions: comments, unquoted keys, special numbers
# --------------------------------------------------------------------------

def build_extensions():
    c = "extensions"
    accept(c, "line_comment_before", "// note\n[1]", [1])
    accept(c, "line_comment_after", "[1]// note", [1])
    accept(c, "line_comment_crlf", "// a\r\n[1]", [1])
    accept(c, "line_comment_only_after_value", "1 // done", 1)
    accept(c, "block_comment_before", "/* x */[1]", [1])
    accept(c, "block_comment_inside_array", "[1,/* two */2]", [1, 2])
    accept(c, "block_comment_inside_object", '{"a"/*k*/:/*v*/1}', {"a": 1})
    accept(c, "block_comment_multiline", "/* a\nb\nc */ [1]", [1])
    accept(c, "block_comment_stars", "/* ** * ** */[1]", [1])
    accept(c, "comment_between_documents_ws", "[ /*1*/ 1 /*2*/ , 2 ]", [1, 2])
    accept(c, "comment_like_string", '"// not a comment"', "// not a comment")
    accept(c, "block_comment_like_string", '"/* nope */"', "/* nope */")
    accept(c, "slashes_in_string", '"http://example.com/a"', "http://example.com/a")
    accept(c, "unquoted_key", '{name: "Alice", age: 30}', {"name": "Alice", "age": 30})
    accept(c, "unquoted_key_underscore", "{_a:1,b_2:2}", {"_a": 1, "b_2": 2})
    accept(c, "unquoted_key_reserved_word", "{true:1,null:2}", {"true": 1, "null": 2})
    accept(c, "unquoted_key_mixed", '{a:1,"b c":2}', {"a": 1, "b c": 2})
    accept(c, "infinity", "Infinity", math.inf)
    accept(c, "negative_infinity", "-Infinity", -math.inf)
    accept(c, "nan", "NaN", math.nan)
    accept(c, "specials_in_array", "[1, Infinity, NaN]", [1, math.inf, math.nan])
    accept(c, "specials_in_object", '{"a":-Infinity}', {"a": -math.inf})
    accept(c, "comment_and_specials", "// hdr\n[NaN /* mid */, -Infinity]",
           [math.nan, -math.inf])
    accept(c, "everything_at_once",
           '// doc\n{alpha: [1, /* two */ 2], beta: NaN}',
           {"alpha": [1, 2], "beta": math.nan})

    reject(c, "unterminated_block_comment", "[1] /* never", "UnterminatedComment")
    reject(c, "unterminated_block_comment_only", "/*", "UnterminatedComment")
    reject(c, "half_open_comment", "[1]/", "TrailingData")
    reject(c, "bad_special_case", "infinity", "UnexpectedChar")
    reject(c, "bad_special_truncated", "Infinit", "BadNumber")
    reject(c, "bad_special_nan_case", "nan", "UnexpectedChar")
    reject(c, "unquoted_key_starting_digit", "{1a:1}", "UnexpectedChar")
    reject(c, "unquoted_value_not_in_cell", "[hello]", "UnexpectedChar")
    reject(c, "comment_inside_token", "fa/*x*/lse", "UnexpectedChar")


# --------------------------------------------------------------------------
# zen_grid
# --------------------------------------------------------------------------

def build_zen_grid():
    c = "zen_grid"
    accept(c, "reference_table",
           '[3: id, name, score; 1, "Alice", 95; 2, "Bob", 87; 3, "Carol", 92 ]',
           [{"id": 1, "name": "Alice", "score": 95},
            {"id": 2, "name": "Bob", "score": 87},
            {"id": 3, "name": "Carol", "score": 92}])
    accept(c, "two_by_two", "[2: h1, h2; 1, 2; 3, 4]",
           [{"h1": 1, "h2": 2}, {"h1": 3, "h2": 4}])
    accept(c, "no_count", "[: a, b; 1, 2]", [{"a": 1, "b": 2}])
    accept(c, "short_row_pads_null", "[: a, b; 1]", [{"a": 1, "b": None}])
    accept(c, "empty_interior_cell", "[: a, b, c; 1,,3]",
           [{"a": 1, "b": None, "c": 3}])
    accept(c, "empty_leading_cell", "[: a, b; ,2]", [{"a": None, "b": 2}])
    accept(c, "empty_trailing_cell", "[: a, b; 1,]", [{"a": 1, "b": None}])
    accept(c, "bare_identifier_cells", "[: name, dept; Alice, Engineering]",
           [{"name": "Alice", "dept": "Engineering"}])
    accept(c, "reserved_literals_in_cells", "[: a, b, c, d; true, false, null, NaN]",
           [{"a": True, "b": False, "c": None, "d": math.nan}])
    accept(c, "numbers_in_cells", "[: a, b, c; -1, 2.5, 3e2]",
           [{"a": -1, "b": 2.5, "c": 300.0}])
    accept(c, "quoted_header_with_comma", '[: "a,b", c; 1, 2]',
           [{"a,b": 1, "c": 2}])
    accept(c, "quoted_header_with_semicolon", '[: "x;y"; 9]', [{"x;y": 9}])
    accept(c, "quoted_cell_with_delimiters", '[: a; "1,2;3"]', [{"a": "1,2;3"}])
    accept(c, "nested_array_cell", '[1: a; [1,2]]', [{"a": [1, 2]}])
    accept(c, "nested_object_cell", '[1: a; {"x": [1,2]}]', [{"a": {"x": [1, 2]}}])
    accept(c, "nested_grid_cell", "[1: a; [2: x; 7; 8]]",
           [{"a": [{"x": 7}, {"x": 8}]}])
    accept(c, "zero_rows_with_count", "[0: a]", [])
    accept(c, "zero_rows_no_count", "[: whatever]", [])
    accept(c, "count_leading_zeros", "[02: a; 1; 2]", [{"a": 1}, {"a": 2}])
    accept(c, "empty_row_between_semicolons", "[: a, b; 1, 2; ; 3]",
           [{"a": 1, "b": 2}, {"a": None, "b": None}, {"a": 3, "b": None}])
    accept(c, "comments_inside_grid", "[2: a /*col*/; 1; // row\n 2]",
           [{"a": 1}, {"a": 2}])
    accept(c, "grid_inside_object", '{"table": [2: v; 1; 2], "x": 0}',
           {"table": [{"v": 1}, {"v": 2}], "x": 0})
    accept(c, "grid_inside_array", "[[2: v; 1; 2], 3]",
           [[{"v": 1}, {"v": 2}], 3])
    accept(c, "whitespace_heavy",
           "[ 2 :\n  a , b ;\n  1 , 2 ;\n  3 , 4\n]",
           [{"a": 1, "b": 2}, {"a": 3, "b": 4}])
    accept(c, "not_a_grid_plain_ints", "[3, 4]", [3, 4])
    accept(c, "not_a_grid_float_then_colon_free", "[3.5, 1]", [3.5, 1])
    accept(c, "unicode_quoted_header", '[: "é"; 1]', [{"é": 1}])
    accept(c, "header_looks_reserved", "[: true, null; 1, 2]",
           [{"true": 1, "null": 2}])

    reject(c, "duplicate_header", "[2: a, a; 1, 2; 3, 4]", "DuplicateHeader")
    reject(c, "duplicate_header_quoted_vs_bare", '[1: "a", a; 1, 2]', "DuplicateHeader")
    reject(c, "row_too_wide", "[1: a; 1, 2]", "RowTooWide")
    reject(c, "row_too_wide_empty_cells", "[1: a; ,,]", "RowTooWide")
    reject(c, "row_count_low", "[5: a; 1]", "RowCountMismatch")
    reject(c, "row_count_high", "[1: a; 1; 2]", "RowCountMismatch")
    reject(c, "row_count_zero_but_rows", "[0: a; 1]", "RowCountMismatch")
    reject(c, "trailing_semicolon", "[: a; 1; ]", "UnexpectedChar")
    reject(c, "empty_headers", "[:]", "UnexpectedChar")
    reject(c, "empty_header_after_comma", "[: a, ; 1]", "UnexpectedChar")
    reject(c, "header_not_identifier", "[: 9a; 1]", "UnexpectedChar")
    reject(c, "cell_garbage_token", "[: a; 12ab]", "UnexpectedChar")
    reject(c, "unclosed_grid", "[: a; 1", "UnexpectedChar")
    reject(c, "grid_too_deep",
           "[1: a; " * 1100 + "1" + "]" * 1100, "DepthExceeded")


# --------------------------------------------------------------------------
# numbers
# --------------------------------------------------------------------------

def build_numbers():
    c = "numbers"
    for name, text in [
        ("zero", "0"), ("minus_zero", "-0"), ("one", "1"),
        ("large_int", "123456789"), ("negative", "-987"),
        ("simple_float", "1.5"), ("neg_float", "-0.75"),
        ("float_many_digits", "3.141592653589793"),
        ("exp_lower", "1e2"), ("exp_upper", "1E2"),
        ("exp_plus", "1e+2"), ("exp_minus", "1e-2"),
        ("exp_zero_pad", "1e-05"), ("zero_exp", "0e1"), ("zero_exp_plus", "0e+1"),
        ("frac_exp", "1.25e3"), ("big_exp", "1e308"), ("tiny", "5e-324"),
        ("int64_max", "9223372036854775807"),
        ("int64_min", "-9223372036854775808"),
        ("zero_point_zero", "0.0"),
        ("long_frac", "0.00000000001"),
    ]:
        strict(c, name, text)
    # wider than 64-bit becomes float (checked against Python's float())
    accept(c, "int64_max_plus_one", "9223372036854775808",
           float(9223372036854775808))
    accept(c, "int64_min_minus_one", "-9223372036854775809",
           float(-9223372036854775809))
    accept(c, "twenty_digits", "12345678901234567890", float(12345678901234567890))
    accept(c, "huge_exponent_is_inf", "1e999", math.inf)
    accept(c, "huge_negative_exponent", "-1e999", -math.inf)
    accept(c, "tiny_exponent_is_zero", "1e-999", 0.0)
    accept(c, "array_of_numbers", "[0, -1, 2.5, 3e3]", [0, -1, 2.5, 3000.0])

    for name, text, kind in [
        ("leading_zero", "-01", "BadNumber"),
        ("leading_zeros", "007", "BadNumber"),
        ("trailing_dot", "1.", "BadNumber"),
        ("dot_exp", "0.e1", "BadNumber"),
        ("bare_dot_five", ".5", "UnexpectedChar"),
        ("plus_prefix", "+1", "UnexpectedChar"),
        ("lone_minus", "-", "BadNumber"),
        ("minus_dot", "-.5", "BadNumber"),
        ("double_minus", "--1", "BadNumber"),
        ("hex", "0x10", "BadNumber"),
        ("exp_no_digits", "1e", "BadNumber"),
        ("exp_sign_only", "1e+", "BadNumber"),
        ("exp_double_sign", "1e++2", "BadNumber"),
        ("frac_no_digits", "1.e1", "BadNumber"),
        ("number_then_letter", "1x", "BadNumber"),
        ("infinity_typo", "Infinit", "BadNumber"),
        ("infinity_extra", "Infinityy", "BadNumber"),
        ("nan_extra", "NaNa", "BadNumber"),
        ("minus_space_one", "- 1", "BadNumber"),
        ("comma_decimal", "1,5", "TrailingData"),
        ("number_in_array_bad", "[-01]", "BadNumber"),
        ("number_in_object_bad", '{"a": 1.}', "BadNumber"),
    ]:
        reject(c, name, text, kind)

    rng = random.Random(20240811)
    for i in range(25):
        intpart = str(rng.randrange(0, 10**rng.randrange(1, 15)))
        if intpart.startswith("0") and len(intpart) > 1:
            intpart = "1" + intpart[1:]
        text = ("-" if rng.random() < 0.4 else "") + intpart
        if rng.random() < 0.6:
            text += "." + "".join(str(rng.randrange(10)) for _ in range(rng.randrange(1, 8)))
        if rng.random() < 0.4:
            text += rng.choice("eE") + rng.choice(["", "+", "-"]) + str(rng.randrange(0, 40))
        strict(c, f"gen_num_{i:02d}", text)


# --------------------------------------------------------------------------
# strings
# --------------------------------------------------------------------------

def build_strings():
    c = "strings"
    for name, text in [
        ("empty", '""'),
        ("simple", '"abc"'),
        ("spaces", '" a b "'),
        ("escape_quote", '"a\\"b"'),
        ("escape_backslash", '"a\\\\b"'),
        ("escape_slash", '"a\\/b"'),
        ("escape_controls", '"\\b\\f\\n\\r\\t"'),
        ("escape_unicode_basic", '"\\u0041"'),
        ("escape_unicode_zero", '"\\u0000"'),
        ("surrogate_pair_emoji", '"\\ud83d\\ude00"'),
        ("surrogate_pair_then_text", '"\\ud83d\\ude00x"'),
        ("unicode_raw", '"é字"'),
        ("mixed_escapes", '"a\\n\\u0062\\\\c"'),
        ("double_backslash_then_quote", '"\\\\\\""'),
        ("long_escape_run", '"' + "\\\\" * 40 + '"'),
        ("quote_heavy", '"\\"\\"\\""'),
        ("del_char_raw", '"\x7f"'),
        ("json_syntax_inside", '"{\\"a\\": [1,2]}"'),
    ]:
        strict(c, name, text)

    for name, text, kind in [
        ("bad_escape_q", '"\\q"', "BadEscape"),
        ("bad_escape_x", '"\\x41"', "BadEscape"),
        ("bad_escape_single_quote", '"\\\'"', "BadEscape"),
        ("unicode_short", '"\\u12"', "BadUnicodeEscape"),
        ("unicode_nonhex", '"\\uZZZZ"', "BadUnicodeEscape"),
        ("lone_high_surrogate", '"\\ud800"', "BadUnicodeEscape"),
        ("lone_low_surrogate", '"\\udc00"', "BadUnicodeEscape"),
        ("high_surrogate_bad_low", '"\\ud800\\u0041"', "BadUnicodeEscape"),
        ("high_surrogate_then_text", '"\\ud800x"', "BadUnicodeEscape"),
        ("unterminated", '"abc', "UnterminatedString"),
        ("unterminated_after_escape", '"abc\\"', "UnterminatedString"),
        ("unterminated_empty", '"', "UnterminatedString"),
        ("raw_newline", '"a\nb"', "UnexpectedChar"),
        ("raw_tab", '"a\tb"', "UnexpectedChar"),
        ("raw_control", '"a\x01b"', "UnexpectedChar"),
    ]:
        reject(c, name, text, kind)

    rng = random.Random(77)
    pool = "ab \"\\/\n\tzé字🙂:;,{}[]"
    for i in range(20):
        s = "".join(rng.choice(pool) for _ in range(rng.randrange(0, 25)))
        strict(c, f"gen_str_{i:02d}", json.dumps(s, ensure_ascii=rng.random() < 0.5))


# --------------------------------------------------------------------------
# errors: remaining kinds and offsets
# --------------------------------------------------------------------------

def build_errors():
    c = "errors"
    reject(c, "depth_exceeded_arrays", "[" * 1100 + "]" * 1100, "DepthExceeded")
    reject(c, "depth_exceeded_objects",
           '{"a":' * 1100 + "1" + "}" * 1100, "DepthExceeded")
    reject(c, "unterminated_comment_eof", "/* trailing", "UnterminatedComment")
    reject(c, "unterminated_comment_stars", "/* ** *", "UnterminatedComment")
    reject(c, "trailing_data_number", "1 2", "TrailingData")
    reject(c, "trailing_data_after_object", '{"a":1}{"b":2}', "TrailingData")
    reject(c, "trailing_data_comment_then_value", "1 /*c*/ 2", "TrailingData")
    reject(c, "unterminated_string_in_array", '["abc', "UnterminatedString")
    reject(c, "unterminated_string_escaped_quote", '"ab\\"', "UnterminatedString")
    reject(c, "value_is_slash", "/", "UnexpectedChar")
    reject(c, "value_is_backslash", "\\", "UnexpectedChar")
    reject(c, "sole_comment_no_value", "// only a comment", "UnexpectedChar")
    reject(c, "block_comment_no_value", "/* only */", "UnexpectedChar")
    # deep but accepted; 400 keeps the stdlib-json expectation oracle within
    # its own recursion limit (the 1024/1025 boundary lives in unit tests)
    accept(c, "depth_400_accepted", "[" * 400 + "]" * 400, _nest(400))


def _nest(depth):
    v = []
    for _ in range(depth - 1):
        v = [v]
    return v


# --------------------------------------------------------------------------
# stress + generated corpora
# --------------------------------------------------------------------------

def build_stress():
    c = "stress"
    # 200-row grid, expectation built by the expansion rule directly
    headers = ["id", "name", "load"]
    rows_txt, expansion = [], []
    rng = random.Random(5)
    for i in range(200):
        name = f"node_{i:03d}"
        load = round(rng.uniform(0, 1), 3)
        rows_txt.append(f"{i},{name},{load!r}")
        expansion.append({"id": i, "name": name, "load": load})
    accept(c, "grid_200_rows", "[200:" + ",".join(headers) + ";" + ";".join(rows_txt) + "]",
           expansion)

    deep = 300
    accept(c, "deep_array_300", "[" * deep + "]" * deep, _nest(deep))
    big_obj = {f"key_{i:04d}": i for i in range(1000)}
    accept(c, "object_1000_keys", json.dumps(big_obj), big_obj)
    long_s = "x" * 20000 + "\\n" + "y" * 5
    accept(c, "long_string_20k", '"' + long_s + '"',
           "x" * 20000 + "\n" + "y" * 5)
    accept(c, "many_small_values", json.dumps(list(range(2000))), list(range(2000)))

    roundtrip(c, "rt_mixed_tree",
              '{"rows": [2: a, b; 1, ; Alice, NaN], "tail": [1,2,3]}',
              ["json-pretty", "json-compact", "zen", "zen-spaced",
               "zen-bare", "zen-implicit-null", "zen-bare-implicit-null"])
    roundtrip(c, "rt_specials", "[Infinity, -Infinity, NaN, 1.5, -0.0]",
              ["json-pretty", "json-compact", "zen"])
    roundtrip(c, "rt_unicode", '["é", "\\ud83d\\ude00", "a\\nb"]',
              ["json-compact", "zen", "zen-bare"])
    roundtrip(c, "rt_empty_containers", '[[], {}, [[]], [{}]]',
              ["json-pretty", "json-compact", "zen"])
    roundtrip(c, "rt_uniform_table", "[3: a, b; 1, 2; 3, 4; 5, 6]",
              ["json-pretty", "json-compact", "zen", "zen-spaced",
               "zen-bare", "zen-implicit-null", "zen-bare-implicit-null"])


def build_generated_strict():
    rng = random.Random(31337)

    def rand_value(depth):
        kinds = ["int", "float", "str", "bool", "null"]
        if depth < 3:
            kinds += ["list", "dict"]
        k = rng.choice(kinds)
        if k == "int":
            return rng.randrange(-10**9, 10**9)
        if k == "float":
            return round(rng.uniform(-1e4, 1e4), 4)
        if k == "str":
            return "".join(rng.choice("abc XYZ_\"\\é") for _ in range(rng.randrange(0, 9)))
        if k == "bool":
            return rng.random() < 0.5
        if k == "null":
            return None
        if k == "list":
            return [rand_value(depth + 1) for _ in range(rng.randrange(0, 5))]
        return {f"k{j}": rand_value(depth + 1) for j in range(rng.randrange(0, 5))}

    for i in range(40):
        v = rand_value(0)
        style = rng.randrange(3)
        if style == 0:
            text = json.dumps(v, separators=(",", ":"))
        elif style == 1:
            text = json.dumps(v, indent=rng.choice([1, 2, 4]))
        else:
            text = json.dumps(v, ensure_ascii=False)
        accept("strict_json", f"gen_tree_{i:02d}", text, v)


def build_generated_zen():
    rng = random.Random(424242)
    count = 0
    while count < 40:
        text, expansion = random_table(rng, 0)
        accept("zen_grid", f"gen_table_{count:02d}", text, expansion)
        count += 1


def main():
    sys.setrecursionlimit(20000)
    build_strict_json()
    build_extensions()
    build_zen_grid()
    build_numbers()
    build_strings()
    build_errors()
    build_stress()
    build_generated_strict()
    build_generated_zen()

    if OUT.exists():
        shutil.rmtree(OUT)
    names = set()
    for category, name, data, kind, payload in vectors:
        assert name not in names, f"duplicate vector name {name}"
        names.add(name)
        d = OUT / category
        d.mkdir(parents=True, exist_ok=True)
        (d / f"{name}.input.jton").write_bytes(data)
        if kind == "accept":
            (d / f"{name}.expect.json").write_text(payload + "\n")
        elif kind == "reject":
            (d / f"{name}.reject").write_text(payload + "\n")
        else:
            (d / f"{name}.roundtrip").write_text(payload)
    print(f"wrote {len(vectors)} vectors to {OUT}")


if __name__ == "__main__":
    main()
