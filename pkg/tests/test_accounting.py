import sys
from pathlib import Path

import pytest

from jton.accounting import (
    ByteCounter,
    CharCounter,
    PluginCounter,
    calibrate,
    get_counter,
    predicted_savings,
    savings_report,
    zen_byte_savings_exact,
)
from jton.datasets import generate
from jton.errors import PluginFailure
from jton.writer import Mode, SerializeOptions, serialize

PLUGIN = str(Path(__file__).resolve().parent.parent / "plugins" / "char_counter.py")


def test_builtin_counters():
    bc, cc = ByteCounter(), CharCounter()
    assert bc.count("") == 0 and cc.count("") == 0
    assert bc.count("abc") == 3 and cc.count("abc") == 3
    assert bc.count("é") == 2 and cc.count("é") == 1
    assert bc.count("\U0001f600") == 4 and cc.count("\U0001f600") == 1


def test_get_counter():
    assert isinstance(get_counter("bytes"), ByteCounter)
    assert isinstance(get_counter("chars"), CharCounter)
    with pytest.raises(ValueError):
        get_counter("words")


def test_predicted_savings():
    assert predicted_savings(1, 4, 10, 3) == 0  # single row saves nothing
    assert predicted_savings(3, 3, 1, 3) == 24  # (3-1) * 3 * (1+3)
    assert predicted_savings(1000, 4, 1, 3) == 15984
    with pytest.raises(ValueError):
        predicted_savings(0, 1, 1, 3)


def test_zen_byte_savings_exact_small_case():
    # hand count: [{"a":1},{"a":2}] is 17 bytes, [2:a;1;2] is 9
    assert len('[{"a":1},{"a":2}]') == 17
    assert len("[2:a;1;2]") == 9
    assert zen_byte_savings_exact(2, 1, 1) == 8
    assert zen_byte_savings_exact(2, 1, 1, emit_row_count=False) == 9


def test_exact_formula_matches_measured():
    bc = ByteCounter()
    for n in (2, 5, 17, 100):
        v = generate("employees", n, 3)
        compact = bc.count(serialize(v))
        zen = bc.count(serialize(v, SerializeOptions(mode=Mode.ZEN)))
        assert compact - zen == zen_byte_savings_exact(n, 4, len("idnamedeptsalary"))


def test_calibrate_bytes():
    mean_h, struct = calibrate(ByteCounter(), ["id", "name", "dept", "salary"])
    assert mean_h == 4.0  # (2+4+4+6)/4
    assert struct == 3    # two quotes and a colon


def test_savings_report_eligible():
    v = generate("employees", 10, 0)
    r = savings_report(v, ByteCounter())
    assert r.rows == 10 and r.cols == 4
    assert set(r.sizes) == {"json-pretty", "json-compact", "zen", "zen-bare"}
    assert r.delta_vs_compact["json-compact"] == 0
    assert r.delta_vs_compact["zen"] < 0
    assert r.sizes["zen-bare"] <= r.sizes["zen"] <= r.sizes["json-compact"] \
        <= r.sizes["json-pretty"]
    assert r.predicted_delta_tokens == predicted_savings(10, 4, 4.0, 3)


@pytest.mark.parametrize("shape", ["employees", "products", "metrics"])
@pytest.mark.parametrize("rows", [2, 10, 100])
def test_size_ordering_on_generator_outputs(shape, rows):
    r = savings_report(generate(shape, rows, 1), ByteCounter())
    assert (r.sizes["zen-bare"] <= r.sizes["zen"]
            <= r.sizes["json-compact"] <= r.sizes["json-pretty"])


def test_savings_report_ineligible():
    r = savings_report({"one": 1}, ByteCounter())
    assert r.rows is None
    assert set(r.sizes) == {"json-pretty", "json-compact"}
    assert "zen" not in r.sizes
    assert r.note


def test_char_counter_on_listing():
    # spaced listing form measures 67 characters, compact JSON 104
    v = [{"id": 1, "name": "Alice", "score": 95},
         {"id": 2, "name": "Bob", "score": 87},
         {"id": 3, "name": "Carol", "score": 92}]
    cc = CharCounter()
    from jton.writer import Spacing
    assert cc.count(serialize(v, SerializeOptions(mode=Mode.ZEN,
                                                  spacing=Spacing.SPACED))) == 67
    assert cc.count(serialize(v)) == 104


def test_plugin_counter_protocol():
    counter = get_counter(f"plugin:{PLUGIN}")
    assert isinstance(counter, PluginCounter)
    try:
        cc = CharCounter()
        for text in ["", "abc", "é\U0001f600", "line\nbreak", "x" * 10000]:
            assert counter.count(text) == cc.count(text)
        v = generate("employees", 5, 0)
        r = savings_report(v, counter)
        assert r.sizes == savings_report(v, cc).sizes
    finally:
        counter.close()


def test_plugin_counter_failure():
    bad = str(Path(__file__).resolve().parent / "data" / "does_not_exist_plugin")
    with pytest.raises(PluginFailure):
        PluginCounter(bad)


def test_plugin_counter_garbage_reply(tmp_path):
    script = tmp_path / "bad_plugin.py"
    script.write_text(
        "import sys\n"
        "sys.stdin.buffer.readline()\n"
        "sys.stdout.write('not a number\\n')\n"
        "sys.stdout.flush()\n"
        "sys.exit(0)\n")
    counter = PluginCounter(str(script))
    with pytest.raises(PluginFailure):
        counter.count("abc")
