import json
import sys
from pathlib import Path

import pytest

from jton.cli import main
from jton.reader import parse_document
from jton.values import values_equal
from jton.vectors import default_corpus_path, load_vectors

LISTING1 = ('[{"id":1,"name":"Alice","score":95},'
            '{"id":2,"name":"Bob","score":87},'
            '{"id":3,"name":"Carol","score":92}]')
LISTING2 = '[3: id, name, score; 1, "Alice", 95; 2, "Bob", 87; 3, "Carol", 92 ]'


def run(args, stdin_text=None, monkeypatch=None, capsys=None):
    if stdin_text is not None:
        class _Stdin:
            buffer = type("B", (), {"read": staticmethod(lambda: stdin_text.encode())})()
        monkeypatch.setattr(sys, "stdin", _Stdin())
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_convert_to_zen_spaced(tmp_path, capsys):
    src = tmp_path / "in.jton"
    src.write_text(LISTING1)
    code, out, err = main(["convert", str(src), "--to", "zen", "--spaced"]), *capsys.readouterr()
    assert code == 0
    assert out.strip() == LISTING2


def test_convert_back_to_compact(tmp_path, capsys):
    src = tmp_path / "in.jton"
    src.write_text(LISTING2)
    code = main(["convert", str(src), "--to", "json-compact"])
    out, _ = capsys.readouterr()
    assert code == 0
    assert out.strip() == LISTING1


def test_convert_bad_number(tmp_path, capsys):
    src = tmp_path / "bad.jton"
    src.write_text("-01")
    code = main(["convert", str(src)])
    out, err = capsys.readouterr()
    assert code == 1
    assert "BadNumber at byte 0" in err


def test_convert_missing_file(capsys):
    code = main(["convert", "/no/such/file.jton"])
    _, err = capsys.readouterr()
    assert code == 2 and "cannot read" in err


def test_convert_output_file(tmp_path, capsys):
    src = tmp_path / "in.jton"
    src.write_text("{a: 1} // comment")
    dst = tmp_path / "out.json"
    code = main(["convert", str(src), "-o", str(dst)])
    capsys.readouterr()
    assert code == 0
    assert dst.read_text().strip() == '{"a":1}'


def test_validate(tmp_path, capsys):
    ok = tmp_path / "ok.jton"
    ok.write_text("{a:1}")
    assert main(["validate", str(ok)]) == 0
    capsys.readouterr()
    assert main(["validate", str(ok), "--strict-json"]) == 1
    _, err = capsys.readouterr()
    assert "UnexpectedChar" in err
    empty = tmp_path / "empty.jton"
    empty.write_text("")
    assert main(["validate", str(empty)]) == 1
    capsys.readouterr()


def test_stats_generated(capsys):
    code = main(["stats", "--generate", "employees:100:0", "--counter", "bytes"])
    out, _ = capsys.readouterr()
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("format=")]
    assert len(lines) == 4
    stats = {}
    for line in lines:
        parts = dict(p.split("=", 1) for p in line.split())
        stats[parts["format"]] = (int(parts["tokens"]), parts["delta"])
    assert stats["json-compact"][1] == "+0.00%"
    assert stats["zen"][0] < stats["json-compact"][0]
    assert stats["zen"][1].startswith("-")


def test_stats_ineligible_input(tmp_path, capsys):
    src = tmp_path / "one.jton"
    src.write_text('{"only": 1}')
    code = main(["stats", str(src)])
    out, _ = capsys.readouterr()
    assert code == 0
    assert "note:" in out
    assert "format=zen" not in out


def test_stats_chars_counter(capsys):
    code = main(["stats", "--generate", "employees:5:0", "--counter", "chars"])
    out, _ = capsys.readouterr()
    assert code == 0 and "counter: chars" in out


def test_stats_plugin_counter(capsys):
    plugin = Path(__file__).resolve().parent.parent / "plugins" / "char_counter.py"
    code = main(["stats", "--generate", "employees:5:0",
                 "--counter", f"plugin:{plugin}"])
    out, _ = capsys.readouterr()
    assert code == 0 and "plugin:" in out


def test_bench_smoke(capsys):
    code = main(["bench", "--generate", "employees:50:0", "--iters", "1"])
    out, _ = capsys.readouterr()
    assert code == 0
    labels = [l.split()[0].split("=")[1] for l in out.splitlines()
              if l.startswith("bench=")]
    assert set(labels) == {
        "scan/scalar", "scan/accelerated", "parse/document",
        "serialize/json-pretty", "serialize/json-compact",
        "serialize/zen", "serialize/zen-bare"}


def test_bench_honors_force_scalar(monkeypatch, capsys):
    monkeypatch.setenv("JTON_FORCE_SCALAR", "1")
    code = main(["bench", "--generate", "employees:20:0", "--iters", "1"])
    out, _ = capsys.readouterr()
    assert code == 0 and "scan/accelerated" in out


def test_conformance_subcommand(capsys):
    code = main(["conformance"])
    out, _ = capsys.readouterr()
    assert code == 0
    assert out.splitlines()[0].startswith("1..")
    assert "not ok" not in out


def test_conformance_bad_dir(capsys):
    code = main(["conformance", "--vectors", "/no/such/dir"])
    _, err = capsys.readouterr()
    assert code == 2


def test_bad_generate_spec(capsys):
    code = main(["stats", "--generate", "nonsense:10:0"])
    _, err = capsys.readouterr()
    assert code == 2 and "--generate" in err


def test_convert_convert_identity_over_accept_corpus(tmp_path, capsys):
    # convert to zen, convert back, compare values
    vecs = [v for v in load_vectors(default_corpus_path())
            if v.expectation == "accept"]
    assert vecs
    a = tmp_path / "a.jton"
    b = tmp_path / "b.jton"
    c = tmp_path / "c.json"
    for v in vecs:
        a.write_bytes(v.input)
        assert main(["convert", str(a), "--to", "zen", "-o", str(b)]) == 0
        assert main(["convert", str(b), "--to", "json-compact", "-o", str(c)]) == 0
        original = parse_document(v.input)
        final = parse_document(c.read_bytes())
        assert values_equal(original, final, nan_equal=True), v.name
    capsys.readouterr()


def test_strict_output_flag(tmp_path, capsys):
    src = tmp_path / "nan.jton"
    src.write_text("[NaN]")
    assert main(["convert", str(src)]) == 0
    capsys.readouterr()
    assert main(["convert", str(src), "--strict-output"]) == 1
    _, err = capsys.readouterr()
    assert "strict_json" in err
