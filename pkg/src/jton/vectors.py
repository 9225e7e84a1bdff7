"""Conformance vector corpus: loading, running, TAP reporting.

A corpus is a directory with one subdirectory per category. Each vector is
a pair of files:

* ``<name>.input.jton``  - the raw input bytes
* ``<name>.expect.json`` - strict-JSON text of the expected value (Accept), or
* ``<name>.reject``      - the expected ParseError kind on line 1 (Reject), or
* ``<name>.roundtrip``   - serialize-mode labels, one per line (RoundTrip)

Expected values are strict JSON; non-finite floats are spelled with the
sentinel object ``{"__jton_special__": "inf"|"-inf"|"nan"}`` so expectation
files stay parseable by any JSON tool. Every Accept vector is also run as a
round trip through compact JSON.
"""

from __future__ import annotations

import importlib.resources
import json
import math
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path

from .errors import ManifestError, ParseError, PARSE_ERROR_KINDS
from .reader import ParseOptions, parse_document
from .values import values_equal
from .writer import Mode, SerializeOptions, Spacing, serialize

CATEGORIES = ("strict_json", "extensions", "zen_grid", "numbers",
              "strings", "errors", "stress")

SPECIAL_KEY = "__jton_special__"
_SPECIALS = {"inf": math.inf, "-inf": -math.inf, "nan": math.nan}

MODE_LABELS = {
    "json-pretty": SerializeOptions(mode=Mode.JSON_PRETTY),
    "json-compact": SerializeOptions(mode=Mode.JSON_COMPACT),
    "zen": SerializeOptions(mode=Mode.ZEN),
    "zen-spaced": SerializeOptions(mode=Mode.ZEN, spacing=Spacing.SPACED),
    "zen-bare": SerializeOptions(mode=Mode.ZEN, bare_strings=True),
    "zen-implicit-null": SerializeOptions(mode=Mode.ZEN, implicit_null=True),
    "zen-bare-implicit-null": SerializeOptions(
        mode=Mode.ZEN, bare_strings=True, implicit_null=True),
}


@dataclass
class TestVector:
    name: str
    category: str
    input: bytes
    expectation: str            # "accept" | "reject" | "roundtrip"
    expected_json: str | None = None   # accept: canonical JSON text
    reject_kind: str | None = None     # reject: ParseError kind
    roundtrip_modes: tuple = ()        # roundtrip: MODE_LABELS keys


@dataclass
class VectorResult:
    vector: TestVector
    ok: bool
    diagnostic: str = ""


@contextmanager
def _recursion_headroom(extra: int = 8192):
    # deep stress vectors push json.loads and values_equal past the default limit
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(old + extra)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def decode_expected(text: str):
    """Parse an expectation file and substitute non-finite sentinels."""
    def fix(v):
        if isinstance(v, dict):
            if set(v.keys()) == {SPECIAL_KEY}:
                return _SPECIALS[v[SPECIAL_KEY]]
            return {k: fix(x) for k, x in v.items()}
        if isinstance(v, list):
            return [fix(x) for x in v]
        return v
    return fix(json.loads(text))


def default_corpus_path() -> Path:
    return Path(importlib.resources.files("jton") / "conformance_vectors")


def load_vectors(path) -> list:
    """Load and validate every vector under ``path``."""
    root = Path(path)
    if not root.is_dir():
        raise ManifestError(str(root), 0, "vector directory does not exist")
    vectors = []
    seen = {}
    for input_file in sorted(root.glob("*/*.input.jton")):
        category = input_file.parent.name
        name = input_file.name[:-len(".input.jton")]
        if name in seen:
            raise ManifestError(str(input_file), 0,
                                f"duplicate vector name {name!r} (also in {seen[name]})")
        seen[name] = category
        data = input_file.read_bytes()
        expect = input_file.parent / (name + ".expect.json")
        reject = input_file.parent / (name + ".reject")
        roundtrip = input_file.parent / (name + ".roundtrip")
        if expect.exists():
            text = expect.read_text()
            try:
                with _recursion_headroom():
                    decode_expected(text)
            except (json.JSONDecodeError, KeyError) as e:
                raise ManifestError(str(expect), 1,
                                    f"expectation is not strict JSON: {e}") from None
            vectors.append(TestVector(name, category, data, "accept",
                                      expected_json=text))
        elif reject.exists():
            kind = reject.read_text().strip()
            if kind not in PARSE_ERROR_KINDS:
                raise ManifestError(str(reject), 1, f"unknown error kind {kind!r}")
            vectors.append(TestVector(name, category, data, "reject",
                                      reject_kind=kind))
        elif roundtrip.exists():
            modes = tuple(ln.strip() for ln in roundtrip.read_text().splitlines()
                          if ln.strip())
            for i, m in enumerate(modes, 1):
                if m not in MODE_LABELS:
                    raise ManifestError(str(roundtrip), i, f"unknown mode label {m!r}")
            if not modes:
                raise ManifestError(str(roundtrip), 1, "no mode labels")
            vectors.append(TestVector(name, category, data, "roundtrip",
                                      roundtrip_modes=modes))
        else:
            raise ManifestError(str(input_file), 0,
                                "missing .expect.json/.reject/.roundtrip companion")
    # stray companions without an input file
    for companion in sorted(root.glob("*/*")):
        n = companion.name
        for suffix in (".expect.json", ".reject", ".roundtrip"):
            if n.endswith(suffix):
                stem = n[:-len(suffix)]
                if stem not in seen:
                    raise ManifestError(str(companion), 0, "companion without input file")
    return vectors


def run_vector(v: TestVector, options: ParseOptions | None = None) -> VectorResult:
    """Run one vector; failures are results, not exceptions."""
    with _recursion_headroom():
        return _run_vector(v, options)


def _run_vector(v: TestVector, options: ParseOptions | None) -> VectorResult:
    opts = options or ParseOptions()
    if v.expectation == "reject":
        try:
            parse_document(v.input, opts)
        except ParseError as e:
            if e.kind == v.reject_kind:
                return VectorResult(v, True)
            return VectorResult(v, False,
                                f"expected {v.reject_kind}, got {e.kind} at {e.offset}")
        return VectorResult(v, False, f"expected {v.reject_kind}, but input parsed")

    try:
        value = parse_document(v.input, opts)
    except ParseError as e:
        return VectorResult(v, False, f"parse failed: {e}")

    if v.expectation == "accept":
        expected = decode_expected(v.expected_json)
        if not values_equal(value, expected, nan_equal=True):
            return VectorResult(v, False, f"value mismatch: got {value!r}")
        modes = ("json-compact",)
    else:
        modes = v.roundtrip_modes
    for label in modes:
        text = serialize(value, MODE_LABELS[label])
        try:
            again = parse_document(text, opts)
        except ParseError as e:
            return VectorResult(v, False, f"{label} round trip failed to reparse: {e}")
        if not values_equal(value, again, nan_equal=True):
            return VectorResult(v, False, f"{label} round trip changed the value")
    return VectorResult(v, True)


def run_all(vectors, options: ParseOptions | None = None):
    return [run_vector(v, options) for v in vectors]


def tap_lines(results) -> list:
    lines = [f"1..{len(results)}"]
    for i, r in enumerate(results, 1):
        if r.ok:
            lines.append(f"ok {i} - {r.vector.name}")
        else:
            lines.append(f"not ok {i} - {r.vector.name} ({r.diagnostic})")
    return lines
