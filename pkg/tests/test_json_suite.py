"""Strict-JSON conformance: the committed y_/n_ suite with the allowlist.

Must-accept (y_) cases parse and agree with the stdlib json oracle;
must-reject (n_) cases fail to parse, except the allowlisted ones that
exercise documented extensions and are accepted by design.
"""

import json
from pathlib import Path

import pytest

from jton.errors import ParseError
from jton.reader import parse_document
from jton.values import values_equal

SUITE = Path(__file__).resolve().parent / "data" / "json_suite"


def load_allowlist():
    return {
        line.strip()
        for line in (SUITE / "allowlist.txt").read_text().splitlines()
        if line.strip() and not line.startswith("#")
    }


Y_FILES = sorted(SUITE.glob("y_*.json"))
N_FILES = sorted(SUITE.glob("n_*.json"))
ALLOW = load_allowlist()


def test_suite_is_present():
    assert len(Y_FILES) >= 90
    assert len(N_FILES) >= 130
    assert ALLOW <= {f.name for f in N_FILES}


@pytest.mark.parametrize("path", Y_FILES, ids=lambda p: p.name)
def test_must_accept(path):
    data = path.read_bytes()
    value = parse_document(data)
    reference = json.loads(data.decode("utf-8"))
    assert values_equal(value, reference, nan_equal=True)


@pytest.mark.parametrize("path", N_FILES, ids=lambda p: p.name)
def test_must_reject_unless_allowlisted(path):
    data = path.read_bytes()
    try:
        parse_document(data)
        accepted = True
    except ParseError:
        accepted = False
    if path.name in ALLOW:
        assert accepted, "allowlisted extension case must parse"
    else:
        assert not accepted, "strict-JSON reject case must not parse"


def test_allowlisted_cases_rejected_without_extensions():
    from jton.reader import ParseOptions
    strict = ParseOptions(allow_extensions=False)
    for name in ALLOW:
        with pytest.raises(ParseError):
            parse_document((SUITE / name).read_bytes(), strict)
