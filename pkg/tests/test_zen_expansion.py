"""Grid texts assembled by hand must parse to their mechanical expansion."""

import random

from zen_oracle import random_table

from jton.reader import parse_document
from jton.values import values_equal


def test_randomized_tables_match_expansion_quick():
    rng = random.Random(2024)
    for i in range(250):
        text, expansion = random_table(rng)
        parsed = parse_document(text)
        assert values_equal(parsed, expansion, nan_equal=True), (i, text)


def test_expansion_handles_all_cell_shapes():
    rng = random.Random(5150)
    seen_nested = seen_empty = seen_bare = seen_quoted_header = False
    for _ in range(400):
        text, expansion = random_table(rng)
        parsed = parse_document(text)
        assert values_equal(parsed, expansion, nan_equal=True), text
        if "[" in text[1:]:
            seen_nested = True
        if ",," in text or ", ," in text:
            seen_empty = True
        if "Alice" in text or "Bob" in text:
            seen_bare = True
        if '"a,b"' in text or '"x;y"' in text or '"weird header"' in text:
            seen_quoted_header = True
    assert seen_nested and seen_empty and seen_bare and seen_quoted_header
