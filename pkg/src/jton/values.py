"""Document value model.

Parsed documents are plain Python objects: None, bool, int, float, str,
list, and dict (insertion-ordered). The reader guarantees two invariants on
everything it returns:

* every int fits in signed 64 bits (wider integer lexemes become floats),
* no dict carries duplicate keys (duplicates collapse last-wins at parse
  time, before the dict exists).

Equality between trees needs more care than ``==`` gives: Python says
``1 == 1.0`` and ``True == 1``, while the value model distinguishes the
int/float/bool variants, and ``float("nan") != float("nan")`` breaks
round-trip assertions. ``values_equal`` implements variant-strict deep
equality with explicit knobs for both. Both helpers walk with an explicit
stack so arbitrarily deep trees never hit the interpreter recursion limit.
"""

from __future__ import annotations

import math

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def values_equal(a, b, nan_equal: bool = False, *, numeric_coercion: bool = False) -> bool:
    """Deep structural equality over value trees.

    Scalars compare variant-strict by default (Int 1 != Float 1.0,
    Bool true != Int 1). With ``numeric_coercion=True`` the int and float
    variants compare by numeric value (bool stays its own variant). With
    ``nan_equal=True`` two NaN floats compare equal. Dict comparison is
    insensitive to key order.
    """
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        tx, ty = type(x), type(y)
        if tx is list:
            if ty is not list or len(x) != len(y):
                return False
            stack.extend(zip(x, y))
        elif tx is dict:
            if ty is not dict or len(x) != len(y):
                return False
            for k, v in x.items():
                if k not in y:
                    return False
                stack.append((v, y[k]))
        elif not _scalars_equal(x, y, tx, ty, nan_equal, numeric_coercion):
            return False
    return True


def _scalars_equal(x, y, tx, ty, nan_equal, numeric_coercion) -> bool:
    if tx is float and ty is float:
        if math.isnan(x) or math.isnan(y):
            return nan_equal and math.isnan(x) and math.isnan(y)
        return x == y
    if numeric_coercion and tx in (int, float) and ty in (int, float):
        if (tx is float and math.isnan(x)) or (ty is float and math.isnan(y)):
            return False  # NaN never equals a number of the other variant
        return x == y
    if tx is not ty:
        return False
    return x == y


def depth_of(v) -> int:
    """Nesting depth: 0 for scalars, 1 + deepest child for containers.

    Empty containers have depth 1.
    """
    best = 0
    stack = [(v, 0)]
    while stack:
        node, d = stack.pop()
        t = type(node)
        if t is list:
            d += 1
            stack.extend((x, d) for x in node)
        elif t is dict:
            d += 1
            stack.extend((x, d) for x in node.values())
        if d > best:
            best = d
    return best
