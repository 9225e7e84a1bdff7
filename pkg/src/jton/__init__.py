"""JTON: a strict JSON superset with the Zen Grid tabular encoding.

Core API:

* ``parse_document(data, options)`` -> value tree (None/bool/int/float/str/list/dict)
* ``serialize(value, options)`` -> text (JSON pretty, JSON compact, or Zen Grid)
* ``values_equal`` / ``depth_of`` for NaN-aware tree comparison
* ``savings_report`` for token accounting across formats

The ``jton`` console script exposes convert/validate/stats/bench/conformance.
"""

from .errors import (
    ManifestError,
    ParseError,
    PluginFailure,
    StrictJsonViolation,
)
from .reader import (
    ParseOptions,
    RowCountPolicy,
    decode_cell,
    parse_document,
    parse_number,
    parse_string,
    parse_zen_grid,
)
from .scanner import (
    StructuralIndex,
    compute_string_mask,
    scan_structural_accelerated,
    scan_structural_scalar,
)
from .values import depth_of, values_equal
from .writer import (
    GridPlan,
    Mode,
    SerializeOptions,
    Spacing,
    encode_cell,
    escape_string,
    is_bare_safe,
    plan_grid,
    serialize,
)

__version__ = "0.1.0"

__all__ = [
    "GridPlan", "ManifestError", "Mode", "ParseError", "ParseOptions",
    "PluginFailure", "RowCountPolicy", "SerializeOptions", "Spacing",
    "StructuralIndex", "StrictJsonViolation", "compute_string_mask",
    "decode_cell", "depth_of", "encode_cell", "escape_string", "is_bare_safe",
    "parse_document", "parse_number", "parse_string", "parse_zen_grid",
    "plan_grid",
    "scan_structural_accelerated", "scan_structural_scalar", "serialize",
    "values_equal", "__version__",
]
