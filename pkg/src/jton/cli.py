"""Command-line front door: convert, validate, stats, bench, conformance.

Exit codes: 0 success, 1 parse/validation/vector failure, 2 I/O failure.
Parse errors render as ``<kind> at byte <offset>: <detail>``. Machine-readable
stat lines are ``key=value`` pairs, one record per line, so acceptance checks
can grep them without a structured-output dependency.
"""

from __future__ import annotations

import argparse
import sys

from .accounting import get_counter, savings_report
from .bench import bench_row
from .datasets import SHAPES, generate
from .errors import ManifestError, ParseError, PluginFailure, StrictJsonViolation
from .reader import ParseOptions, RowCountPolicy, parse_document
from .scanner import scan_structural_accelerated, scan_structural_scalar
from .vectors import default_corpus_path, load_vectors, run_all, tap_lines
from .writer import Mode, SerializeOptions, Spacing, serialize

_MODES = {
    "zen": Mode.ZEN,
    "json-compact": Mode.JSON_COMPACT,
    "json-pretty": Mode.JSON_PRETTY,
}


def _add_parse_flags(p):
    p.add_argument("--strict-json", action="store_true",
                   help="accept only strict JSON (no extensions)")
    p.add_argument("--max-depth", type=int, default=1024)
    p.add_argument("--row-count-policy", choices=["strict", "ignore"], default="strict")


def _parse_options(args) -> ParseOptions:
    return ParseOptions(
        max_depth=args.max_depth,
        zen_row_count_policy=RowCountPolicy(args.row_count_policy),
        allow_extensions=not args.strict_json,
    )


def _add_serialize_flags(p):
    p.add_argument("--to", choices=sorted(_MODES), default="json-compact",
                   help="output format")
    p.add_argument("--spaced", action="store_true",
                   help="Zen mode: listing-style spacing")
    p.add_argument("--bare-strings", action="store_true")
    p.add_argument("--implicit-null", action="store_true")
    p.add_argument("--no-row-count", action="store_true")
    p.add_argument("--indent", type=int, default=2)
    p.add_argument("--strict-output", action="store_true",
                   help="error instead of writing NaN/Infinity literals")


def _serialize_options(args) -> SerializeOptions:
    return SerializeOptions(
        mode=_MODES[args.to],
        bare_strings=args.bare_strings,
        implicit_null=args.implicit_null,
        emit_row_count=not args.no_row_count,
        spacing=Spacing.SPACED if args.spaced else Spacing.COMPACT,
        indent=args.indent,
        strict_json=args.strict_output,
    )


def _read_input(args) -> bytes:
    if getattr(args, "generate", None):
        shape, rows, seed = _parse_generate(args.generate)
        return serialize(generate(shape, rows, seed)).encode()
    path = args.input
    try:
        if path == "-":
            return sys.stdin.buffer.read()
        with open(path, "rb") as f:
            return f.read()
    except OSError as e:
        raise _IoError(f"cannot read {path}: {e}") from e


def _parse_generate(spec: str):
    parts = spec.split(":")
    if len(parts) not in (2, 3) or parts[0] not in SHAPES:
        raise _IoError(f"bad --generate spec {spec!r}; use <shape>:<rows>[:<seed>]")
    try:
        rows = int(parts[1])
        seed = int(parts[2]) if len(parts) == 3 else 0
    except ValueError:
        raise _IoError(f"bad --generate spec {spec!r}") from None
    return parts[0], rows, seed


def _write_output(args, text: str):
    try:
        if args.output == "-":
            sys.stdout.write(text)
            if not text.endswith("\n"):
                sys.stdout.write("\n")
        else:
            with open(args.output, "w", encoding="utf-8") as f:
                f.write(text)
                if not text.endswith("\n"):
                    f.write("\n")
    except OSError as e:
        raise _IoError(f"cannot write {args.output}: {e}") from e


class _IoError(Exception):
    pass


def cmd_convert(args) -> int:
    data = _read_input(args)
    try:
        value = parse_document(data, _parse_options(args))
        text = serialize(value, _serialize_options(args))
    except (ParseError, StrictJsonViolation) as e:
        print(e, file=sys.stderr)
        return 1
    _write_output(args, text)
    return 0


def cmd_validate(args) -> int:
    data = _read_input(args)
    try:
        parse_document(data, _parse_options(args))
    except ParseError as e:
        print(e, file=sys.stderr)
        return 1
    print("ok")
    return 0


def cmd_stats(args) -> int:
    data = _read_input(args)
    try:
        value = parse_document(data, _parse_options(args))
    except ParseError as e:
        print(e, file=sys.stderr)
        return 1
    try:
        counter = get_counter(args.counter)
    except ValueError as e:
        raise _IoError(str(e)) from None
    try:
        report = savings_report(value, counter)
    except PluginFailure as e:
        print(e, file=sys.stderr)
        return 2
    width = max(len(f) for f in report.sizes)
    print(f"counter: {report.counter}")
    if report.rows is not None:
        print(f"table: {report.rows} rows x {report.cols} cols")
        print(f"predicted savings (analytic model): {report.predicted_delta_tokens:.1f}")
    if report.note:
        print(f"note: {report.note}")
    print(f"{'format'.ljust(width)}  {'tokens':>10}  {'vs compact':>10}")
    for fmt, size in report.sizes.items():
        print(f"{fmt.ljust(width)}  {size:>10}  {report.delta_vs_compact[fmt]:>+9.2f}%")
    for fmt, size in report.sizes.items():
        print(f"format={fmt} tokens={size} delta={report.delta_vs_compact[fmt]:+.2f}%")
    return 0


def cmd_bench(args) -> int:
    data = _read_input(args)
    popts = _parse_options(args)
    try:
        value = parse_document(data, popts)
    except ParseError as e:
        print(e, file=sys.stderr)
        return 1
    nbytes = len(data)
    iters = args.iters if args.iters else (5000 if nbytes < (1 << 20) else 20)
    warmup = args.warmup
    rows = [
        bench_row("scan/scalar", lambda: scan_structural_scalar(data),
                  nbytes, max(1, iters // 50), warmup),
        bench_row("scan/accelerated", lambda: scan_structural_accelerated(data),
                  nbytes, max(1, iters // 10), warmup),
        bench_row("parse/document", lambda: parse_document(data, popts),
                  nbytes, max(1, iters // 50), warmup),
    ]
    for label, mode, extra in [
        ("serialize/json-pretty", Mode.JSON_PRETTY, {}),
        ("serialize/json-compact", Mode.JSON_COMPACT, {}),
        ("serialize/zen", Mode.ZEN, {}),
        ("serialize/zen-bare", Mode.ZEN, {"bare_strings": True}),
    ]:
        opts = SerializeOptions(mode=mode, **extra)
        out = serialize(value, opts)
        out_bytes = len(out.encode())
        rows.append(bench_row(label, lambda o=opts: serialize(value, o),
                              out_bytes, iters, warmup))
    for r in rows:
        print(f"{r.label.ljust(24)} {r.mb_per_second:10.2f} MB/s "
              f"({r.bytes_processed} bytes, {r.seconds_per_iter * 1e3:.3f} ms/iter)")
    for r in rows:
        print(f"bench={r.label} bytes={r.bytes_processed} "
              f"seconds={r.seconds_per_iter:.9f} mbps={r.mb_per_second:.3f}")
    return 0


def cmd_conformance(args) -> int:
    path = args.vectors or default_corpus_path()
    try:
        vecs = load_vectors(path)
    except ManifestError as e:
        print(e, file=sys.stderr)
        return 2
    results = run_all(vecs)
    for line in tap_lines(results):
        print(line)
    failed = sum(1 for r in results if not r.ok)
    print(f"# {len(results) - failed}/{len(results)} vectors passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="jton", description=__doc__)
    sub = ap.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("convert", help="parse input and re-serialize it")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("-o", "--output", default="-")
    _add_parse_flags(p)
    _add_serialize_flags(p)
    p.set_defaults(fn=cmd_convert)

    p = sub.add_parser("validate", help="exit 0 iff the input parses")
    p.add_argument("input", nargs="?", default="-")
    _add_parse_flags(p)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("stats", help="token savings report across formats")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--counter", default="bytes",
                   help="bytes | chars | plugin:<path>")
    p.add_argument("--generate", metavar="SHAPE:ROWS[:SEED]",
                   help="benchmark a generated dataset instead of reading input")
    _add_parse_flags(p)
    p.set_defaults(fn=cmd_stats)

    p = sub.add_parser("bench", help="parse/serialize throughput")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--generate", metavar="SHAPE:ROWS[:SEED]")
    p.add_argument("--iters", type=int, default=0,
                   help="timed iterations (default 5000 below 1 MiB)")
    p.add_argument("--warmup", type=int, default=1)
    _add_parse_flags(p)
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("conformance", help="run the vector corpus, TAP output")
    p.add_argument("--vectors", help="vector directory (default: packaged corpus)")
    p.set_defaults(fn=cmd_conformance)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _IoError as e:
        print(e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
