"""Command-line interface: generate, verify, search, export, and info."""

import argparse
import sys
from math import comb
from pathlib import Path

from . import constructions, formats, glues, layout
from .checker import CheckMode, check_encoding, force_matrix, matrix_csv, report_text
from .constructions import Code, NonBipartite
from .formats import ParseError
from .search import SearchConstraints, SearchStatus, search_min_code

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

FAMILIES = ("signed-canonical", "unsigned-canonical", "log-signed", "bipartite", "general")


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _write_output(text: str, out_path) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)


def _load_words(path: str) -> list[str]:
    return formats.parse_words(Path(path).read_text(encoding="ascii"))


def _load_glue(path: str) -> glues.GlueFunction:
    return formats.parse_glue(Path(path).read_text(encoding="ascii"))


def _resolve_mode(args) -> CheckMode | None:
    """Map --attractive/--exact/--no-alignment onto a checker mode."""
    if args.exact:
        if args.no_alignment:
            return None  # exact verification is only defined with alignment
        return CheckMode.EXACT_PLUS_ALIGNMENT
    if args.no_alignment:
        return CheckMode.SIGNS_ONLY
    return CheckMode.SIGNS_PLUS_ALIGNMENT


def _build_family(family: str, k, glue):
    """Return (code, target glue function) for a family selector."""
    if family == "signed-canonical":
        return constructions.signed_canonical_code(k), glues.canonical_signed(k)
    if family == "unsigned-canonical":
        return constructions.unsigned_canonical_code(k), glues.canonical_unsigned(k)
    if family == "log-signed":
        code = constructions.log_signed_code(k)
        return code, glues.canonical_signed(comb(k, k // 2))
    if family == "bipartite":
        return constructions.bipartite_code(glue), glue
    return constructions.general_code(glue), glue


def cmd_generate(args) -> int:
    needs_k = args.family in ("signed-canonical", "unsigned-canonical", "log-signed")
    if needs_k and args.k is None:
        return _fail_usage(f"family {args.family} needs --k")
    if not needs_k and args.glue is None:
        return _fail_usage(f"family {args.family} needs --glue")
    glue = _load_glue(args.glue) if args.glue and not needs_k else None
    try:
        code, target = _build_family(args.family, args.k, glue)
    except NonBipartite:
        return _fail_usage("bond graph not bipartite")
    except ValueError as exc:
        return _fail_usage(str(exc))
    # The families guarantee the attraction sign pattern; self-verify that.
    # Reflected one-slot contacts (see `verify`) are reported, not fatal.
    report = check_encoding(code, target, CheckMode.SIGNS_PLUS_ALIGNMENT)
    if report.sign_mismatches:
        print("error: generated code failed sign self-verification", file=sys.stderr)
        sys.stderr.write(report_text(report))
        return EXIT_VERIFY_FAILED
    if report.alignment_violations:
        print(
            f"note: alignment audit found {len(report.alignment_violations)} "
            "reflected-contact violations (run verify for details)",
            file=sys.stderr,
        )
    summary = f"CODE k={code.k} length={code.length} family={args.family}"
    _write_output(formats.serialize_words(code.words), args.out)
    print(summary, file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    mode = _resolve_mode(args)
    if mode is None:
        return _fail_usage("--exact requires alignment; drop --no-alignment")
    if mode is CheckMode.EXACT_PLUS_ALIGNMENT:
        print(
            "note: generated code families guarantee matching attraction signs, "
            "not exact force values",
            file=sys.stderr,
        )
    words = _load_words(args.code)
    glue = _load_glue(args.glue)
    try:
        code = Code(tuple(words))
    except ValueError as exc:
        return _fail_usage(str(exc))
    if code.k != glue.k:
        return _fail_usage(
            f"code has {code.k} words but glue function has {glue.k} glues"
        )
    report = check_encoding(code, glue, mode)
    sys.stdout.write(report_text(report))
    if args.matrix_csv:
        Path(args.matrix_csv).write_text(matrix_csv(report.force_matrix), encoding="ascii")
    if args.matrix_png:
        layout.render_force_matrix_png(report.force_matrix, args.matrix_png)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_search(args) -> int:
    mode = _resolve_mode(args)
    if mode is None:
        return _fail_usage("--exact requires alignment; drop --no-alignment")
    glue = _load_glue(args.glue)
    if glue.k < 1:
        return _fail_usage("search needs at least one glue")
    try:
        constraints = SearchConstraints(
            mode=mode, max_length=args.max_length, time_budget=args.budget
        )
    except ValueError as exc:
        return _fail_usage(str(exc))
    outcome = search_min_code(glue, constraints, progress=sys.stderr)
    minimum = outcome.proven_minimum if outcome.proven_minimum is not None else "-"
    if outcome.witness is not None:
        _write_output(formats.serialize_words(outcome.witness.words), args.out)
    print(
        f"SEARCH status={outcome.status.value} min={minimum} nodes={outcome.nodes_explored}",
        file=sys.stdout if (args.out or outcome.witness is None) else sys.stderr,
    )
    if outcome.status is SearchStatus.BUDGET_EXCEEDED:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_export(args) -> int:
    words = _load_words(args.code)
    if args.format == "text":
        _write_output(formats.serialize_words(words), args.out)
    elif args.format == "csv":
        try:
            code = Code(tuple(words))
        except ValueError as exc:
            return _fail_usage(str(exc))
        _write_output(matrix_csv(force_matrix(code)), args.out)
    else:
        _write_output(layout.render_svg(words), args.out)
    return EXIT_OK


def cmd_info(args) -> int:
    k = args.k
    if k < 1:
        return _fail_usage("--k must be >= 1")
    if args.family == "signed-canonical":
        print(f"words={2 * k} length={6 * k + 14}")
    elif args.family == "unsigned-canonical":
        print(f"words={k} length={18 * k + 42}")
    elif args.family == "log-signed":
        if k % 4:
            return _fail_usage("log-signed needs --k a positive multiple of 4")
        print(
            f"words={2 * comb(k, k // 2)} length={20 * k + 4} "
            f"(nominal 20k+3 = {20 * k + 3})"
        )
    elif args.family == "bipartite":
        print(f"words={k} length<={3 * k + 14}")
    else:
        print(f"words={k} length<={18 * k + 42} (nominal 9k+42 = {9 * k + 42})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dipolecodes",
        description="Construct, verify, and search dipole codes for glue functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="build a code from a known family")
    gen.add_argument("--family", choices=FAMILIES, required=True)
    gen.add_argument("--k", type=int, help="size parameter for canonical families")
    gen.add_argument("--glue", help="glue function file (bipartite and general families)")
    gen.add_argument("--out", help="output word file (default stdout)")
    gen.set_defaults(func=cmd_generate)

    ver = sub.add_parser("verify", help="audit a word file against a glue file")
    ver.add_argument("code", help="word file")
    ver.add_argument("glue", help="glue function file")
    strictness = ver.add_mutually_exclusive_group()
    strictness.add_argument(
        "--attractive", action="store_true", help="sign-level check (default)"
    )
    strictness.add_argument(
        "--exact", action="store_true", help="require exact force equality"
    )
    ver.add_argument("--no-alignment", action="store_true", help="skip alignment audit")
    ver.add_argument("--matrix-csv", help="also write the force matrix as CSV")
    ver.add_argument("--matrix-png", help="also render the force matrix heatmap")
    ver.set_defaults(func=cmd_verify)

    sea = sub.add_parser("search", help="find a minimum-length code by exhaustion")
    sea.add_argument("glue", help="glue function file")
    sea.add_argument("--max-length", type=int, required=True)
    strictness = sea.add_mutually_exclusive_group()
    strictness.add_argument("--attractive", action="store_true")
    strictness.add_argument("--exact", action="store_true")
    sea.add_argument("--no-alignment", action="store_true")
    sea.add_argument("--budget", type=float, help="wall-clock budget in seconds")
    sea.add_argument("--out", help="witness word file")
    sea.set_defaults(func=cmd_search)

    exp = sub.add_parser("export", help="convert a word file to another format")
    exp.add_argument("code", help="word file")
    exp.add_argument("--format", choices=("text", "csv", "svg"), required=True)
    exp.add_argument("--out", help="output file (default stdout)")
    exp.set_defaults(func=cmd_export)

    info = sub.add_parser("info", help="predicted code parameters, no generation")
    info.add_argument("--family", choices=FAMILIES, required=True)
    info.add_argument("--k", type=int, required=True)
    info.set_defaults(func=cmd_info)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        return _fail_usage(str(exc))
    except OSError as exc:
        return _fail_usage(str(exc))
