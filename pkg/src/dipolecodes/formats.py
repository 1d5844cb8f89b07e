"""Text file formats for word lists and glue functions."""

from .glues import GlueFunction
from .words import ALPHABET


class ParseError(ValueError):
    """Malformed word or glue file."""


def parse_words(text: str) -> list[str]:
    """Parse a word file: one word per line over '0', '1', '.'.

    Lines starting with '#' are comments, empty lines are skipped, trailing
    whitespace is forbidden.
    """
    words = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.startswith("#"):
            continue
        if not line:
            continue
        if line != line.rstrip():
            raise ParseError(f"line {lineno}: trailing whitespace")
        for ch in line:
            if ch not in ALPHABET:
                raise ParseError(f"line {lineno}: invalid character {ch!r}")
        words.append(line)
    return words


def serialize_words(words) -> str:
    """Canonical word file: plain words, one per line, no comments."""
    return "".join(w + "\n" for w in words)


def parse_glue(text: str) -> GlueFunction:
    """Parse a glue file: the glue count k, then k rows of k integers.

    '#' comments and blank lines may appear before the header and between
    rows. The value table must be symmetric.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((lineno, line))
    if not lines:
        raise ParseError("empty glue file")
    header_lineno, header = lines[0]
    try:
        k = int(header)
    except ValueError:
        raise ParseError(f"line {header_lineno}: glue count must be an integer") from None
    if k < 0:
        raise ParseError(f"line {header_lineno}: glue count must be non-negative")
    body = lines[1:]
    if len(body) != k:
        raise ParseError(f"expected {k} rows, found {len(body)}")
    rows = []
    for lineno, line in body:
        try:
            row = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ParseError(f"line {lineno}: rows must hold integers") from None
        if len(row) != k:
            raise ParseError(f"line {lineno}: expected {k} values, found {len(row)}")
        rows.append(row)
    try:
        return GlueFunction(k, tuple(rows))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def serialize_glue(glue: GlueFunction) -> str:
    """Canonical glue file: the count, then the full value table."""
    lines = [str(glue.k)]
    for row in glue.values:
        lines.append(" ".join(str(v) for v in row))
    return "".join(line + "\n" for line in lines)
