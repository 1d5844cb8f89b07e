"""Ground-truth verification of codes against glue functions.

All checks are exact integer arithmetic. The inner loops run on integer
charge vectors ('1' -> +1, '0' -> -1, '.' -> 0), where the force of two
words is the negated dot product and every prefix/suffix overlap force is
one entry of an integer convolution.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .constructions import Code
from .glues import GlueFunction
from .words import FULL_OVERLAP_REFLECTED, VARIANT_PLAIN, VARIANT_REVERSED


class CheckMode(enum.Enum):
    SIGNS_ONLY = "signs"
    SIGNS_PLUS_ALIGNMENT = "signs+alignment"
    EXACT_PLUS_ALIGNMENT = "exact+alignment"


@dataclass(frozen=True)
class EncodingReport:
    """Full audit of a (code, glue function) pair.

    sign_mismatches holds (i, j, expected, force) with i <= j, where
    expected is "+" or "0" in the sign modes and the target integer in the
    exact mode. alignment_violations holds (i, j, variant, offset, force)
    with i <= j, sorted.
    """

    mode: CheckMode
    force_matrix: tuple[tuple[int, ...], ...]
    sign_mismatches: tuple
    alignment_violations: tuple
    passed: bool


_CHARGE = np.zeros(128, dtype=np.int32)
_CHARGE[ord("0")] = -1
_CHARGE[ord("1")] = 1


def _encode(words) -> np.ndarray:
    """Charge matrix of a word list, one row per word."""
    if not words or not words[0]:
        return np.zeros((len(words), 0), dtype=np.int32)
    data = np.frombuffer("".join(words).encode("ascii"), dtype=np.uint8)
    return _CHARGE[data].reshape(len(words), -1)


def force_matrix(code: Code) -> tuple[tuple[int, ...], ...]:
    """k x k table with entry (i, j) the force of word i on reversed word j.

    Symmetric because f(X, rev(Y)) = f(Y, rev(X)).
    """
    if code.k == 0:
        return ()
    charges = _encode(code.words)
    matrix = -(charges @ charges[:, ::-1].T)
    return tuple(tuple(int(v) for v in row) for row in matrix)


def _pair_violations(x: np.ndarray, y: np.ndarray) -> list[tuple[str, int, int]]:
    """Alignment violations for one pair of charge rows, sorted.

    One convolution per variant covers every overlap: entry s of
    convolve(x, y[::-1]) is the negated force of the prefix overlap at
    offset s+1 (s < n-1), the full overlap against y (s = n-1), or the
    suffix overlap at offset 2n-1-s (s > n-1). convolve(x, y) is the same
    scan against the reverse of y, whose full overlap is the bonding
    direction and stays unconstrained.
    """
    n = x.shape[0]
    if n == 0:
        return []
    out = []
    for variant, kernel in ((VARIANT_PLAIN, y[::-1]), (VARIANT_REVERSED, y)):
        conv = np.convolve(x, kernel)
        if variant == VARIANT_PLAIN and conv[n - 1] < 0:
            out.append((FULL_OVERLAP_REFLECTED, 0, int(-conv[n - 1])))
        for s in np.nonzero(conv < 0)[0]:
            if s == n - 1:
                continue
            offset = s + 1 if s < n - 1 else 2 * n - 1 - s
            out.append((variant, int(offset), int(-conv[s])))
    out.sort()
    return out


def alignment_audit(code: Code) -> list[tuple[int, int, str, int, int]]:
    """Alignment violations over every unordered word pair, diagonal included.

    Alignment is symmetric in its arguments (by reverse-force symmetry), so
    scanning each unordered pair once already yields the union over both
    argument orders.
    """
    charges = _encode(code.words)
    out = []
    for i in range(code.k):
        for j in range(i, code.k):
            for variant, offset, force in _pair_violations(charges[i], charges[j]):
                out.append((i + 1, j + 1, variant, offset, force))
    return out


def check_encoding(code: Code, glue: GlueFunction, mode: CheckMode) -> EncodingReport:
    """Audit a code against a glue function at the given strictness.

    SIGNS_ONLY demands matching attraction signs (force > 0 iff glue > 0)
    for every pair including the diagonal. SIGNS_PLUS_ALIGNMENT additionally
    demands every pair aligned. EXACT_PLUS_ALIGNMENT replaces the sign test
    with integer equality. Reports are exhaustive, never first-failure.
    """
    if code.k != glue.k:
        raise ValueError(
            f"code has {code.k} words but glue function has {glue.k} glues"
        )
    matrix = force_matrix(code)
    mismatches = []
    for i in range(1, glue.k + 1):
        for j in range(i, glue.k + 1):
            force = matrix[i - 1][j - 1]
            target = glue.value(i, j)
            if mode is CheckMode.EXACT_PLUS_ALIGNMENT:
                if force != target:
                    mismatches.append((i, j, str(target), force))
            elif (force > 0) != (target > 0):
                mismatches.append((i, j, "+" if target > 0 else "0", force))
    if mode is CheckMode.SIGNS_ONLY:
        violations = []
    else:
        violations = alignment_audit(code)
    passed = not mismatches and not violations
    return EncodingReport(mode, matrix, tuple(mismatches), tuple(violations), passed)


def matrix_csv(matrix) -> str:
    """Force matrix as CSV, one row of comma-separated integers per glue."""
    return "".join(",".join(str(v) for v in row) + "\n" for row in matrix)


def report_text(report: EncodingReport) -> str:
    """Human-readable report with machine-readable VIOLATION lines."""
    lines = [
        f"mode: {report.mode.value}",
        f"verdict: {'pass' if report.passed else 'FAIL'}",
        f"words: {len(report.force_matrix)}",
        "force matrix (word i against reversed word j):",
    ]
    for row in report.force_matrix:
        lines.append("  " + " ".join(f"{v:4d}" for v in row))
    lines.append(
        f"sign mismatches: {len(report.sign_mismatches)}, "
        f"alignment violations: {len(report.alignment_violations)}"
    )
    for i, j, expected, force in report.sign_mismatches:
        lines.append(f"VIOLATION SIGN i={i} j={j} expected={expected} force={force}")
    for i, j, variant, offset, force in report.alignment_violations:
        lines.append(
            f"VIOLATION ALIGN i={i} j={j} variant={variant} offset={offset} force={force}"
        )
    return "\n".join(lines) + "\n"
