"""Checker: force matrices, encoding audits, reports."""

import random

import pytest
from hypothesis import given, strategies as st

from dipolecodes import (
    CheckMode,
    Code,
    alignment_audit,
    canonical_signed,
    canonical_unsigned,
    check_encoding,
    force_matrix,
    matrix_csv,
    report_text,
    signed_canonical_code,
)
from dipolecodes.checker import _encode, _pair_violations
from dipolecodes.glues import GlueFunction, make_glue
from dipolecodes.words import alignment_violations, complement, reverse

from helpers import naive_force_matrix, random_word

PROTOTYPE = Code(("11101.11.", "1..1.1...", "1110111..", "11...1..."))


def test_force_matrix_examples():
    assert force_matrix(signed_canonical_code(1)) == ((-2, 1), (1, -14))
    assert force_matrix(Code(("1", "0"))) == ((-1, 1), (1, -1))
    assert force_matrix(Code(("..",))) == ((0,),)
    assert force_matrix(Code(())) == ()


def test_force_matrix_matches_oracle():
    rng = random.Random(17)
    for _ in range(30):
        k = rng.randint(1, 5)
        n = rng.randint(1, 12)
        code = Code(tuple(random_word(rng, n) for _ in range(k)))
        expected = naive_force_matrix(code.words)
        assert [list(r) for r in force_matrix(code)] == expected


def test_force_matrix_symmetry_and_invariance():
    rng = random.Random(23)
    for _ in range(20):
        k = rng.randint(1, 5)
        n = rng.randint(1, 10)
        code = Code(tuple(random_word(rng, n) for _ in range(k)))
        m = force_matrix(code)
        assert m == tuple(tuple(row) for row in zip(*m))
        assert force_matrix(Code(tuple(complement(w) for w in code.words))) == m
        assert force_matrix(Code(tuple(reverse(w) for w in code.words))) == m


def test_prototype_code_signs_only():
    report = check_encoding(PROTOTYPE, canonical_signed(2), CheckMode.SIGNS_ONLY)
    assert report.passed
    m = report.force_matrix
    assert m == ((-5, 1, -3, 0), (1, -2, 0, -1), (-3, 0, -1, 1), (0, -1, 1, 0))
    assert m[0][1] == 1 and m[2][3] == 1
    assert all(m[i][j] <= 0 for i in range(4) for j in range(4)
               if (i, j) not in ((0, 1), (1, 0), (2, 3), (3, 2)))


def test_prototype_code_alignment_audit_is_stable():
    # The physical demo code has two reflected contacts; freezing them
    # documents that it is not a fully aligned code.
    assert alignment_audit(PROTOTYPE) == [
        (1, 4, "Y", 7, 1),
        (3, 4, "Y", 7, 1),
    ]


def test_check_encoding_signs_plus_alignment_pass():
    report = check_encoding(
        signed_canonical_code(1), canonical_signed(1), CheckMode.SIGNS_PLUS_ALIGNMENT
    )
    assert report.passed
    assert report.alignment_violations == ()


def test_check_encoding_sign_mismatches():
    code = signed_canonical_code(2)
    report = check_encoding(code, canonical_unsigned(4), CheckMode.SIGNS_ONLY)
    assert not report.passed
    mismatches = {(i, j) for i, j, _, _ in report.sign_mismatches}
    # Diagonal entries expect attraction and repel instead; the two matched
    # pairs attract where the unsigned table says they must not.
    assert mismatches == {(1, 1), (2, 2), (3, 3), (4, 4), (1, 2), (3, 4)}
    for i, j, expected, force in report.sign_mismatches:
        if i == j:
            assert expected == "+" and force <= 0
        else:
            assert expected == "0" and force > 0


def test_check_encoding_count_mismatch():
    with pytest.raises(ValueError):
        check_encoding(Code(("1", "0")), canonical_unsigned(3), CheckMode.SIGNS_ONLY)


def test_exact_mode():
    code = Code(("1", "0"))
    exact = GlueFunction(2, ((-1, 1), (1, -1)))
    assert check_encoding(code, exact, CheckMode.EXACT_PLUS_ALIGNMENT).passed
    off = GlueFunction(2, ((-1, 2), (2, -1)))
    report = check_encoding(code, off, CheckMode.EXACT_PLUS_ALIGNMENT)
    assert not report.passed
    assert (1, 2, "2", 1) in report.sign_mismatches


def test_mode_implication_chain():
    rng = random.Random(31)
    checked_exact = 0
    for _ in range(60):
        k = rng.randint(1, 4)
        n = rng.randint(1, 8)
        code = Code(tuple(random_word(rng, n) for _ in range(k)))
        glue = GlueFunction(k, force_matrix(code))
        exact = check_encoding(code, glue, CheckMode.EXACT_PLUS_ALIGNMENT)
        spa = check_encoding(code, glue, CheckMode.SIGNS_PLUS_ALIGNMENT)
        signs = check_encoding(code, glue, CheckMode.SIGNS_ONLY)
        assert signs.passed  # the glue table is this code's own force matrix
        if exact.passed:
            checked_exact += 1
            assert spa.passed
        if spa.passed:
            assert signs.passed
    assert checked_exact > 0


def test_alignment_audit_examples():
    assert alignment_audit(signed_canonical_code(1)) == []
    assert alignment_audit(Code(("..", ".."))) == []
    audit = alignment_audit(Code(("1.", ".0")))
    assert audit == [(1, 2, "Y", 1, 1)]


def test_alignment_audit_includes_diagonal():
    audit = alignment_audit(Code(("01",)))
    assert any(variant == "full" for _, _, variant, _, _ in audit)


def test_checker_pair_scan_matches_words_module():
    rng = random.Random(41)
    for _ in range(300):
        n = rng.randint(1, 16)
        x, y = random_word(rng, n), random_word(rng, n)
        enc = _encode([x, y])
        assert _pair_violations(enc[0], enc[1]) == alignment_violations(x, y)


@given(st.data())
def test_checker_pair_scan_matches_words_module_hypothesis(data):
    n = data.draw(st.integers(1, 12))
    letters = st.sampled_from(".01")
    x = "".join(data.draw(st.lists(letters, min_size=n, max_size=n)))
    y = "".join(data.draw(st.lists(letters, min_size=n, max_size=n)))
    enc = _encode([x, y])
    assert _pair_violations(enc[0], enc[1]) == alignment_violations(x, y)


def test_matrix_csv():
    assert matrix_csv(((1, -2), (-2, 0))) == "1,-2\n-2,0\n"
    assert matrix_csv(()) == ""
    assert matrix_csv(force_matrix(signed_canonical_code(1))) == "-2,1\n1,-14\n"


def test_report_text_contains_machine_lines():
    code = Code(("1.", ".0"))
    report = check_encoding(code, make_glue(2), CheckMode.SIGNS_PLUS_ALIGNMENT)
    text = report_text(report)
    assert "VIOLATION ALIGN i=1 j=2 variant=Y offset=1 force=1" in text
    assert "verdict: FAIL" in text

    passing = check_encoding(
        signed_canonical_code(1), canonical_signed(1), CheckMode.SIGNS_PLUS_ALIGNMENT
    )
    assert "verdict: pass" in report_text(passing)
    assert "VIOLATION" not in report_text(passing)


def test_report_text_sign_lines():
    code = Code(("1", "0"))
    report = check_encoding(code, canonical_unsigned(2), CheckMode.SIGNS_ONLY)
    text = report_text(report)
    assert "VIOLATION SIGN i=1 j=1 expected=+ force=-1" in text
