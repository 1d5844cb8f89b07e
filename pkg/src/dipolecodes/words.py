"""Letters, dipole words, and the pairwise force model.

A word is a plain string over '0', '1', '.': the two pole orientations of
an embedded magnet, plus '.' for an empty slot. Forces act positionwise
between equal-length words: opposite poles attract (+1), alike poles repel
(-1), and empty slots are inert (0).
"""

BLANK = "."
ZERO = "0"
ONE = "1"

# Enumeration order '.' < '0' < '1' coincides with ASCII order, so plain
# string comparison gives the canonical word order used by the search.
ALPHABET = BLANK + ZERO + ONE

# Alignment violation variants.
FULL_OVERLAP_REFLECTED = "full"
VARIANT_PLAIN = "Y"
VARIANT_REVERSED = "revY"


class LengthMismatch(ValueError):
    """Two words of different lengths were combined."""

    def __init__(self, len_x: int, len_y: int):
        super().__init__(f"words must have equal length, got {len_x} and {len_y}")
        self.lengths = (len_x, len_y)


_PAIR_FORCE = {
    (ZERO, ONE): 1,
    (ONE, ZERO): 1,
    (ZERO, ZERO): -1,
    (ONE, ONE): -1,
    (BLANK, BLANK): 0,
    (BLANK, ZERO): 0,
    (BLANK, ONE): 0,
    (ZERO, BLANK): 0,
    (ONE, BLANK): 0,
}

_COMPLEMENT = str.maketrans(ZERO + ONE, ONE + ZERO)


def parse_letter(text: str) -> str:
    """Parse a single-character letter ('0', '1', or '.')."""
    if len(text) != 1 or text not in ALPHABET:
        raise ValueError(f"not a letter: {text!r}")
    return text


def check_word(word: str) -> str:
    """Validate that every character of a word is '0', '1', or '.'."""
    for ch in word:
        if ch not in ALPHABET:
            raise ValueError(f"invalid letter {ch!r} in word {word!r}")
    return word


def letter_force(x: str, y: str) -> int:
    """Force between two letters: +1 opposite poles, -1 alike, 0 near a blank."""
    try:
        return _PAIR_FORCE[(x, y)]
    except KeyError:
        raise ValueError(f"invalid letter pair ({x!r}, {y!r})") from None


def word_force(x: str, y: str) -> int:
    """Net force between two equal-length words (positionwise sum)."""
    if len(x) != len(y):
        raise LengthMismatch(len(x), len(y))
    try:
        return sum(_PAIR_FORCE[pair] for pair in zip(x, y))
    except KeyError:
        check_word(x)
        check_word(y)
        raise


def is_attracted(x: str, y: str) -> bool:
    """True when the pair bonds, i.e. the net force is strictly positive."""
    return word_force(x, y) > 0


def reverse(word: str) -> str:
    """The letters of a word in reverse order."""
    return word[::-1]


def complement(word: str) -> str:
    """Swap '0' and '1' in every position; blanks stay put.

    Forces are invariant under complementing both operands, which makes this
    the one always-safe symmetry reduction for code search.
    """
    return word.translate(_COMPLEMENT)


def offset_forces(x: str, y: str) -> list[tuple[int, int, int]]:
    """Forces of every proper prefix/suffix overlap of x against y.

    Returns one (offset, prefix_force, suffix_force) triple per offset i in
    1..len(x)-1, where prefix_force pairs x[:i] with the last i letters of y
    and suffix_force pairs the last i letters of x with y[:i]. Empty for
    words of length 1.
    """
    n = len(x)
    if len(y) != n:
        raise LengthMismatch(n, len(y))
    if n == 0:
        raise ValueError("offset forces need words of length >= 1")
    return [
        (i, word_force(x[:i], y[n - i:]), word_force(x[n - i:], y[:i]))
        for i in range(1, n)
    ]


def alignment_violations(x: str, y: str) -> list[tuple[str, int, int]]:
    """Every attractive misaligned contact between x and y, sorted.

    Each violation is a (variant, offset, force) triple. Variant "Y" is a
    contact against y as-is (a reflected attachment), "revY" against the
    reverse of y (a rotated attachment), and "full" marks an attractive
    reflected full overlap (offset 0). The full overlap against reverse(y)
    is the bonding direction and is deliberately not constrained.
    """
    n = len(x)
    if len(y) != n:
        raise LengthMismatch(n, len(y))
    if n == 0:
        raise ValueError("alignment needs words of length >= 1")
    out = []
    full = word_force(x, y)
    if full > 0:
        out.append((FULL_OVERLAP_REFLECTED, 0, full))
    for variant, a in ((VARIANT_PLAIN, y), (VARIANT_REVERSED, y[::-1])):
        for i, pre, suf in offset_forces(x, a):
            if pre > 0:
                out.append((variant, i, pre))
            if suf > 0:
                out.append((variant, i, suf))
    out.sort()
    return out


def is_aligned(x: str, y: str) -> bool:
    """True when x and y admit no attractive misaligned contact.

    Early-exit twin of alignment_violations: checks the reflected full
    overlap and every proper prefix/suffix overlap of x against y and
    against reverse(y).
    """
    n = len(x)
    if len(y) != n:
        raise LengthMismatch(n, len(y))
    if n == 0:
        raise ValueError("alignment needs words of length >= 1")
    if word_force(x, y) > 0:
        return False
    for a in (y, y[::-1]):
        for i in range(1, n):
            if word_force(x[:i], a[n - i:]) > 0 or word_force(x[n - i:], a[:i]) > 0:
                return False
    return True
