"""Code constructions for canonical, bipartite, general, and log-length families.

Every construction returns a Code whose reverse-forces have the same sign
pattern as its target glue function, with all word pairs aligned. The
checker module is the ground truth for that claim; the test suite runs it
over every family.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .glues import GlueFunction, bipartition, signed_double
from .words import LengthMismatch, check_word


class NonBipartite(ValueError):
    """The glue function's bond graph cannot be two-colored."""


@dataclass(frozen=True)
class Code:
    """An ordered set of equal-length words, word i belonging to glue i."""

    words: tuple[str, ...]

    def __post_init__(self):
        lengths = {len(w) for w in self.words}
        if len(lengths) > 1:
            raise ValueError(f"ragged code: word lengths {sorted(lengths)}")
        for w in self.words:
            check_word(w)

    @property
    def k(self) -> int:
        return len(self.words)

    @property
    def length(self) -> int:
        return len(self.words[0]) if self.words else 0


def signed_canonical_code(k: int) -> Code:
    """2k words of length 6k+14 realizing k complementary glue pairs.

    Word 2a-1 carries a unary slot pattern with the a-th slot flipped; word
    2a carries a lone probe magnet at slot a between long 1-runs. Matched
    pairs meet at force exactly 1, all other reverse-forces are <= 0.
    """
    if k < 1:
        raise ValueError("need at least one complementary pair")
    words = []
    for a in range(1, k + 1):
        left = (
            "." * (2 * k + 5)
            + "11"
            + ".1" * (a - 1)
            + "1."
            + ".1" * (k - a)
            + "1"
            + "." * (2 * k + 6)
        )
        right = (
            "1" * (2 * k + 6)
            + "0"
            + ".." * (k - a)
            + "1."
            + ".." * (a - 1)
            + ".."
            + "1" * (2 * k + 5)
        )
        words.append(left)
        words.append(right)
    return Code(tuple(words))


def concat_with_spacer(code_a: Code, code_b: Code, pairing, spacer_length: int) -> Code:
    """Join words from two equal-length codes with a blank spacer in between.

    With a non-negative spacer and common component length, reverse-forces
    add componentwise:
    f(A + S + B, rev(A' + S + B')) = f(A, rev(B')) + f(B, rev(A')).
    """
    if spacer_length < 0:
        raise ValueError("spacer length must be non-negative")
    if code_a.length != code_b.length:
        raise LengthMismatch(code_a.length, code_b.length)
    spacer = "." * spacer_length
    words = []
    for ia, ib in pairing:
        if not (1 <= ia <= code_a.k and 1 <= ib <= code_b.k):
            raise IndexError(f"pairing index out of range: ({ia}, {ib})")
        words.append(code_a.words[ia - 1] + spacer + code_b.words[ib - 1])
    return Code(tuple(words))


def unsigned_canonical_code(k: int) -> Code:
    """k self-bonding words of length 18k+42.

    Fuses each complementary pair of the signed code with a blank spacer as
    long as one component word, so the two cross-forces add to 2 on the
    diagonal and cancel to 0 everywhere else.
    """
    signed = signed_canonical_code(k)
    pairing = [(2 * a - 1, 2 * a) for a in range(1, k + 1)]
    return concat_with_spacer(signed, signed, pairing, signed.length)


def sign_slot(value: int) -> str:
    """Two-slot pattern encoding the sign of a glue entry.

    '1.' leaves the probe magnet untouched (bond), '.1' repels it (block).
    """
    return "1." if value > 0 else ".1"


def bit_slot(bit: int) -> str:
    """Two-slot pattern for one bit of a balanced word, pattern side."""
    if bit not in (0, 1):
        raise ValueError(f"not a bit: {bit!r}")
    return "1." if bit == 0 else ".1"


def probe_slot(bit: int) -> str:
    """Two-slot pattern for one bit of a balanced word, probe side."""
    if bit not in (0, 1):
        raise ValueError(f"not a bit: {bit!r}")
    return "1." if bit == 0 else "0."


def bipartite_code(glue: GlueFunction) -> Code:
    """One word per glue index, for glue functions with a bipartite bond graph.

    With bipartition (v1, v2) and m = |v2|, every word has length 2k+14+2m,
    which is at most 3k+14 since m <= k/2. Each v1 word lists the signs of
    its bonds into v2 as two-letter slots; each v2 word probes one slot.
    """
    parts = bipartition(glue)
    if parts is None:
        raise NonBipartite("bond graph is not bipartite")
    v1, v2 = parts
    k = glue.k
    probe_order = sorted(v2)
    m = len(probe_order)
    words = [""] * k
    for a in sorted(v1):
        middle = "".join(sign_slot(glue.value(a, b)) for b in probe_order)
        words[a - 1] = "." * (k + 5) + "11" + middle + "1" + "." * (k + 6)
    for local, b in enumerate(probe_order, start=1):
        words[b - 1] = (
            "1" * (k + 6)
            + "0"
            + ".." * (m - local)
            + "1."
            + ".." * (local - 1)
            + ".."
            + "1" * (k + 5)
        )
    return Code(tuple(words))


def general_code(glue: GlueFunction) -> Code:
    """k words realizing an arbitrary glue sign pattern, self-bonds included.

    Doubles the glue function into a bipartite one (glue i becoming the pair
    i, i+k), builds the bipartite code, and fuses each pair with a spacer as
    long as one component word. Final length is 3x the component length.
    """
    if glue.k < 1:
        raise ValueError("need at least one glue")
    component = bipartite_code(signed_double(glue))
    pairing = [(i, glue.k + i) for i in range(1, glue.k + 1)]
    return concat_with_spacer(component, component, pairing, component.length)


def balanced_bit_words(k: int) -> list[str]:
    """All length-k bit words with k/2 zeros and k/2 ones, lexicographically.

    The position in this list is the pairing between balanced words and
    glue-pair indices, so the order is load-bearing.
    """
    if k < 2 or k % 2:
        raise ValueError("need a positive even length")
    words = []
    for ones in combinations(range(k), k // 2):
        bits = ["0"] * k
        for p in ones:
            bits[p] = "1"
        words.append("".join(bits))
    words.sort()
    return words


def log_signed_code(k: int) -> Code:
    """2*C(k, k/2) words of length 20k+4 for as many complementary pairs.

    One word pair per balanced bit word: the unary slot patterns of the
    signed canonical family are replaced by binary ones, so the word count
    grows exponentially in the length. The flanking 1-runs contribute a
    fixed -(k/2 - 1), and the middle patterns meet at k/2 exactly when the
    two balanced words agree, leaving matched pairs at force 1.
    """
    if k < 4 or k % 4:
        raise ValueError("length parameter must be a positive multiple of 4")
    q = k // 4
    words = []
    for c in balanced_bit_words(k):
        pattern = "".join(bit_slot(int(b)) for b in c)
        probes = "".join(probe_slot(int(b)) for b in reversed(c))
        left = (
            "." * (6 * k)
            + "1" * q
            + "." * (11 * k // 4)
            + "11"
            + pattern
            + "1"
            + "." * (11 * k // 4 + 1)
            + "1" * (q - 1)
            + "." * (6 * k + 1)
        )
        right = "1" * (9 * k + 1) + "." + probes + ".." + "1" * (9 * k)
        words.append(left)
        words.append(right)
    return Code(tuple(words))


def log_signed_code_for_pairs(n: int) -> Code:
    """Shortest log-family code covering n complementary pairs.

    Picks the smallest admissible k with C(k, k/2) >= n and keeps the first
    2n words; a prefix of a valid code stays valid.
    """
    if n < 1:
        raise ValueError("need at least one pair")
    k = 4
    while comb(k, k // 2) < n:
        k += 4
    return Code(log_signed_code(k).words[: 2 * n])
