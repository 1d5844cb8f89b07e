"""Minimum-length code search by iterative deepening with sound pruning.

Feasibility is not known to be monotone in length once alignment is
required, so minima are established the slow way: every shorter length is
exhausted before a witness counts as minimal.
"""

import enum
import time
from dataclasses import dataclass
from itertools import product

from .checker import CheckMode, check_encoding
from .constructions import Code
from .glues import GlueFunction
from .words import ALPHABET, complement, is_aligned, word_force


class SearchStatus(enum.Enum):
    FOUND = "FOUND"
    EXHAUSTED_NONE = "EXHAUSTED_NONE"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


class InstanceTooLarge(ValueError):
    """Exhaustive enumeration would exceed the step bound."""


class _BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class SearchConstraints:
    mode: CheckMode = CheckMode.SIGNS_PLUS_ALIGNMENT
    max_length: int = 8
    time_budget: float | None = None
    symmetry_pruning: bool = True

    def __post_init__(self):
        if self.max_length < 1:
            raise ValueError("max_length must be >= 1")


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a bounded search.

    FOUND implies the witness re-passed the checker and every shorter
    length was exhausted first, so proven_minimum really is the minimum.
    EXHAUSTED_NONE certifies that no code up to max_length exists.
    """

    status: SearchStatus
    witness: Code | None
    proven_minimum: int | None
    nodes_explored: int


def _pair_ok(mode: CheckMode, glue: GlueFunction, i: int, j: int, wi: str, wj: str) -> bool:
    """Constraint check for one fully-assigned word pair."""
    force = word_force(wi, wj[::-1])
    target = glue.value(i, j)
    if mode is CheckMode.EXACT_PLUS_ALIGNMENT:
        if force != target:
            return False
    elif (force > 0) != (target > 0):
        return False
    if mode is not CheckMode.SIGNS_ONLY and not is_aligned(wi, wj):
        return False
    return True


class _Searcher:
    def __init__(self, glue, mode, pruning, deadline):
        self.glue = glue
        self.mode = mode
        self.pruning = pruning
        self.deadline = deadline
        self.nodes = 0
        # twin[j] is the nearest earlier index whose glue row equals row j;
        # sorting words within such a class preserves validity, so the
        # search may demand word[twin[j]] <= word[j].
        self.twin = [0] * (glue.k + 1)
        if pruning:
            rows = [glue.row(i) for i in range(1, glue.k + 1)]
            for j in range(2, glue.k + 1):
                for i in range(j - 1, 0, -1):
                    if rows[i - 1] == rows[j - 1]:
                        self.twin[j] = i
                        break

    def run(self, length: int):
        """Depth-first scan of all codes of one length; words in '.' < '0' < '1' order."""
        candidates = ["".join(p) for p in product(ALPHABET, repeat=length)]
        chosen = [""] * self.glue.k
        return self._extend(chosen, 0, candidates)

    def _extend(self, chosen, depth, candidates):
        if depth == self.glue.k:
            return tuple(chosen)
        glue_index = depth + 1
        twin = self.twin[glue_index]
        for word in candidates:
            if self.deadline is not None and time.monotonic() >= self.deadline:
                raise _BudgetExceeded
            if self.pruning:
                # Complementing every word preserves all forces, so one
                # representative per complement class suffices at the root.
                if depth == 0 and complement(word) < word:
                    continue
                if twin and chosen[twin - 1] > word:
                    continue
            self.nodes += 1
            if not _pair_ok(self.mode, self.glue, glue_index, glue_index, word, word):
                continue
            if any(
                not _pair_ok(self.mode, self.glue, i, glue_index, chosen[i - 1], word)
                for i in range(1, glue_index)
            ):
                continue
            chosen[depth] = word
            found = self._extend(chosen, depth + 1, candidates)
            if found is not None:
                return found
            chosen[depth] = ""
        return None


def search_min_code(glue: GlueFunction, constraints: SearchConstraints, progress=None) -> SearchOutcome:
    """Find the shortest code realizing a glue table, by iterative deepening.

    Lengths run 1..max_length in increasing order and each is fully
    exhausted (modulo the force-preserving symmetry reductions) before the
    next, so a FOUND outcome proves its minimum and the witness is the
    lexicographically least one the reduced scan reaches. Progress lines go
    to the optional `progress` stream.
    """
    if glue.k < 1:
        raise ValueError("need at least one glue")
    deadline = None
    if constraints.time_budget is not None:
        deadline = time.monotonic() + constraints.time_budget
    searcher = _Searcher(glue, constraints.mode, constraints.symmetry_pruning, deadline)
    for length in range(1, constraints.max_length + 1):
        try:
            words = searcher.run(length)
        except _BudgetExceeded:
            if progress is not None:
                print(
                    f"SEARCH l={length} nodes={searcher.nodes} status=BUDGET_EXCEEDED",
                    file=progress,
                )
            return SearchOutcome(SearchStatus.BUDGET_EXCEEDED, None, None, searcher.nodes)
        if progress is not None:
            state = "FOUND" if words is not None else "exhausted"
            print(f"SEARCH l={length} nodes={searcher.nodes} status={state}", file=progress)
        if words is not None:
            witness = Code(words)
            if not check_encoding(witness, glue, constraints.mode).passed:
                raise RuntimeError(
                    f"search returned a witness the checker rejects: {words}"
                )
            return SearchOutcome(SearchStatus.FOUND, witness, length, searcher.nodes)
    return SearchOutcome(SearchStatus.EXHAUSTED_NONE, None, None, searcher.nodes)


def exhaustive_oracle(glue: GlueFunction, exact_length: int, mode: CheckMode) -> list[Code]:
    """Every code of the exact length that passes the checker, by brute force.

    No pruning and no symmetry reduction; this is the reference that
    validates search_min_code on tiny instances. Refuses instances beyond
    10^8 enumeration steps.
    """
    if exact_length < 1:
        raise ValueError("length must be >= 1")
    steps = 3 ** (glue.k * exact_length)
    if steps > 10**8:
        raise InstanceTooLarge(
            f"3^({glue.k}*{exact_length}) = {steps} enumeration steps"
        )
    pool = ["".join(p) for p in product(ALPHABET, repeat=exact_length)]
    out = []
    for combo in product(pool, repeat=glue.k):
        code = Code(combo)
        if check_encoding(code, glue, mode).passed:
            out.append(code)
    return out


def blank_padded(code: Code, amount: int = 1) -> Code:
    """Pad every word with blanks on both ends (length + 2*amount).

    Symmetric padding preserves every reverse-force and every overlap
    constraint, so a passing code stays passing at the larger length.
    Single-sided padding does NOT preserve forces: it shifts each word
    against the reversed partner by one slot.
    """
    if amount < 0:
        raise ValueError("pad amount must be non-negative")
    pad = "." * amount
    return Code(tuple(pad + w + pad for w in code.words))
