"""Dipole codes: equal-length magnet-slot words realizing a glue function."""

from .checker import (
    CheckMode,
    EncodingReport,
    alignment_audit,
    check_encoding,
    force_matrix,
    matrix_csv,
    report_text,
)
from .constructions import (
    Code,
    NonBipartite,
    balanced_bit_words,
    bipartite_code,
    concat_with_spacer,
    general_code,
    log_signed_code,
    log_signed_code_for_pairs,
    signed_canonical_code,
    unsigned_canonical_code,
)
from .glues import (
    BondGraph,
    ConflictingEntry,
    GlueFunction,
    bipartition,
    bond_graph,
    canonical_signed,
    canonical_unsigned,
    make_glue,
    signed_double,
)
from .search import (
    InstanceTooLarge,
    SearchConstraints,
    SearchOutcome,
    SearchStatus,
    blank_padded,
    exhaustive_oracle,
    search_min_code,
)
from .words import (
    ALPHABET,
    BLANK,
    ONE,
    ZERO,
    LengthMismatch,
    alignment_violations,
    complement,
    is_aligned,
    is_attracted,
    letter_force,
    offset_forces,
    reverse,
    word_force,
)

__version__ = "0.1.0"
