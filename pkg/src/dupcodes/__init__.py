"""Reverse-complement and palindromic duplication channels and their codes."""

from .alphabet import Alphabet, Word, complement, reverse, reverse_complement, to_str, word
from .analysis import (
    Decomposition,
    Embedding,
    cones_meet_rc1,
    meet_guaranteed_k,
    minimal_decomposition,
    prefix_split,
    properly_spaced,
    signature,
    summary,
)
from .codes import (
    Capacity,
    CodeBook,
    CodeSpec,
    bound_rck,
    capacity,
    construct_pal1,
    construct_rc1,
    decode_pal1,
    decode_rc1,
    size_pal1,
    size_rc1,
)
from .duplication import (
    PAL,
    RC,
    TAN,
    Derivation,
    DuplicationEvent,
    RuleKind,
    apply,
    children,
    random_derivation,
    replay,
)
from .oracle import ConeQuery, ConeReport, class_count, cone, cones_intersect, verify_code
from .witness import (
    MeetWitness,
    extract_suffix,
    meet_k,
    meet_rc1,
    push_letter,
    run_extension,
    sync,
)

__version__ = "0.1.0"
