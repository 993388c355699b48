"""Linear-time testers for suffixient sets, with brute-force oracles."""
from .errors import (
    BadParameter,
    CapExceeded,
    EmptyText,
    IndexOutOfRange,
    NotARunBreak,
    ParseError,
    PositionOutOfRange,
    SentinelCollision,
    SuffixientError,
)
from .oracle import (
    ExtensionCatalog,
    build_catalog,
    coverage_check_observation1,
    is_suffixient_bruteforce,
    lcs_len,
    smallest_set_bruteforce,
)
from .slpr import SlprTables, compute_slpr, longest_extension_len
from .text import SuffixContext, Text, box, build_context, bwt_pos, prepare_text, run_breaks, text_pos
from .verifier import (
    CandidateLists,
    CandidateSet,
    Verdict,
    build_candidates,
    candidate_set,
    extension_covered,
    test_minimal,
    test_suffixient_linear,
    test_suffixient_quadratic,
)

__version__ = "0.1.0"
