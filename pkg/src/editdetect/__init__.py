"""Codecs and verification tools for counting deletions and insertions per
block of a concatenated bit string.

Four fixed-position code families are provided, each with a systematic
encoder and a block-by-block decoder that recovers the exact number of edits
in every block of the received string.  A brute-force attribution oracle,
exhaustive decoder checks, converse-bound formulas, and an exact
maximum-code search back the codecs up at desk scale.
"""

from .bitstring import BitString
from .channel import (
    BlockEdit,
    ErrorPattern,
    apply_pattern,
    enumerate_patterns,
    format_pattern,
    model_count_vector,
    parse_pattern,
    random_pattern,
    true_count_vector,
)
from .codes import (
    FixedPositionMap,
    count_codewords_by_scan,
    encode,
    enumerate_codewords,
    fixed_positions,
    free_positions,
    is_codeword,
    message_bits,
    scan_codewords,
)
from .decoders import (
    PROBE_NAMES,
    decode,
    decode_deletions,
    decode_ins1,
    decode_ins2,
    decode_mixed1,
    decoder_for,
    shifted_decoder,
)
from .errors import (
    BudgetExceeded,
    EditDetectError,
    GapOutOfRange,
    LengthMismatch,
    MalformedReceived,
    NonDivisible,
    PatternSyntaxError,
    RangeViolation,
    TooLarge,
    Unreachable,
)
from .oracle import (
    AttributionResult,
    attribution,
    canonical_vector,
    consistent_vectors,
)
from .params import CodeParams, CountVector, Family, redundancy, validate_params
from .stress import stress_run
from .verify import (
    BoundValues,
    VerificationReport,
    audit_necessary_conditions,
    bounds,
    check_block_decodable,
    check_code_validity,
    check_decoder_exhaustive,
    max_code_search,
)

__version__ = "0.1.0"

__all__ = [
    "AttributionResult",
    "BitString",
    "BlockEdit",
    "BoundValues",
    "BudgetExceeded",
    "CodeParams",
    "CountVector",
    "EditDetectError",
    "ErrorPattern",
    "Family",
    "FixedPositionMap",
    "GapOutOfRange",
    "LengthMismatch",
    "MalformedReceived",
    "NonDivisible",
    "PatternSyntaxError",
    "PROBE_NAMES",
    "RangeViolation",
    "TooLarge",
    "Unreachable",
    "VerificationReport",
    "apply_pattern",
    "attribution",
    "audit_necessary_conditions",
    "bounds",
    "canonical_vector",
    "check_block_decodable",
    "check_code_validity",
    "check_decoder_exhaustive",
    "consistent_vectors",
    "count_codewords_by_scan",
    "decode",
    "decode_deletions",
    "decode_ins1",
    "decode_ins2",
    "decode_mixed1",
    "decoder_for",
    "encode",
    "enumerate_codewords",
    "enumerate_patterns",
    "fixed_positions",
    "format_pattern",
    "free_positions",
    "is_codeword",
    "max_code_search",
    "message_bits",
    "model_count_vector",
    "parse_pattern",
    "random_pattern",
    "redundancy",
    "scan_codewords",
    "shifted_decoder",
    "stress_run",
    "true_count_vector",
    "validate_params",
]
