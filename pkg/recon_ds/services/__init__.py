"""Services module - Codebook, reconstruction and verification campaigns."""

from .codebook import Codebook
from .reconstruct import (
    channel_emit,
    sample_reads,
    inverse_candidates,
    decode,
    list_decode_single,
    simulate,
)
from .verifier import (
    verify_bound,
    verify_structure,
    verify_delta,
    verify_counts,
    verify_global_bound,
    verify_p_bounded,
    verify_observations,
    verify_list_decoding,
    verify_c9_long_windows,
    run_suite,
    replay,
)

__all__ = [
    'Codebook',
    'channel_emit',
    'sample_reads',
    'inverse_candidates',
    'decode',
    'list_decode_single',
    'simulate',
    'verify_bound',
    'verify_structure',
    'verify_delta',
    'verify_counts',
    'verify_global_bound',
    'verify_p_bounded',
    'verify_observations',
    'verify_list_decoding',
    'verify_c9_long_windows',
    'run_suite',
    'replay',
]
