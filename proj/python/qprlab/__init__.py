from ._qprlab import (
    HermitianOperator,
    NqprFrame,
    ValidationError,
    closed_forms,
    frame_channel_negativity,
    frame_negativity,
    frame_unitary_negativity,
    mu,
    random_state,
    sic_frame_from_fiducial,
    sic_minus_frame,
    sic_plus_frame,
    state_negativity,
    unitary_negativity,
    validate_nqpr,
    wootters_frame,
)

__all__ = [
    "HermitianOperator",
    "NqprFrame",
    "ValidationError",
    "closed_forms",
    "frame_channel_negativity",
    "frame_negativity",
    "frame_unitary_negativity",
    "mu",
    "random_state",
    "sic_frame_from_fiducial",
    "sic_minus_frame",
    "sic_plus_frame",
    "state_negativity",
    "unitary_negativity",
    "validate_nqpr",
    "wootters_frame",
]
