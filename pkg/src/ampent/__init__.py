"""Entanglement of two-mode Gaussian states under linear amplifier noise."""

from .channels import (
    ASYMMETRIC,
    SYMMETRIC,
    AmplifierSpec,
    ModeSelection,
    apply_phase_insensitive,
    apply_phase_sensitive,
    composed_squeeze_magnitude,
    two_mode_squeeze_symplectic,
)
from .states import (
    EntanglementReport,
    GaussianState,
    SqueezeSpec,
    entanglement_report,
    thermal_state,
    tmsv,
    vacuum,
    wigner_density,
)
from .symplectic import (
    check_physicality,
    partial_transpose,
    pt_symplectic_eigenvalues,
    pt_symplectic_eigenvalues_closed_form,
    symplectic_eigenvalues,
    symplectic_form,
)
from .thresholds import (
    ThresholdResult,
    asymmetric_critical_gain,
    critical_phase_mismatch,
    hfm_nonclassicality_bound,
    symmetric_critical_gain,
)

__version__ = "0.1.0"
