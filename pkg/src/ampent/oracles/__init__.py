"""Independent checks of the Gaussian channel results."""

from .bath import BathSpec
from .covariance_ode import covariance_ode_evolve
from .fock import (
    FockConfig,
    FockRun,
    fock_covariance,
    fock_evolve,
    fock_evolve_negativity,
    quadrature_cumulant4,
    tmsv_fock,
)

__all__ = [
    "BathSpec",
    "FockConfig",
    "FockRun",
    "covariance_ode_evolve",
    "fock_covariance",
    "fock_evolve",
    "fock_evolve_negativity",
    "quadrature_cumulant4",
    "tmsv_fock",
]
