"""Gaussian states, their construction, and two-mode entanglement quantifiers."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    NegativeOccupation,
    NonPhysicalState,
    WrongModeCount,
)
from .symplectic import check_physicality, check_symmetric, pt_symplectic_eigenvalues


# States within this distance of the separability boundary are reported separable.
ENTANGLEMENT_GUARD = 1e-12


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class GaussianState:
    """Zero-or-displaced Gaussian state given by its quadrature mean and covariance.

    Both arrays are copied and made read-only. Construction fails with
    :class:`NonPhysicalState` if the covariance violates the uncertainty
    relation.
    """

    n_modes: int
    mean: np.ndarray
    sigma: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.n_modes < 1:
            raise DimensionMismatch(f"n_modes must be positive, got {self.n_modes}")
        mean = _frozen(self.mean).reshape(-1)
        sigma = _frozen(check_symmetric(self.sigma))
        if mean.shape != (2 * self.n_modes,) or sigma.shape != (2 * self.n_modes,) * 2:
            raise DimensionMismatch(
                f"{self.n_modes} modes need mean of length {2 * self.n_modes}, "
                f"got mean {mean.shape} and sigma {sigma.shape}"
            )
        if not check_physicality(sigma):
            raise NonPhysicalState("covariance matrix violates the uncertainty relation")
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "sigma", sigma)

    @classmethod
    def from_covariance(cls, sigma, mean=None) -> "GaussianState":
        sigma = np.asarray(sigma, dtype=float)
        n = sigma.shape[0] // 2
        if mean is None:
            mean = np.zeros(2 * n)
        return cls(n, mean, sigma)


@dataclass(frozen=True)
class SqueezeSpec:
    """Two-mode squeeze ``z = r e^{iθ}``; ``theta`` is reduced to ``[0, 2π)``."""

    r: float
    theta: float = 0.0

    def __post_init__(self) -> None:
        if not self.r >= 0.0:
            raise ValueError(f"squeeze magnitude must be nonnegative, got {self.r}")
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "theta", float(self.theta) % (2.0 * math.pi))


@dataclass(frozen=True)
class EntanglementReport:
    nu_minus: float
    log_negativity: float
    entangled: bool

    @classmethod
    def from_nu_minus(cls, nu_minus: float) -> "EntanglementReport":
        nu_minus = float(nu_minus)
        return cls(
            nu_minus=nu_minus,
            log_negativity=log_negativity_from_nu(nu_minus),
            entangled=nu_minus < 0.5 - ENTANGLEMENT_GUARD,
        )


def log_negativity_from_nu(nu_minus: float) -> float:
    """``max(0, -ln(2 ν))`` in nats."""
    if nu_minus >= 0.5:
        return 0.0
    return -math.log(2.0 * nu_minus)


def vacuum(n_modes: int = 2) -> GaussianState:
    return GaussianState(n_modes, np.zeros(2 * n_modes), 0.5 * np.eye(2 * n_modes))


def thermal_state(n_modes: int, nbar_per_mode: Sequence[float]) -> GaussianState:
    """Product of thermal modes with covariance ``diag(n̄ᵢ + 1/2)`` on both quadratures."""
    nbar = np.asarray(nbar_per_mode, dtype=float).reshape(-1)
    if nbar.shape != (n_modes,):
        raise DimensionMismatch(f"need {n_modes} occupations, got {nbar.size}")
    if np.any(nbar < 0.0):
        raise NegativeOccupation(f"occupations must be nonnegative, got {nbar.tolist()}")
    return GaussianState(n_modes, np.zeros(2 * n_modes), np.diag(np.repeat(nbar + 0.5, 2)))


def tmsv_covariance(r: float, theta: float = 0.0) -> np.ndarray:
    A = 0.5 * math.cosh(2.0 * r)
    B = 0.5 * math.sinh(2.0 * r) * math.cos(theta)
    C = 0.5 * math.sinh(2.0 * r) * math.sin(theta)
    return np.array(
        [
            [A, 0.0, B, C],
            [0.0, A, C, -B],
            [B, C, A, 0.0],
            [C, -B, 0.0, A],
        ]
    )


def tmsv(spec: SqueezeSpec) -> GaussianState:
    """Two-mode squeezed vacuum ``S(z)|0,0⟩``."""
    return GaussianState(2, np.zeros(4), tmsv_covariance(spec.r, spec.theta))


def entanglement_report(state: GaussianState) -> EntanglementReport:
    """PPT verdict and logarithmic negativity of a two-mode Gaussian state."""
    if state.n_modes != 2:
        raise WrongModeCount(f"entanglement_report needs 2 modes, got {state.n_modes}")
    nu_minus = float(np.min(pt_symplectic_eigenvalues(state.sigma)))
    return EntanglementReport.from_nu_minus(nu_minus)


def wigner_density(state: GaussianState, point) -> float:
    point = np.asarray(point, dtype=float).reshape(-1)
    if point.shape != state.mean.shape:
        raise DimensionMismatch(
            f"point has length {point.size}, state needs {state.mean.size}"
        )
    delta = point - state.mean
    quad = float(delta @ np.linalg.solve(state.sigma, delta))
    norm = (2.0 * math.pi) ** state.n_modes * math.sqrt(np.linalg.det(state.sigma))
    return math.exp(-0.5 * quad) / norm
