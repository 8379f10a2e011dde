"""Amplifier channels acting on Gaussian states at the covariance level.

Phase-insensitive amplification of mode ``k`` with intensity gain ``g`` and
population parameter ``η`` maps ``a_k -> G a_k + c†`` with
``⟨cc†⟩ = (1+η)(g-1)`` and ``⟨c†c⟩ = η(g-1)``. On quadratures this scales the
mode by ``√g`` and adds ``(1+2η)(g-1)/2`` to both of its variances.
Phase-sensitive amplification is a second two-mode squeezer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import BadSelection, GainBelowUnity, WrongModeCount
from .states import GaussianState, SqueezeSpec

@dataclass(frozen=True)
class AmplifierSpec:
    gain: float
    eta: float = 0.0

    def __post_init__(self) -> None:
        if not self.gain >= 1.0:
            raise GainBelowUnity(f"intensity gain must be >= 1, got {self.gain}")
        if not self.eta >= 0.0:
            raise ValueError(f"population parameter eta must be >= 0, got {self.eta}")

    @property
    def added_noise(self) -> float:
        """Variance added to each quadrature of an amplified mode."""
        return 0.5 * (1.0 + 2.0 * self.eta) * (self.gain - 1.0)


@dataclass(frozen=True)
class ModeSelection:
    modes: frozenset[int]

    def __init__(self, modes: Iterable[int]) -> None:
        modes = frozenset(int(m) for m in modes)
        if not modes:
            raise BadSelection("mode selection must be nonempty")
        object.__setattr__(self, "modes", modes)

    def validate(self, n_modes: int) -> None:
        bad = sorted(m for m in self.modes if not 0 <= m < n_modes)
        if bad:
            raise BadSelection(f"modes {bad} out of range for a {n_modes}-mode state")

    @classmethod
    def named(cls, name: str) -> "ModeSelection":
        """``"symmetric"`` amplifies both modes of a pair, ``"asymmetric"`` only the first."""
        try:
            return {"symmetric": SYMMETRIC, "asymmetric": ASYMMETRIC}[name]
        except KeyError:
            raise BadSelection(f"unknown selection {name!r}") from None


SYMMETRIC = ModeSelection((0, 1))
ASYMMETRIC = ModeSelection((0,))


def apply_phase_insensitive(
    state: GaussianState, spec: AmplifierSpec, selection: ModeSelection
) -> GaussianState:
    selection.validate(state.n_modes)
    scale = np.ones(2 * state.n_modes)
    noise = np.zeros(2 * state.n_modes)
    for mode in selection.modes:
        scale[2 * mode : 2 * mode + 2] = math.sqrt(spec.gain)
        noise[2 * mode : 2 * mode + 2] = spec.added_noise
    sigma = state.sigma * np.outer(scale, scale) + np.diag(noise)
    return GaussianState(state.n_modes, state.mean * scale, sigma)


def two_mode_squeeze_symplectic(r: float, theta: float) -> np.ndarray:
    """Symplectic matrix of ``S(z) = exp(z a†b† - z* ab)`` in ``(x1, p1, x2, p2)`` order."""
    ch, sh = math.cosh(r), math.sinh(r)
    rot = np.array([[math.cos(theta), math.sin(theta)], [math.sin(theta), -math.cos(theta)]])
    return np.block([[ch * np.eye(2), sh * rot], [sh * rot, ch * np.eye(2)]])


def apply_phase_sensitive(state: GaussianState, spec: SqueezeSpec) -> GaussianState:
    if state.n_modes != 2:
        raise WrongModeCount(f"phase-sensitive amplifier acts on 2 modes, got {state.n_modes}")
    S = two_mode_squeeze_symplectic(spec.r, spec.theta)
    sigma = S @ state.sigma @ S.T
    return GaussianState(2, S @ state.mean, 0.5 * (sigma + sigma.T))


def composed_squeeze_magnitude(r: float, r_prime: float, alpha: float) -> float:
    """Squeeze magnitude of two stacked two-mode squeezers with phase mismatch ``alpha``.

    Solves ``cosh 2r'' = cosh 2r cosh 2r' + sinh 2r sinh 2r' cos α`` through the
    equivalent ``sinh² r'' = sinh²(r - r') + sinh 2r sinh 2r' cos²(α/2)``, whose
    right-hand side is manifestly nonnegative and keeps full precision near r'' = 0.
    """
    s2 = math.sinh(r - r_prime) ** 2 + math.sinh(2.0 * r) * math.sinh(
        2.0 * r_prime
    ) * math.cos(0.5 * alpha) ** 2
    return math.asinh(math.sqrt(max(s2, 0.0)))
