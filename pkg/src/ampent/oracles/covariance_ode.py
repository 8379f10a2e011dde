"""First- and second-moment equations of the amplifier master equation.

With ``L = -κN1 D'[a†] - κN2 D'[a]`` (gain through ``a†`` at rate ``2κN1``,
loss through ``a`` at rate ``2κN2``) one finds for every amplified quadrature

    d⟨x⟩/dt = κ(N1 - N2) ⟨x⟩
    dσ/dt   = Kσ + σK + Dg

where ``K`` holds the drift ``κ(N1 - N2)`` and ``Dg`` the diffusion
``κ(N1 + N2)`` on the amplified quadratures. The exact solution is the
phase-insensitive channel with ``g = exp(2κt(N1 - N2))`` and
``η = N2/(N1 - N2)``; here it is integrated with fixed-step RK4 instead.
"""

from __future__ import annotations

import math

import numpy as np

from ..channels import ModeSelection
from ..errors import StepTooLarge
from ..states import GaussianState
from .bath import BathSpec

DEFAULT_DT = 1e-3
HALVING_TOL = 1e-9


def _rk4(rhs, y: np.ndarray, t: float, n_steps: int) -> np.ndarray:
    h = t / n_steps
    for _ in range(n_steps):
        k1 = rhs(y)
        k2 = rhs(y + 0.5 * h * k1)
        k3 = rhs(y + 0.5 * h * k2)
        k4 = rhs(y + h * k3)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return y


def _integrate(state: GaussianState, bath: BathSpec, selection: ModeSelection, n_steps: int):
    dim = 2 * state.n_modes
    drift = np.zeros(dim)
    diffusion = np.zeros(dim)
    for mode in selection.modes:
        drift[2 * mode : 2 * mode + 2] = bath.drift
        diffusion[2 * mode : 2 * mode + 2] = bath.diffusion
    pair_drift = drift[:, None] + drift[None, :]
    noise = np.diag(diffusion)

    sigma = _rk4(lambda s: pair_drift * s + noise, state.sigma.copy(), bath.t, n_steps)
    mean = _rk4(lambda m: drift * m, state.mean.copy(), bath.t, n_steps)
    return mean, sigma


def covariance_ode_evolve(
    state: GaussianState,
    bath: BathSpec,
    selection: ModeSelection,
    dt: float = DEFAULT_DT,
) -> GaussianState:
    """Integrate the moment equations over ``[0, bath.t]``.

    The run is repeated with half the step; if any covariance entry moves by
    more than ``1e-9`` (relative to the largest entry once that exceeds one)
    the step is rejected with :class:`StepTooLarge`.
    The finer of the two solutions is returned.
    """
    selection.validate(state.n_modes)
    if bath.t == 0.0:
        return state
    n_steps = max(1, math.ceil(bath.t / dt))
    _, coarse = _integrate(state, bath, selection, n_steps)
    mean, fine = _integrate(state, bath, selection, 2 * n_steps)
    change = float(np.max(np.abs(fine - coarse)))
    if change > HALVING_TOL * max(1.0, float(np.max(np.abs(fine)))):
        raise StepTooLarge(
            f"halving dt={bath.t / n_steps:.3g} changed the covariance by {change:.3g}"
        )
    return GaussianState(state.n_modes, mean, 0.5 * (fine + fine.T))
