"""Truncated Fock-space integration of the amplifier master equation.

The two-mode density matrix is stored as a tensor ``rho[i, j, k, l] =
⟨i, j|ρ|k, l⟩`` (ket indices of modes a, b followed by bra indices). Each
amplified mode sees an independent bath

    dρ/dt = 2κN1 (a†ρa - ½{aa†, ρ}) + 2κN2 (aρa† - ½{a†a, ρ}),

with ladder operators truncated to ``dim_per_mode`` levels. No Gaussian
assumption enters: entanglement is read off the spectrum of the partially
transposed density matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..channels import ModeSelection
from ..errors import NonHermitianDrift, StepTooLarge, TruncationLeakage
from .bath import BathSpec

LEAKAGE_TOL = 1e-6
HERMITICITY_TOL = 1e-9
HALVING_TOL = 1e-6


@dataclass(frozen=True)
class FockConfig:
    dim_per_mode: int = 12
    dt: float = 0.01
    method: str = "rk4"

    def __post_init__(self) -> None:
        if self.dim_per_mode < 2:
            raise ValueError(f"dim_per_mode must be >= 2, got {self.dim_per_mode}")
        if not self.dt > 0.0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if self.method != "rk4":
            raise ValueError(f"unsupported integration method {self.method!r}")


@dataclass
class FockRun:
    """Final density matrix of a Fock integration plus its numerical diagnostics."""

    rho: np.ndarray
    leakage: float
    max_trace_error: float
    max_hermiticity_error: float

    @property
    def dim(self) -> int:
        return self.rho.shape[0]

    @cached_property
    def pt_eigenvalues(self) -> np.ndarray:
        d = self.dim
        pt = np.transpose(self.rho, (0, 3, 2, 1)).reshape(d * d, d * d)
        return np.linalg.eigvalsh(0.5 * (pt + pt.conj().T))

    @property
    def negativity(self) -> float:
        eigs = self.pt_eigenvalues
        return float(np.abs(eigs[eigs < 0.0]).sum())

    @property
    def log_negativity(self) -> float:
        return math.log1p(2.0 * self.negativity)


def tmsv_fock(r: float, theta: float, dim: int) -> np.ndarray:
    """Density tensor of the two-mode squeezed vacuum truncated to ``dim`` levels per mode.

    Amplitudes are ``(e^{iθ} tanh r)^n / cosh r`` on ``|n, n⟩``, renormalised
    after truncation.
    """
    n = np.arange(dim)
    amps = (np.exp(1j * theta) * math.tanh(r)) ** n / math.cosh(r)
    amps /= np.linalg.norm(amps)
    psi = np.zeros((dim, dim), dtype=complex)
    psi[n, n] = amps
    return np.einsum("ij,kl->ijkl", psi, psi.conj())


def marginal_populations(rho: np.ndarray, mode: int) -> np.ndarray:
    d = rho.shape[0]
    diag = np.einsum("ijij->ij", rho).real
    return diag.sum(axis=1 - mode) if d else diag


def truncation_leakage(rho: np.ndarray) -> float:
    """Largest population held by the top two Fock levels of either mode."""
    return max(float(marginal_populations(rho, m)[-2:].sum()) for m in (0, 1))


class _Dissipator:
    """Right-hand side of the master equation for a set of amplified modes."""

    def __init__(self, dim: int, bath: BathSpec, modes) -> None:
        n = np.arange(dim, dtype=float)
        root = np.sqrt(n)
        gain_rate = 2.0 * bath.kappa * bath.N1
        loss_rate = 2.0 * bath.kappa * bath.N2
        # truncated a a† has its top level removed
        aad = np.append(n[1:], 0.0)

        self.modes = sorted(modes)
        self.up = gain_rate * np.outer(root[1:], root[1:])[:, :, None, None]
        self.down = loss_rate * np.outer(root[1:], root[1:])[:, :, None, None]
        single = -0.5 * gain_rate * (aad[:, None] + aad[None, :]) - 0.5 * loss_rate * (
            n[:, None] + n[None, :]
        )
        # single[ket, bra] of one mode spread over the (i, j, k, l) layout
        decay = np.zeros((dim,) * 4)
        for mode in self.modes:
            shape = [1, 1, 1, 1]
            shape[mode] = shape[2 + mode] = dim
            decay = decay + np.moveaxis(single[:, :, None, None], (0, 1), (mode, 2 + mode)).reshape(
                shape
            )
        self.decay = decay

    def __call__(self, rho: np.ndarray) -> np.ndarray:
        out = self.decay * rho
        for mode in self.modes:
            src = np.moveaxis(rho, (mode, 2 + mode), (0, 1))
            dst = np.moveaxis(out, (mode, 2 + mode), (0, 1))
            dst[1:, 1:] += self.up * src[:-1, :-1]
            dst[:-1, :-1] += self.down * src[1:, 1:]
        return out


def _hermiticity_error(rho: np.ndarray) -> float:
    return float(np.max(np.abs(rho - np.transpose(rho, (2, 3, 0, 1)).conj())))


def _integrate(rho: np.ndarray, rhs: _Dissipator, t: float, n_steps: int):
    h = t / n_steps
    trace_err = herm_err = 0.0
    for _ in range(n_steps):
        k1 = rhs(rho)
        k2 = rhs(rho + 0.5 * h * k1)
        k3 = rhs(rho + 0.5 * h * k2)
        k4 = rhs(rho + h * k3)
        rho = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        trace = np.einsum("ijij->", rho)
        trace_err = max(trace_err, abs(trace - 1.0))
        herm_err = max(herm_err, _hermiticity_error(rho))
        if herm_err > HERMITICITY_TOL:
            raise NonHermitianDrift(f"density matrix lost hermiticity by {herm_err:.3g}")
    return rho, trace_err, herm_err


def fock_evolve(
    r: float,
    bath: BathSpec,
    selection: ModeSelection,
    config: FockConfig = FockConfig(),
    theta: float = 0.0,
) -> FockRun:
    """Evolve a truncated TMSV under independent amplifier baths on the selected modes.

    The integration is repeated with half the step and rejected with
    :class:`StepTooLarge` if the density matrix moves by more than ``1e-6``
    in any entry. Raises :class:`TruncationLeakage` when the top two levels
    of either mode carry more than ``1e-6`` population.
    """
    selection.validate(2)
    d = config.dim_per_mode
    rho0 = tmsv_fock(r, theta, d)
    if not np.any(rho0.imag):
        # the dissipator is real, so a real initial state stays real
        rho0 = rho0.real.copy()
    leakage = truncation_leakage(rho0)
    if leakage > LEAKAGE_TOL:
        raise TruncationLeakage(f"initial state leaks {leakage:.3g} into the top levels", leakage)
    if bath.t == 0.0:
        return FockRun(rho0, leakage, abs(np.einsum("ijij->", rho0) - 1.0), 0.0)

    rhs = _Dissipator(d, bath, selection.modes)
    n_steps = max(1, math.ceil(bath.t / config.dt))
    coarse, *_ = _integrate(rho0, rhs, bath.t, n_steps)
    rho, trace_err, herm_err = _integrate(rho0, rhs, bath.t, 2 * n_steps)
    change = float(np.max(np.abs(rho - coarse)))
    if change > HALVING_TOL:
        raise StepTooLarge(f"halving dt changed the density matrix by {change:.3g}")

    leakage = truncation_leakage(rho)
    if leakage > LEAKAGE_TOL:
        raise TruncationLeakage(
            f"evolved state leaks {leakage:.3g} into the top levels of a {d}-level truncation",
            leakage,
        )
    return FockRun(rho, leakage, trace_err, herm_err)


def fock_evolve_negativity(
    r: float,
    bath: BathSpec,
    selection: ModeSelection,
    config: FockConfig = FockConfig(),
    theta: float = 0.0,
) -> tuple[float, float]:
    """Logarithmic negativity ``ln(1 + 2N)`` of the evolved state and its truncation leakage."""
    run = fock_evolve(r, bath, selection, config, theta)
    return run.log_negativity, run.leakage


def _quadratures(dim: int, pad: int = 4) -> tuple[list[np.ndarray], np.ndarray]:
    """Quadratures ``(x_a, p_a, x_b, p_b)`` on a padded two-mode space.

    Products of up to ``pad`` quadratures, restricted afterwards to the
    ``dim``-level subspace, carry exact matrix elements.
    """
    ext = dim + pad
    a = np.diag(np.sqrt(np.arange(1, ext)), 1)
    x = (a + a.T) / math.sqrt(2.0)
    p = (a - a.T) / (1j * math.sqrt(2.0))
    eye = np.eye(ext)
    ops = [np.kron(x, eye), np.kron(p, eye), np.kron(eye, x), np.kron(eye, p)]
    idx = (np.arange(dim)[:, None] * ext + np.arange(dim)[None, :]).reshape(-1)
    return ops, idx


def _expect(rho: np.ndarray, op: np.ndarray, idx: np.ndarray) -> float:
    d = rho.shape[0]
    block = op[np.ix_(idx, idx)]
    return float(np.real(np.trace(rho.reshape(d * d, d * d) @ block)))


def fock_covariance(rho: np.ndarray) -> np.ndarray:
    """Symmetrised quadrature covariance of a two-mode density tensor."""
    ops, idx = _quadratures(rho.shape[0], pad=2)
    mean = np.array([_expect(rho, op, idx) for op in ops])
    sigma = np.empty((4, 4))
    for i in range(4):
        for j in range(i, 4):
            sym = 0.5 * (ops[i] @ ops[j] + ops[j] @ ops[i])
            sigma[i, j] = sigma[j, i] = _expect(rho, sym, idx) - mean[i] * mean[j]
    return sigma


def quadrature_cumulant4(rho: np.ndarray, coeffs) -> float:
    """Fourth cumulant of the quadrature combination ``Σ cᵢ Xᵢ``; zero for Gaussian states."""
    ops, idx = _quadratures(rho.shape[0])
    q = sum(c * op for c, op in zip(coeffs, ops))
    q2 = q @ q
    m1, m2, m3, m4 = (_expect(rho, op, idx) for op in (q, q2, q2 @ q, q2 @ q2))
    return m4 - 4.0 * m3 * m1 - 3.0 * m2 * m2 + 12.0 * m2 * m1 * m1 - 6.0 * m1**4
