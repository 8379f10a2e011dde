"""Symplectic structure, symplectic spectra and the partial-transpose map.

Quadratures are ordered ``(x1, p1, ..., xn, pn)`` with
``x = (a + a†)/√2`` and ``p = (a - a†)/(i√2)``, so the vacuum covariance
is ``I/2`` and physical states have every symplectic eigenvalue ``>= 1/2``.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import (
    BadModeIndex,
    DimensionMismatch,
    NegativeEigenvalue,
    NonSymmetric,
    NotPositiveDefinite,
    PairingFailure,
)

SYMMETRY_TOL = 1e-12
PD_TOL = 1e-12
PAIRING_RTOL = 1e-9
PHYSICALITY_TOL = 1e-10
PATTERN_TOL = 1e-12


def symplectic_form(n_modes: int) -> np.ndarray:
    """Block-diagonal Ω with one ``[[0, 1], [-1, 0]]`` block per mode."""
    if n_modes < 1:
        raise DimensionMismatch(f"n_modes must be positive, got {n_modes}")
    return np.kron(np.eye(n_modes), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def _as_matrix2n(sigma) -> np.ndarray:
    sigma = np.asarray(sigma, dtype=float)
    if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {sigma.shape}")
    if sigma.shape[0] < 2 or sigma.shape[0] % 2:
        raise DimensionMismatch(f"matrix dimension must be even and >= 2, got {sigma.shape[0]}")
    return sigma


def check_symmetric(sigma) -> np.ndarray:
    """Return ``sigma`` as an array, raising :class:`NonSymmetric` if it is not."""
    sigma = _as_matrix2n(sigma)
    bound = SYMMETRY_TOL * np.maximum(1.0, np.abs(sigma))
    if np.any(np.abs(sigma - sigma.T) > bound):
        raise NonSymmetric("covariance matrix is not symmetric")
    return sigma


def symplectic_eigenvalues(sigma) -> np.ndarray:
    """Symplectic spectrum of a positive-definite covariance matrix.

    The eigenvalues of ``iΩσ`` come in pairs ``±ν``. Their magnitudes are
    sorted and grouped two at a time; each pair must agree to a relative
    ``1e-9`` and is replaced by its mean.

    Returns:
        numpy.ndarray: the ``n`` symplectic eigenvalues in descending order.

    Raises:
        NonSymmetric, NotPositiveDefinite, PairingFailure
    """
    sigma = check_symmetric(sigma)
    sym = 0.5 * (sigma + sigma.T)
    if np.linalg.eigvalsh(sym).min() <= PD_TOL:
        raise NotPositiveDefinite("covariance matrix is not positive definite")

    n = sigma.shape[0] // 2
    mags = np.sort(np.abs(np.linalg.eigvals(1j * symplectic_form(n) @ sym)))[::-1]
    first, second = mags[0::2], mags[1::2]
    if np.any(np.abs(first - second) > PAIRING_RTOL * np.maximum(first, second)):
        raise PairingFailure(f"cannot pair eigenvalue magnitudes {mags}")
    return 0.5 * (first + second)


def partial_transpose(sigma, mode_index: int) -> np.ndarray:
    """Covariance of the partially transposed state: flip the sign of ``p`` of one mode."""
    sigma = _as_matrix2n(sigma)
    n = sigma.shape[0] // 2
    if not isinstance(mode_index, (int, np.integer)) or not 0 <= mode_index < n:
        raise BadModeIndex(f"mode_index {mode_index!r} out of range for {n} modes")
    flip = np.ones(2 * n)
    flip[2 * mode_index + 1] = -1.0
    return sigma * np.outer(flip, flip)


def pt_symplectic_eigenvalues_closed_form(
    A: float, Aprime: float, B: float, C: float
) -> tuple[float, float]:
    """Partial-transpose symplectic eigenvalues of the four-parameter covariance

    ::

        [[A, 0,  B,  C ],
         [0, A,  C, -B ],
         [B, C,  A', 0 ],
         [C, -B, 0,  A']]

    given by ``½[(A + A') ± sqrt((A - A')² + 4(B² + C²))]``. The smaller
    one is taken from ``ν₊ν₋ = AA' - B² - C²`` to avoid cancellation.
    """
    root = math.sqrt((A - Aprime) ** 2 + 4.0 * (B * B + C * C))
    nu_plus = 0.5 * ((A + Aprime) + root)
    product = A * Aprime - B * B - C * C
    nu_minus = product / nu_plus if nu_plus > 0.0 else 0.0
    if nu_minus < 0.0 or nu_plus < 0.0:
        raise NegativeEigenvalue(
            f"parameters A={A}, A'={Aprime}, B={B}, C={C} do not describe a physical state"
        )
    return float(nu_plus), float(nu_minus)


def special_form_parameters(sigma) -> tuple[float, float, float, float] | None:
    """Return ``(A, A', B, C)`` if a two-mode ``sigma`` has the four-parameter form, else None."""
    sigma = np.asarray(sigma, dtype=float)
    if sigma.shape != (4, 4):
        return None
    A, Aprime = sigma[0, 0], sigma[2, 2]
    B, C = sigma[0, 2], sigma[0, 3]
    template = np.array(
        [
            [A, 0.0, B, C],
            [0.0, A, C, -B],
            [B, C, Aprime, 0.0],
            [C, -B, 0.0, Aprime],
        ]
    )
    if np.max(np.abs(sigma - template)) > PATTERN_TOL * max(1.0, np.max(np.abs(sigma))):
        return None
    return float(A), float(Aprime), float(B), float(C)


def pt_symplectic_eigenvalues(sigma, mode_index: int = 1) -> np.ndarray:
    """Symplectic spectrum of the partially transposed two-mode covariance.

    Uses the closed form when ``sigma`` has the four-parameter shape and the
    generic eigenvalue route otherwise.
    """
    sigma = check_symmetric(sigma)
    params = special_form_parameters(sigma)
    if params is not None:
        return np.array(pt_symplectic_eigenvalues_closed_form(*params))
    return symplectic_eigenvalues(partial_transpose(sigma, mode_index))


def check_physicality(sigma) -> bool:
    """True iff every symplectic eigenvalue of ``sigma`` is at least ``1/2`` (within 1e-10)."""
    sigma = check_symmetric(sigma)
    try:
        spectrum = symplectic_eigenvalues(sigma)
    except (NotPositiveDefinite, PairingFailure):
        return False
    return bool(spectrum.min() >= 0.5 - PHYSICALITY_TOL)
