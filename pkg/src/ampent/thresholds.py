"""Critical gains and the critical phase mismatch for an amplified two-mode squeezed vacuum."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import BracketFailure, NonPositiveSqueeze

RESIDUAL_TOL = 1e-9
MAX_BRACKET_GAIN = 1e12


@dataclass(frozen=True)
class ThresholdResult:
    """Gain above which the output is separable.

    ``critical_gain`` is ``math.inf`` exactly when ``finite`` is False.
    """

    critical_gain: float
    finite: bool
    solver: str  # "closed_form" or "bisection"

    def format_gain(self, digits: int = 6) -> str:
        return f"{self.critical_gain:.{digits}f}" if self.finite else "inf"


def symmetric_nu_minus(gain: float, r: float, eta: float) -> float:
    """Smaller PT symplectic eigenvalue after amplifying both modes of a TMSV."""
    k = 1.0 + 2.0 * eta
    return 0.5 * (gain * (math.exp(-2.0 * r) + k) - k)


def asymmetric_nu_minus(gain: float, r: float, eta: float) -> float:
    """Smaller PT symplectic eigenvalue after amplifying only the first mode of a TMSV.

    ``¼[P - √Q]`` with ``P = (g+1)cosh 2r + k(g-1)``,
    ``Q = (g-1)²(cosh 2r + k)² + 4g sinh² 2r`` and ``k = 1 + 2η``, evaluated as
    ``(P² - Q) / 4(P + √Q)`` where ``P² - Q = 4[(g-1) k cosh 2r + g]``, which
    avoids cancellation at large gain.
    """
    k = 1.0 + 2.0 * eta
    c, s = math.cosh(2.0 * r), math.sinh(2.0 * r)
    p = (gain + 1.0) * c + k * (gain - 1.0)
    root = math.sqrt((gain - 1.0) ** 2 * (c + k) ** 2 + 4.0 * gain * s * s)
    return ((gain - 1.0) * k * c + gain) / (p + root)


def symmetric_critical_gain(r: float, eta: float) -> ThresholdResult:
    gain = (2.0 + 2.0 * eta) / (1.0 + 2.0 * eta + math.exp(-2.0 * r))
    return ThresholdResult(gain, True, "closed_form")


def bisect_critical_gain(
    nu_of_gain: Callable[[float], float],
    *,
    tol: float = RESIDUAL_TOL,
    max_gain: float = MAX_BRACKET_GAIN,
) -> float:
    """Root of ``nu_of_gain(g) = 1/2`` for ``g >= 1``.

    The upper end of the bracket is found by doubling from ``g = 1`` until
    ``nu_of_gain`` reaches 1/2. ``nu_of_gain`` must be increasing in ``g``
    and below 1/2 at ``g = 1``.
    """
    lo, hi = 1.0, 2.0
    while nu_of_gain(hi) < 0.5:
        lo, hi = hi, 2.0 * hi
        if hi > max_gain:
            raise BracketFailure(f"no crossing of nu = 1/2 below gain {max_gain:g}")
    while True:
        mid = 0.5 * (lo + hi)
        value = nu_of_gain(mid)
        if abs(value - 0.5) <= 0.01 * tol or mid in (lo, hi):
            break
        if value < 0.5:
            lo = mid
        else:
            hi = mid
    if abs(value - 0.5) > tol:
        raise BracketFailure(f"bisection stalled with residual {abs(value - 0.5):.3g}")
    return mid


def asymmetric_critical_gain(r: float, eta: float) -> ThresholdResult:
    """Critical gain when only one mode is amplified.

    A fully inverted amplifier (``eta == 0``) never destroys the entanglement,
    reported as an infinite critical gain.
    """
    if eta == 0.0:
        return ThresholdResult(math.inf, False, "bisection")
    gain = bisect_critical_gain(lambda g: asymmetric_nu_minus(g, r, eta))
    return ThresholdResult(gain, True, "bisection")


def hfm_nonclassicality_bound(eta: float) -> float:
    """Largest gain preserving single-mode squeezing: ``2N1/(N1+N2) = 2(1+η)/(1+2η)``."""
    return 2.0 * (1.0 + eta) / (1.0 + 2.0 * eta)


def critical_phase_mismatch(r: float, r_prime: float) -> float:
    """Phase mismatch beyond which a second squeezer lowers the squeeze below ``max(r, r')``."""
    if not (r > 0.0 and r_prime > 0.0):
        raise NonPositiveSqueeze(f"squeeze magnitudes must be positive, got {r}, {r_prime}")
    big, small = max(r, r_prime), min(r, r_prime)
    cos_alpha0 = -math.tanh(small) / math.tanh(2.0 * big)
    return math.acos(cos_alpha0)
