from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import InvalidBath


@dataclass(frozen=True)
class BathSpec:
    """Inverted two-level atomic bath driving one or more field modes.

    ``kappa`` is the coupling rate, ``N1``/``N2`` the excited/ground
    populations and ``t`` the interaction time. Only the combinations
    ``gain = exp(2 κ t (N1 - N2))`` and ``eta = N2 / (N1 - N2)`` reach the
    Gaussian channel.
    """

    kappa: float
    N1: float
    N2: float
    t: float

    def __post_init__(self) -> None:
        if not self.kappa > 0.0:
            raise InvalidBath(f"kappa must be positive, got {self.kappa}")
        if not (self.N1 > self.N2 >= 0.0):
            raise InvalidBath(f"need N1 > N2 >= 0, got N1={self.N1}, N2={self.N2}")
        if not self.t >= 0.0:
            raise InvalidBath(f"interaction time must be nonnegative, got {self.t}")

    @property
    def gain(self) -> float:
        return math.exp(2.0 * self.kappa * self.t * (self.N1 - self.N2))

    @property
    def eta(self) -> float:
        return self.N2 / (self.N1 - self.N2)

    @property
    def drift(self) -> float:
        """Amplitude growth rate of each amplified quadrature."""
        return self.kappa * (self.N1 - self.N2)

    @property
    def diffusion(self) -> float:
        """Rate at which each amplified quadrature variance gains noise."""
        return self.kappa * (self.N1 + self.N2)

    @classmethod
    def for_gain(cls, gain: float, eta: float, kappa: float = 1.0) -> "BathSpec":
        """Bath with ``N1 - N2 = 1`` reaching intensity gain ``gain`` at its final time."""
        if gain < 1.0:
            raise InvalidBath(f"gain must be >= 1, got {gain}")
        return cls(kappa=kappa, N1=1.0 + eta, N2=eta, t=math.log(gain) / (2.0 * kappa))
