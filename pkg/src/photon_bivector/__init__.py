"""Numerics for photon polarization bivectors in the chi-operator formalism.

Submodules:

- ``algebra``: chi matrices, spin and boost generators, exponentials and the
  8x8 direct-sum operators.
- ``polarization``: seed, transverse (z_1, z_2, z_3, z_S), reversed-order and
  longitudinal (z_T) bivectors, field amplitudes and projectors.
- ``holonomy``: transport along rotation paths and the loop phase.
- ``currents``: current and stress-energy bilinears.
- ``wavepacket``: Gaussian wavelet momenta by closed form and quadrature.
"""

from . import algebra, currents, holonomy, polarization, wavepacket
from .errors import (
    BivectorError,
    DegenerateDirection,
    DimensionLimit,
    MismatchedModes,
    NonPositiveWidth,
    NonProportionalReturn,
    NotNull,
    NotTransverse,
    ZeroOverlap,
)
from .momentum import FourMomentum
from .polarization import Basis, PolarizationBivector
from .tolerances import DEFAULT_TOLERANCES, Tolerances

__version__ = "0.1.0"

__all__ = [
    "algebra", "currents", "holonomy", "polarization", "wavepacket",
    "FourMomentum", "PolarizationBivector", "Basis", "Tolerances", "DEFAULT_TOLERANCES",
    "BivectorError", "DegenerateDirection", "DimensionLimit", "MismatchedModes",
    "NonPositiveWidth", "NonProportionalReturn", "NotNull", "NotTransverse", "ZeroOverlap",
]
