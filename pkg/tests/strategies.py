"""Hypothesis strategies shared by the property tests."""

import math

from hypothesis import assume
from hypothesis import strategies as st

from photon_bivector.momentum import FourMomentum


def pair_margin(p: FourMomentum) -> float:
    """Smallest degeneracy denominator squared, relative to p0^2."""
    _, a, b, c = p
    sums = (b * b + c * c, a * a + c * c, a * a + b * b)
    diffs = (a - b) ** 2 + (a - c) ** 2 + (b - c) ** 2
    return min(min(sums), diffs) / p.p0**2


@st.composite
def null_momenta(draw, margin: float = 1e-3):
    theta = draw(st.floats(0.0, math.pi))
    phi = draw(st.floats(-math.pi, math.pi))
    energy = draw(st.floats(0.1, 10.0))
    p = FourMomentum.from_spherical(theta, phi, energy)
    assume(pair_margin(p) > margin)
    return p


helicities = st.sampled_from([1, -1])
axes = st.sampled_from([1, 2, 3])
angles = st.floats(-math.pi, math.pi)
rapidities = st.floats(-2.0, 2.0)
