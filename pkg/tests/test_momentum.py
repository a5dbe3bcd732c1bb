import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from photon_bivector.errors import BivectorError, NotNull
from photon_bivector.momentum import (
    FourMomentum,
    boost_momentum,
    random_null_momentum,
    rotate_momentum,
    rotation_matrix,
)

from oracles import so3_rotation
from strategies import angles, axes, null_momenta, rapidities


def test_lowered_components_flip_time_sign():
    assert FourMomentum(3, 2, 2, 1).lowered.tolist() == [-3, 2, 2, 1]


def test_require_null_accepts_and_rejects():
    FourMomentum(3, 2, 2, 1).require_null()
    with pytest.raises(NotNull):
        FourMomentum(1, 1, 1, 1).require_null()
    with pytest.raises(NotNull):
        FourMomentum(-1, 1, 0, 0).require_null()


def test_seven_digit_root_three_counts_as_null():
    assert FourMomentum(1.7320508, 1, 1, 1).is_null()


def test_non_finite_components_rejected():
    with pytest.raises(BivectorError):
        FourMomentum(math.nan, 0, 0, 0)


def test_from_direction_is_exactly_null():
    p = FourMomentum.from_direction([1, 2, 2], 6.0)
    assert p.array.tolist() == [6.0, 2.0, 4.0, 4.0]
    assert p.mass_shell_residual() == 0.0


@given(axes, angles)
def test_rotation_matrix_matches_scipy(axis, angle):
    np.testing.assert_allclose(rotation_matrix(axis, angle), so3_rotation(axis, angle), atol=1e-14)


@given(null_momenta(margin=0.0), axes, rapidities)
def test_boost_preserves_null_cone(p, axis, kappa):
    q = boost_momentum(p, axis, kappa)
    assert q.mass_shell_residual() < 1e-12
    back = boost_momentum(q, axis, -kappa)
    np.testing.assert_allclose(back.array, p.array, atol=1e-12 * math.cosh(kappa) ** 2 * p.p0)


@given(null_momenta(margin=0.0), axes, angles)
def test_rotation_keeps_energy(p, axis, angle):
    q = rotate_momentum(p, axis, angle)
    assert q.p0 == p.p0
    assert q.mass_shell_residual() < 1e-13


def test_random_null_momenta_respect_margin():
    rng = np.random.default_rng(5)
    for _ in range(200):
        p = random_null_momentum(rng, margin=0.05)
        assert 0.1 <= p.p0 <= 10.0
        assert p.mass_shell_residual() < 1e-14
        _, a, b, c = p
        assert min(b * b + c * c, a * a + c * c, a * a + b * b) >= 0.05 * p.p0**2


@given(st.integers().filter(lambda i: i not in (1, 2, 3)))
def test_bad_axis_raises(axis):
    with pytest.raises(IndexError):
        rotation_matrix(axis, 0.1)
