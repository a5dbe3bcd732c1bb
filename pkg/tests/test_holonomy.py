import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from photon_bivector import algebra, holonomy as hol, polarization as pol
from photon_bivector.errors import DimensionLimit, NotNull, ZeroOverlap
from photon_bivector.momentum import FourMomentum

from oracles import cap_area, lhuilier_area, series_expm
from strategies import helicities, null_momenta

P_REF = FourMomentum(3, 2, 2, 1)


def _oracle_loop_phase(p, helicity=1):
    """Loop phase from series exponentials, independent of the package operators."""
    def op(seq):
        m = np.eye(4, dtype=complex)
        for axis, angle in seq:
            m = m @ series_expm(-1j * angle * algebra.spin_generator(axis))
        return m
    out = op(pol.forward_rotation_sequence(p, 1))
    back = np.linalg.inv(op(pol.reversed_rotation_sequence(p, 1)))
    z = pol.seed_bivector(1, helicity).components
    r = np.vdot(z, back @ out @ z)
    return math.atan2(r.imag, r.real)


# -- reference values --------------------------------------------------------

def test_reference_phase():
    result = hol.loop_phase(P_REF)
    assert result.phase == pytest.approx(0.32175055439664219, abs=1e-12)
    assert result.phase == pytest.approx(math.atan(1 / 3), abs=1e-15)
    assert result.phase == pytest.approx(_oracle_loop_phase(P_REF), abs=1e-12)
    assert result.residual <= 1e-12


def test_reference_negations():
    base = hol.loop_phase(P_REF).phase
    assert hol.loop_phase(P_REF, helicity=-1).phase == pytest.approx(-base, abs=1e-12)
    assert hol.loop_phase(P_REF, reverse=True).phase == pytest.approx(-base, abs=1e-12)


def test_closed_form_reference_and_limit():
    assert hol.closed_form_phase(P_REF) == (pytest.approx(math.atan(1 / 3)), False)
    assert hol.closed_form_phase(FourMomentum(1, 1, 0, 0)) == (0.0, False)
    limit = hol.closed_form_phase(FourMomentum.from_direction([0, 1, 1], 1.0))
    assert limit.limiting and limit.phase == pytest.approx(math.pi / 2)
    limit = hol.closed_form_phase(FourMomentum.from_direction([0, 1, -1], 1.0))
    assert limit.limiting and limit.phase == pytest.approx(-math.pi / 2)


def test_loop_at_zero_p1_matches_limit():
    p = FourMomentum.from_direction([0, 0.6, 0.8], 1.0)
    assert hol.loop_phase(p).phase == pytest.approx(math.pi / 2, abs=1e-10)


def test_trivial_loop_on_axis1():
    assert hol.loop_phase(FourMomentum(1, 1, 0, 0)).phase == pytest.approx(0.0, abs=1e-15)


def test_spherical_phase_matches_momentum_form():
    theta, phi = 0.7, 0.4
    p = FourMomentum.from_spherical(theta, phi)
    assert hol.spherical_phase(theta, phi) == pytest.approx(hol.closed_form_phase(p).phase, abs=1e-14)


def test_not_null_rejected():
    with pytest.raises(NotNull):
        hol.loop_phase(FourMomentum(1, 1, 1, 1))


# -- properties --------------------------------------------------------------

@given(null_momenta(), helicities)
def test_loop_matches_closed_form(p, h):
    closed = hol.closed_form_phase(p)
    result = hol.loop_phase(p, h)
    assert abs(hol.wrap_phase(result.phase - h * closed.phase)) <= 1e-9
    assert abs(result.phase - _oracle_loop_phase(p, h)) <= 1e-9


@given(null_momenta())
def test_reversal_negates(p):
    assert abs(hol.loop_phase(p).phase + hol.loop_phase(p, reverse=True).phase) <= 1e-10


@given(null_momenta())
def test_longitudinal_loop_is_trivial(p):
    assert abs(hol.longitudinal_loop_phase(p).phase) <= 1e-10


@given(null_momenta(), st.integers(2, 3))
def test_spin_n_scaling(p, n):
    expected = hol.wrap_phase(n * hol.loop_phase(p).phase)
    assert abs(hol.wrap_phase(hol.spin_n_phase(p, n) - expected)) <= 1e-9


def test_spin_n_reference_and_limits():
    assert hol.spin_n_phase(P_REF, 1) == pytest.approx(math.atan(1 / 3), abs=1e-12)
    assert hol.spin_n_phase(P_REF, 2) == pytest.approx(0.64350110879328437, abs=1e-12)
    assert hol.spin_n_phase(P_REF, 3, helicity=-1) == pytest.approx(-3 * math.atan(1 / 3), abs=1e-12)
    with pytest.raises(DimensionLimit):
        hol.spin_n_phase(P_REF, 5)
    with pytest.raises(ValueError):
        hol.spin_n_phase(P_REF, 0)


# -- transport helpers -------------------------------------------------------

def test_forward_path_lands_on_z2():
    out, _ = hol.loop_paths(P_REF)
    moved = hol.transport(pol.seed_bivector(1), out)
    np.testing.assert_allclose(moved.components, pol.z_axis(P_REF, 2).components, atol=1e-14)


def test_transport_moves_momentum_tag():
    z = pol.seed_bivector(1)
    moved = hol.transport(z, [(3, math.pi / 2)])
    np.testing.assert_allclose(moved.momentum.spatial, [0, 1, 0], atol=1e-15)


@given(null_momenta())
def test_inverse_path_undoes_path(p):
    path = pol.forward_rotation_sequence(p, 1)
    z = pol.seed_bivector(1)
    back = hol.transport(hol.transport(z, path), hol.inverse_path(path))
    assert np.linalg.norm(back.components - z.components) <= 1e-12


def test_empty_path_is_identity():
    z = pol.seed_bivector(2)
    np.testing.assert_array_equal(hol.transport(z, []).components, z.components)


def test_extract_phase_cases():
    z = pol.seed_bivector(1)
    assert hol.extract_phase(z, z) == (0.0, pytest.approx(0.0, abs=1e-15))
    phase, residual = hol.extract_phase(z, np.exp(1j * math.pi / 5) * z.components)
    assert phase == pytest.approx(math.pi / 5, abs=1e-15) and residual < 1e-15
    with pytest.raises(ZeroOverlap):
        hol.extract_phase(z, z.conjugate())


def test_wrap_phase_range():
    assert hol.wrap_phase(-math.pi) == math.pi
    assert hol.wrap_phase(3 * math.pi) == pytest.approx(math.pi)
    assert hol.wrap_phase(0.25) == 0.25


# -- enclosed area -----------------------------------------------------------

def test_signed_area_of_triangle_matches_lhuilier():
    a, b, c = np.eye(3)
    tri = np.array([a, b, c])
    area = hol.signed_spherical_area(tri)
    assert area == pytest.approx(lhuilier_area(a, b, c), abs=1e-14)
    assert area == pytest.approx(math.pi / 2, abs=1e-14)
    assert hol.signed_spherical_area(tri[::-1]) == pytest.approx(-math.pi / 2, abs=1e-14)


def test_signed_area_of_small_circle_matches_cap():
    half = 0.6
    t = np.linspace(0.0, 2 * math.pi, 20001)[:-1]
    ring = np.stack([np.sin(half) * np.cos(t), np.sin(half) * np.sin(t), np.full_like(t, np.cos(half))], axis=1)
    assert hol.signed_spherical_area(ring) == pytest.approx(cap_area(half), rel=1e-7)


@pytest.mark.parametrize("theta,phi", [(0.3, 0.4), (1.0, 1.2), (2.2, 0.7), (0.01, 0.5)])
def test_phase_equals_enclosed_area(theta, phi):
    check = hol.solid_angle_check(theta, phi)
    assert check.area == pytest.approx(check.phase, abs=1e-9)
    assert check.phase == pytest.approx(hol.spherical_phase(theta, phi), abs=1e-12)
    reverse = hol.solid_angle_check(theta, phi, reverse=True)
    assert reverse.area == pytest.approx(-check.area, abs=1e-12)
    assert reverse.phase == pytest.approx(-check.phase, abs=1e-12)


def test_unsigned_area_by_lhuilier_fan():
    p = FourMomentum.from_spherical(1.0, 0.8)
    poly = hol.loop_polygon(p, 400)[:-1]
    centre = poly.sum(axis=0) / np.linalg.norm(poly.sum(axis=0))
    fan = math.fsum(lhuilier_area(centre, poly[i], poly[(i + 1) % len(poly)]) for i in range(len(poly)))
    assert fan == pytest.approx(abs(hol.loop_phase(p).phase), abs=1e-6)


def test_equatorial_loop_encloses_nothing():
    check = hol.solid_angle_check(math.pi / 2, 0.9)
    assert check.phase == pytest.approx(0.0, abs=1e-12)
    assert check.area == pytest.approx(0.0, abs=1e-9)
