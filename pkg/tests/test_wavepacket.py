import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from photon_bivector import wavepacket as wp
from photon_bivector.errors import MismatchedModes, NonPositiveWidth, NotNull
from photon_bivector.momentum import FourMomentum

from oracles import gaussian_envelope, numeric_derivative, trapezoid

widths = st.floats(0.2, 5.0)


def _pair(sigma=1.0):
    return wp.GaussianEnvelope.along_axis1(sigma), wp.GaussianEnvelope.along_axis1(sigma, direction=-1)


# -- envelope ----------------------------------------------------------------

@pytest.mark.parametrize("sigma,expected", [(0.25, 4.0), (0.5, 1.0), (1.0, 0.25), (2.0, 1 / 16)])
def test_correction_values(sigma, expected):
    assert wp.envelope_correction(sigma) == pytest.approx(expected, rel=1e-15)
    assert wp.envelope_derivative_integral(sigma) == pytest.approx(expected, rel=1e-9)


@pytest.mark.parametrize("sigma", [0.3, 1.0, 3.0])
def test_envelope_is_normalized(sigma):
    env = wp.GaussianEnvelope.along_axis1(sigma)
    assert wp.envelope_norm_integral(env) == pytest.approx(1.0, abs=1e-9)
    assert trapezoid(lambda u: gaussian_envelope(u, sigma) ** 2, -12 * sigma, 12 * sigma) == pytest.approx(1.0, abs=1e-9)


def test_envelope_matches_transcription():
    env = wp.GaussianEnvelope.along_axis1(0.7, k0=1.5)
    u = np.linspace(-3, 3, 13)
    np.testing.assert_allclose(env.value(u), gaussian_envelope(u, 0.7, 1.5), rtol=1e-15)
    np.testing.assert_allclose(env.derivative(u),
                               numeric_derivative(lambda v: gaussian_envelope(v, 0.7, 1.5), u), atol=1e-9)


@given(widths, st.floats(-2.0, 2.0))
@settings(max_examples=20)
def test_derivative_integral_independent_of_time(sigma, x0):
    assert wp.envelope_derivative_integral(sigma, x0=x0) == pytest.approx(1 / (4 * sigma**2), rel=1e-8)


def test_spatial_derivative_convention():
    # d/dx1 brings down k1, so the integral of (df/dx1)^2 is k1^2 / (4 sigma^2)
    sigma, k = 0.8, 2.0
    env = wp.GaussianEnvelope.along_axis1(sigma, k0=k)
    df_dx1 = lambda x: numeric_derivative(lambda y: env.at(0.0, y), x)
    value = trapezoid(lambda x: df_dx1(x) ** 2, -10 * sigma / k, 10 * sigma / k)
    assert value == pytest.approx(k**2 / (4 * sigma**2), rel=1e-7)
    assert wp.envelope_derivative_integral(sigma, FourMomentum(k, k, 0, 0)) == pytest.approx(1 / (4 * sigma**2))


def test_wide_envelope_gap_vanishes():
    assert wp.envelope_correction(1e3) == pytest.approx(2.5e-7)
    assert wp.envelope_derivative_integral(1e3) == pytest.approx(2.5e-7, rel=1e-6)


def test_invalid_envelopes():
    for bad in (0.0, -1.0, math.nan, math.inf):
        with pytest.raises(NonPositiveWidth):
            wp.GaussianEnvelope.along_axis1(bad)
    with pytest.raises(NonPositiveWidth):
        wp.envelope_correction(0.0)
    with pytest.raises(NotNull):
        wp.GaussianEnvelope(1.0, FourMomentum(1, 0.5, 0, 0))
    with pytest.raises(ValueError):
        wp.GaussianEnvelope(1.0, FourMomentum(1, 0, 1, 0))


# -- momentum expectations ---------------------------------------------------

@pytest.mark.parametrize("sigma", [0.5, 1.0, 2.0])
def test_vector_potential_momentum(sigma):
    env = wp.GaussianEnvelope.along_axis1(sigma)
    closed = wp.vector_potential_momentum(env, 3.0)
    np.testing.assert_allclose(closed.per_mode, 3.0 * (1 + 1 / (4 * sigma**2)) * np.array([1, 1, 0, 0]), rtol=1e-15)
    quad = wp.vector_potential_momentum_quadrature(env, 3.0)
    np.testing.assert_allclose(quad.per_mode, closed.per_mode, atol=1e-7)


@pytest.mark.parametrize("sigma", [0.5, 1.0, 2.0])
def test_bivector_momentum(sigma):
    env = wp.GaussianEnvelope.along_axis1(sigma, direction=-1)
    closed = wp.bivector_momentum(env, 2.0)
    np.testing.assert_allclose(closed.per_mode, [2, -2, 0, 0])
    np.testing.assert_allclose(wp.bivector_momentum_quadrature(env, 2.0).per_mode, closed.per_mode, atol=1e-7)
    np.testing.assert_allclose(closed.per_quantum, [1, -1, 0, 0])


def test_zero_occupation():
    env = wp.GaussianEnvelope.along_axis1(1.0)
    np.testing.assert_array_equal(wp.vector_potential_momentum(env, 0.0).per_mode, np.zeros(4))
    np.testing.assert_array_equal(wp.bivector_momentum(env, 0.0).per_mode, np.zeros(4))


# -- Fourier transform -------------------------------------------------------

def test_fourier_spectrum():
    env = wp.GaussianEnvelope.along_axis1(1.5, k0=2.0)
    report = wp.fourier_spectrum_check(env)
    assert report.max_relative_error <= 1e-8
    assert report.peak_location == pytest.approx(env.k1, abs=1e-5)
    assert report.half_width == pytest.approx(env.k1 / env.sigma, rel=1e-6)
    assert report.peak_value == pytest.approx(report.expected_peak_value(env), rel=1e-9)


def test_fourier_slice_against_trapezoid():
    env = wp.GaussianEnvelope.along_axis1(0.9)
    q = 1.3
    re = trapezoid(lambda s: gaussian_envelope(s, 0.9) * np.cos((1 - q) * s), -12, 12)
    im = trapezoid(lambda s: gaussian_envelope(s, 0.9) * np.sin((1 - q) * s), -12, 12)
    assert wp.fourier_slice(env, q) == pytest.approx(complex(re, im), abs=1e-10)


def test_fourier_rejects_backward_mode():
    with pytest.raises(ValueError):
        wp.fourier_slice(wp.GaussianEnvelope.along_axis1(1.0, direction=-1), 1.0)


# -- superposition -----------------------------------------------------------

@pytest.mark.parametrize("x0", [0.0, 0.5, 2.0])
def test_superposition_energy_conserved(x0):
    f, g = _pair()
    s = wp.superposition_currents(f, g, 1.0, x0)
    assert s.energy == pytest.approx(2.0, abs=1e-9)
    assert s.individual_energy == pytest.approx(2.0, abs=1e-9)
    assert s.cos_term + s.sin_term == pytest.approx(0.0, abs=1e-9)
    np.testing.assert_allclose(s.momentum, 0.0, atol=1e-9)


def test_superposition_interference_terms_are_separately_nonzero():
    f, g = _pair()
    s = wp.superposition_currents(f, g, 1.0, 0.5)
    assert abs(s.cos_term) > 0.1
    assert s.sin_term == pytest.approx(-s.cos_term, abs=1e-9)


def test_superposition_scales_with_occupation():
    f, g = _pair(0.8)
    assert wp.superposition_currents(f, g, 4.0, 0.3).energy == pytest.approx(8.0, abs=1e-8)


@given(st.floats(-2, 2), st.floats(-3, 3))
def test_interference_density_closed_form(x0, x1):
    f, g = _pair(1.2)
    assert wp.interference_density(f, g, x0, x1) == pytest.approx(
        wp.interference_closed_form(1.2, 1.0, 1.0, x0, x1), abs=1e-14)


@given(st.floats(-2, 2), st.floats(-3, 3))
@settings(max_examples=30)
def test_densities_match_finite_difference_current(x0, x1):
    f, g = _pair()
    energy, momentum = wp.superposition_densities(f, g, x0, x1)
    oracle = wp.translation_current_density(f, g, x0, x1)
    assert energy == pytest.approx(oracle[0], abs=1e-9)
    assert momentum == pytest.approx(oracle[1], abs=1e-9)


def test_single_mode_density_is_squared_envelope():
    f, _ = _pair()
    np.testing.assert_allclose(wp.translation_current_density(f, None, 0.2, 0.4),
                               [f.at(0.2, 0.4) ** 2, f.at(0.2, 0.4) ** 2, 0, 0], atol=1e-9)


def test_mismatched_modes():
    f = wp.GaussianEnvelope.along_axis1(1.0)
    with pytest.raises(MismatchedModes):
        wp.superposition_currents(f, wp.GaussianEnvelope.along_axis1(1.0, k0=2.0, direction=-1), 1.0)
    with pytest.raises(MismatchedModes):
        wp.superposition_currents(f, f, 1.0)


def test_vector_potential_superposition():
    f, g = _pair()
    report = wp.superposition_vector_potential_currents(f, g, 1.0)
    assert abs(report.squared_part) <= 1e-9
    assert abs(report.imag_integral) <= 1e-9
    assert report.max_imag_integrand > 0.1 and report.has_imaginary_terms
    single = wp.superposition_vector_potential_currents(f, None, 1.0)
    assert single.real_integral == pytest.approx(1.25, abs=1e-9)
    assert not single.has_imaginary_terms
    np.testing.assert_allclose(single.momentum, [1.25, 1.25, 0, 0], atol=1e-9)
