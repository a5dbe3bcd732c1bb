"""Mode momenta of Gaussian-modulated plane wavelets.

A wavelet moving along axis 1 has phase u = k_mu x^mu = -k0 x0 + k1 x1 and
envelope f(u) = (2 pi sigma^2 / k0^2)^(-1/4) exp(-u^2 / (4 sigma^2)), so that
the integral of f^2 over x1 is one.  Primes on envelopes always mean d/du.

Under the vector-potential current the squared envelope derivative adds
k^mu / (4 sigma^2) per quantum; under the bivector translation current the
derivative terms cancel and each quantum carries exactly k^mu.  Every closed
form here has a quadrature counterpart built from the fields themselves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, optimize

from .errors import MismatchedModes, NonPositiveWidth
from .momentum import FourMomentum

QUAD_EPSABS = 1e-13
QUAD_EPSREL = 1e-12
QUAD_LIMIT = 500
SPAN_WIDTHS = 10.0
FD_STEP = 1e-3


def _quad(fn, a: float, b: float) -> float:
    value, _ = integrate.quad(fn, a, b, epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL, limit=QUAD_LIMIT)
    return float(value)


@dataclass(frozen=True)
class GaussianEnvelope:
    """Normalized Gaussian envelope of width ``sigma`` (phase units) for mode ``k``.

    ``k`` must be null with k2 = k3 = 0: pure motion along axis 1 in either
    direction.
    """

    sigma: float
    k: FourMomentum

    def __post_init__(self):
        sigma = float(self.sigma)
        if not (math.isfinite(sigma) and sigma > 0.0):
            raise NonPositiveWidth(f"sigma must be positive, got {self.sigma}")
        object.__setattr__(self, "sigma", sigma)
        k = self.k if isinstance(self.k, FourMomentum) else FourMomentum.from_array(self.k)
        k.require_null()
        if k.p2 != 0.0 or k.p3 != 0.0:
            raise ValueError("envelope mode must move purely along axis 1")
        object.__setattr__(self, "k", k)

    @classmethod
    def along_axis1(cls, sigma: float, k0: float = 1.0, direction: int = 1) -> GaussianEnvelope:
        if direction not in (1, -1):
            raise ValueError("direction must be +1 or -1")
        return cls(sigma, FourMomentum(k0, direction * k0, 0.0, 0.0))

    @property
    def k0(self) -> float:
        return self.k.p0

    @property
    def k1(self) -> float:
        return self.k.p1

    @property
    def norm_factor(self) -> float:
        return (2.0 * math.pi * self.sigma**2 / self.k0**2) ** -0.25

    def phase(self, x0, x1):
        return -self.k0 * np.asarray(x0) + self.k1 * np.asarray(x1)

    def value(self, u):
        u = np.asarray(u, dtype=float)
        return self.norm_factor * np.exp(-(u**2) / (4.0 * self.sigma**2))

    def derivative(self, u):
        """df/du."""
        u = np.asarray(u, dtype=float)
        return -u / (2.0 * self.sigma**2) * self.value(u)

    def at(self, x0, x1):
        return self.value(self.phase(x0, x1))

    def derivative_at(self, x0, x1):
        return self.derivative(self.phase(x0, x1))

    def centre(self, x0: float) -> float:
        """x1 where the phase vanishes at time x0."""
        return self.k0 * x0 / self.k1

    def span(self, x0: float = 0.0) -> tuple[float, float]:
        half = SPAN_WIDTHS * self.sigma / abs(self.k1)
        c = self.centre(x0)
        return c - half, c + half

    def positive_frequency(self, x0, x1):
        """f(u) exp(i u)."""
        u = self.phase(x0, x1)
        return self.value(u) * np.exp(1j * u)


@dataclass(frozen=True)
class MomentumExpectation:
    """Mode energy-momentum ``per_mode`` (a 4-vector) for ``occupation`` quanta."""

    per_mode: np.ndarray
    occupation: float

    def __post_init__(self):
        v = np.array(self.per_mode, dtype=float)
        v.flags.writeable = False
        object.__setattr__(self, "per_mode", v)

    @property
    def per_quantum(self) -> np.ndarray:
        return self.per_mode / self.occupation


def envelope_correction(sigma: float) -> float:
    """Closed form of the integral of f'^2 over x1: 1 / (4 sigma^2)."""
    if not sigma > 0:
        raise NonPositiveWidth(f"sigma must be positive, got {sigma}")
    return 1.0 / (4.0 * sigma**2)


def envelope_norm_integral(env: GaussianEnvelope, x0: float = 0.0) -> float:
    a, b = env.span(x0)
    return _quad(lambda x1: float(env.at(x0, x1)) ** 2, a, b)


def envelope_derivative_integral(sigma: float, k: FourMomentum | None = None, x0: float = 0.0) -> float:
    """Adaptive quadrature of (df/du)^2 over x1; equals 1 / (4 sigma^2)."""
    if not sigma > 0:
        raise NonPositiveWidth(f"sigma must be positive, got {sigma}")
    env = GaussianEnvelope(sigma, k if k is not None else FourMomentum(1.0, 1.0, 0.0, 0.0))
    a, b = env.span(x0)
    return _quad(lambda x1: float(env.derivative_at(x0, x1)) ** 2, a, b)


def _upper_k(env: GaussianEnvelope) -> np.ndarray:
    return env.k.array


def vector_potential_momentum(env: GaussianEnvelope, occupation: float) -> MomentumExpectation:
    """occupation * k^mu * (1 + 1 / (4 sigma^2))."""
    factor = 1.0 + envelope_correction(env.sigma)
    return MomentumExpectation(occupation * factor * _upper_k(env), occupation)


def bivector_momentum(env: GaussianEnvelope, occupation: float) -> MomentumExpectation:
    """occupation * k^mu: the envelope-derivative terms cancel."""
    return MomentumExpectation(occupation * _upper_k(env), occupation)


# -- quadrature oracles built from the fields --------------------------------

def _partials(field, x0: float, x1: float, h: float = FD_STEP) -> tuple[complex, complex]:
    """Five-point central differences (d/dx0, d/dx1) of a complex field."""
    w = np.array([1.0, -8.0, 8.0, -1.0]) / (12.0 * h)
    offs = np.array([-2.0, -1.0, 1.0, 2.0]) * h
    d0 = complex(np.dot(w, field(x0 + offs, x1)))
    d1 = complex(np.dot(w, field(x0, x1 + offs)))
    return d0, d1


def _raised(d0: complex, d1: complex) -> np.ndarray:
    # d^mu with signature (-+++): d^0 = -d/dx0, d^1 = d/dx1
    return np.array([-d0, d1, 0.0, 0.0])


def _integrate_components(density, a: float, b: float) -> np.ndarray:
    return np.array([_quad(lambda x1, mu=mu: density(x1)[mu], a, b) for mu in (0, 1)] + [0.0, 0.0])


def vector_potential_momentum_quadrature(env: GaussianEnvelope, occupation: float,
                                         x0: float = 0.3) -> MomentumExpectation:
    """Quadrature of the normal-ordered vector-potential current.

    A+ = f e^{iu} / sqrt(2 k0), A- its conjugate; the density is
    -(dA-/dx0 d^mu A+ + dA+/dx0 d^mu A-), the two orderings of the
    occupation-number part.  Derivatives are taken by finite differences.
    """
    k0 = env.k0

    def a_plus(t, x):
        return env.positive_frequency(t, x) / math.sqrt(2.0 * k0)

    def density(x1):
        d0, d1 = _partials(a_plus, x0, x1)
        dmu = _raised(d0, d1)
        return (-2.0 * (np.conj(d0) * dmu).real)

    a, b = env.span(x0)
    return MomentumExpectation(occupation * _integrate_components(density, a, b), occupation)


def bivector_momentum_quadrature(env: GaussianEnvelope, occupation: float,
                                 x0: float = 0.3) -> MomentumExpectation:
    """Quadrature of (-i/2)(B- d^mu B+ - B+ d^mu B-) = Im(conj(B+) d^mu B+)."""
    def density(x1):
        d0, d1 = _partials(env.positive_frequency, x0, x1)
        b_plus = complex(env.positive_frequency(x0, x1))
        return (np.conj(b_plus) * _raised(d0, d1)).imag

    a, b = env.span(x0)
    return MomentumExpectation(occupation * _integrate_components(density, a, b), occupation)


# -- Fourier check -----------------------------------------------------------

@dataclass(frozen=True)
class FourierReport:
    samples: np.ndarray
    numeric: np.ndarray
    closed_form: np.ndarray
    max_relative_error: float
    peak_location: float
    peak_value: float
    half_width: float

    def expected_peak_value(self, env: GaussianEnvelope) -> float:
        return fourier_closed_form(env, env.k1)


def fourier_closed_form(env: GaussianEnvelope, p1: float) -> float:
    k0, k1, s = env.k0, env.k1, env.sigma
    return (8.0 * math.pi * s**2 / k0**2) ** 0.25 * math.exp(-(s**2) * (p1 - k1) ** 2 / k1**2)


def fourier_slice(env: GaussianEnvelope, p1: float) -> complex:
    """Transform of f e^{iu} with kernel exp(-i p_mu x^mu) on the slice p0 = p1.

    Along the slice the integrand depends on x0, x1 only through
    s = x1 - x0; the free direction yields the delta factor, which is
    dropped, leaving a one-dimensional integral over s.
    """
    if env.k1 <= 0:
        raise ValueError("the Fourier slice check expects k1 > 0")
    half = SPAN_WIDTHS * env.sigma / env.k1

    def part(s, which):
        val = env.value(env.k1 * s) * np.exp(1j * (env.k1 - p1) * s)
        return float(val.real if which == 0 else val.imag)

    re = _quad(lambda s: part(s, 0), -half, half)
    im = _quad(lambda s: part(s, 1), -half, half)
    return complex(re, im)


def fourier_spectrum_check(env: GaussianEnvelope, samples=None) -> FourierReport:
    """Compare the numerical transform with its Gaussian closed form.

    Also locates the peak and the e^{-1} half-width numerically; they should
    be k1 and k1 / sigma.
    """
    k1, s = env.k1, env.sigma
    if samples is None:
        samples = k1 + (k1 / s) * np.linspace(-2.0, 2.0, 9)
    samples = np.asarray(samples, dtype=float)
    numeric = np.array([abs(fourier_slice(env, q)) for q in samples])
    closed = np.array([fourier_closed_form(env, q) for q in samples])
    rel = float(np.max(np.abs(numeric - closed) / closed))
    width = k1 / s
    opt = optimize.minimize_scalar(lambda q: -abs(fourier_slice(env, q)),
                                   bracket=(k1 - 0.5 * width, k1, k1 + 0.5 * width),
                                   tol=1e-10)
    peak_at = float(opt.x)
    peak = abs(fourier_slice(env, peak_at))
    target = peak * math.exp(-1.0)
    edge = optimize.brentq(lambda q: abs(fourier_slice(env, q)) - target,
                           peak_at, peak_at + 3.0 * width, xtol=1e-13)
    return FourierReport(samples, numeric, closed, rel, peak_at, peak, float(edge - peak_at))


# -- superposition -----------------------------------------------------------

def _check_counterpropagating(f: GaussianEnvelope, g: GaussianEnvelope) -> None:
    if abs(f.k0 - g.k0) > 1e-12 * f.k0 or abs(abs(f.k1) - abs(g.k1)) > 1e-12 * f.k0:
        raise MismatchedModes(f"mode momenta differ in magnitude: {tuple(f.k)} vs {tuple(g.k)}")
    if f.k1 * g.k1 > 0:
        raise MismatchedModes("superposed modes must be counter-propagating")


@dataclass(frozen=True)
class SuperpositionCurrents:
    """Bivector currents of two counter-propagating wavelets at time x0.

    ``energy`` = ``individual_energy`` + ``cos_term`` + ``sin_term``.
    """

    momentum: np.ndarray
    energy: float
    individual_energy: float
    cos_term: float
    sin_term: float
    x0: float
    f: GaussianEnvelope
    g: GaussianEnvelope
    occupation: float

    def interference(self, x1):
        """Pointwise sin(2 k1 x1) (f'g + g'f): the momentum interference density."""
        return interference_density(self.f, self.g, self.x0, x1)


def _pair(f: GaussianEnvelope, g: GaussianEnvelope, x0, x1):
    uf, ug = f.phase(x0, x1), g.phase(x0, x1)
    return (f.value(uf), f.derivative(uf), g.value(ug), g.derivative(ug), uf - ug)


def interference_density(f: GaussianEnvelope, g: GaussianEnvelope, x0, x1):
    fv, fd, gv, gd, phi = _pair(f, g, x0, x1)
    return np.sin(phi) * (fd * gv + gd * fv)


def interference_closed_form(sigma: float, p0: float, p1: float, x0, x1):
    """(2 pi sigma^2)^(-1/2) exp(-(p0^2 x0^2 + p1^2 x1^2) / (2 sigma^2)) p0^2 x0 sin(2 p1 x1) / sigma^2."""
    x0, x1 = np.asarray(x0, dtype=float), np.asarray(x1, dtype=float)
    gauss = np.exp(-(p0**2 * x0**2 + p1**2 * x1**2) / (2.0 * sigma**2))
    return gauss / (math.sqrt(2.0 * math.pi * sigma**2) * sigma**2) * p0**2 * x0 * np.sin(2.0 * p1 * x1)


def superposition_densities(f: GaussianEnvelope, g: GaussianEnvelope, x0, x1):
    """(energy, momentum) densities per quantum, in units of k0 and |k1|.

    Energy:   f^2 + g^2 + 2 f g cos(phi) + sin(phi) (f'g - g'f)
    Momentum: f^2 - g^2 + sin(phi) (f'g + g'f)
    with phi = u_f - u_g = 2 k1 x1.
    """
    fv, fd, gv, gd, phi = _pair(f, g, x0, x1)
    energy = fv**2 + gv**2 + 2.0 * fv * gv * np.cos(phi) + np.sin(phi) * (fd * gv - gd * fv)
    momentum = fv**2 - gv**2 + np.sin(phi) * (fd * gv + gd * fv)
    return energy, momentum


def superposition_currents(f: GaussianEnvelope, g: GaussianEnvelope, occupation: float,
                           x0: float = 0.0) -> SuperpositionCurrents:
    """Translation-current energy and momentum of the field f e^{iu_f} + g e^{iu_g}."""
    _check_counterpropagating(f, g)
    a = min(f.span(x0)[0], g.span(x0)[0])
    b = max(f.span(x0)[1], g.span(x0)[1])

    def term(index):
        def fn(x1):
            fv, fd, gv, gd, phi = _pair(f, g, x0, x1)
            return float((fv**2 + gv**2,
                          2.0 * fv * gv * np.cos(phi),
                          np.sin(phi) * (fd * gv - gd * fv),
                          fv**2 - gv**2 + np.sin(phi) * (fd * gv + gd * fv))[index])
        return _quad(fn, a, b)

    individual, cos_term, sin_term, mom = (term(i) for i in range(4))
    k1 = abs(f.k1)
    energy = occupation * f.k0 * (individual + cos_term + sin_term)
    return SuperpositionCurrents(
        momentum=np.array([occupation * k1 * mom, 0.0, 0.0]),
        energy=energy,
        individual_energy=occupation * f.k0 * individual,
        cos_term=occupation * f.k0 * cos_term,
        sin_term=occupation * f.k0 * sin_term,
        x0=x0, f=f, g=g, occupation=occupation,
    )


def translation_current_density(f: GaussianEnvelope, g: GaussianEnvelope | None, x0: float,
                                x1: float) -> np.ndarray:
    """Im(conj(B+) d^mu B+) for B+ = f e^{iu_f} (+ g e^{iu_g}), by finite differences."""
    def field(t, x):
        out = f.positive_frequency(t, x)
        if g is not None:
            out = out + g.positive_frequency(t, x)
        return out

    d0, d1 = _partials(field, x0, x1)
    return (np.conj(complex(field(x0, x1))) * _raised(d0, d1)).imag


@dataclass(frozen=True)
class VectorSuperpositionReport:
    """Integrals of the vector-potential superposition integrand, per k^mu."""

    real_integral: float
    imag_integral: float
    squared_part: float
    max_imag_integrand: float
    has_imaginary_terms: bool
    momentum: np.ndarray


def vector_superposition_integrand(f: GaussianEnvelope, g: GaussianEnvelope | None, x0, x1):
    """f^2 + f'^2 - g^2 - g'^2 + 2i sin(phi)(f'g + f g') + 2i cos(phi)(f g' - f'g)."""
    uf = f.phase(x0, x1)
    fv, fd = f.value(uf), f.derivative(uf)
    if g is None:
        return fv**2 + fd**2 + 0j
    ug = g.phase(x0, x1)
    gv, gd = g.value(ug), g.derivative(ug)
    phi = uf - ug
    return (fv**2 + fd**2 - gv**2 - gd**2
            + 2j * np.sin(phi) * (fd * gv + fv * gd)
            + 2j * np.cos(phi) * (fv * gd - fd * gv))


def superposition_vector_potential_currents(f: GaussianEnvelope, g: GaussianEnvelope | None,
                                            occupation: float, x0: float = 0.3,
                                            imag_floor: float = 1e-12) -> VectorSuperpositionReport:
    """Integrate the vector-potential superposition integrand and flag imaginary content."""
    if g is not None:
        _check_counterpropagating(f, g)
        a = min(f.span(x0)[0], g.span(x0)[0])
        b = max(f.span(x0)[1], g.span(x0)[1])
    else:
        a, b = f.span(x0)
    re = _quad(lambda x1: float(vector_superposition_integrand(f, g, x0, x1).real), a, b)
    im = _quad(lambda x1: float(vector_superposition_integrand(f, g, x0, x1).imag), a, b)

    def squared(x1):
        uf = f.phase(x0, x1)
        val = f.value(uf) ** 2 + f.derivative(uf) ** 2
        if g is not None:
            ug = g.phase(x0, x1)
            val = val - g.value(ug) ** 2 - g.derivative(ug) ** 2
        return float(val)

    sq = _quad(squared, a, b)
    grid = np.linspace(a, b, 2001)
    max_im = float(np.max(np.abs(vector_superposition_integrand(f, g, x0, grid).imag)))
    momentum = occupation * f.k.array * re
    return VectorSuperpositionReport(re, im, sq, max_im, max_im > imag_floor, momentum)
