"""Invariant suites run by ``verify``.

Each suite appends checks to a :class:`RunReport`.  Checks over random
samples record the worst deviation seen.  Residuals that scale with the
momentum are divided by p0 before comparison.  Random draws come from a
single seeded generator, so a run is reproducible.
"""

from __future__ import annotations

import itertools
import math

import numpy as np
from scipy.linalg import expm

from . import algebra, currents, holonomy, polarization, wavepacket
from .momentum import FourMomentum, random_null_momentum
from .report import RunReport
from .tolerances import Tolerances

SUITES = ("algebra", "polarization", "holonomy", "currents", "wavepacket")

DEFAULT_SAMPLES = {
    "algebra": 20,
    "polarization": 100,
    "holonomy": 200,
    "currents": 100,
    "wavepacket": 3,
}

# pair sums and (1,1,1) distance at least 1e-3 p0^2
SAMPLE_MARGIN = 1e-3

REFERENCE_P = FourMomentum(3.0, 2.0, 2.0, 1.0)


def _momenta(rng, n: int) -> list[FourMomentum]:
    return [random_null_momentum(rng, margin=SAMPLE_MARGIN) for _ in range(n)]


def _worst(values) -> float:
    values = list(values)
    return float(max(values)) if values else 0.0


def _eye(n: int = 4) -> np.ndarray:
    return np.eye(n, dtype=complex)


def _norm(m) -> float:
    return float(np.max(np.abs(m)))


# -- algebra -----------------------------------------------------------------

def algebra_suite(report: RunReport, rng: np.random.Generator, samples: int, tol: Tolerances) -> None:
    chi = [algebra.chi(mu) for mu in range(4)]
    s = {i: algebra.spin_generator(i) for i in (1, 2, 3)}
    k = {i: algebra.boost_generator(i) for i in (1, 2, 3)}
    eps = algebra.levi_civita()
    pairs = list(itertools.product((1, 2, 3), repeat=2))

    report.bound("algebra.clifford", _worst(
        _norm(algebra.anticommutator(chi[i], chi[j]) - 2.0 * (i == j) * _eye()) for i, j in pairs), tol.exact)

    def lie(a, b, c, factor):
        return _worst(_norm(algebra.commutator(a[i], b[j])
                            - factor * 1j * sum(eps[i - 1, j - 1, m - 1] * c[m] for m in (1, 2, 3)))
                      for i, j in pairs)

    chi_map = {i: chi[i] for i in (1, 2, 3)}
    report.bound("algebra.quaternion_lie", lie(chi_map, chi_map, chi_map, 2.0), tol.exact)
    report.bound("algebra.commutator_SS", lie(s, s, s, 1.0), tol.exact)
    report.bound("algebra.commutator_KK", lie(k, k, s, 1.0), tol.exact)
    report.bound("algebra.commutator_SK", lie(s, k, k, 1.0), tol.exact)
    report.bound("algebra.completeness", _worst(_norm(s[i] @ s[i] + k[i] @ k[i] - _eye()) for i in (1, 2, 3)),
                 tol.exact)

    kappas = rng.uniform(-3.0, 3.0, size=samples)
    axes = rng.integers(1, 4, size=samples)
    report.bound("algebra.exp_spin_vs_expm", _worst(
        _norm(algebra.exp_spin(int(a), float(x)) - expm(x * s[int(a)])) for a, x in zip(axes, kappas)),
        tol.transcendental)
    report.bound("algebra.exp_boost_vs_expm", _worst(
        _norm(algebra.exp_boost(int(a), float(x)) - expm(x * k[int(a)])) for a, x in zip(axes, kappas)),
        tol.transcendental)
    thetas = rng.uniform(-math.pi, math.pi, size=samples)
    report.bound("algebra.rotation_unitary", _worst(
        _norm(algebra.rotation_operator(int(a), float(t)).conj().T @ algebra.rotation_operator(int(a), float(t))
              - _eye()) for a, t in zip(axes, thetas)), tol.transcendental)
    report.bound("algebra.rotation_vs_expm", _worst(
        _norm(algebra.rotation_operator(int(a), float(t)) - expm(-1j * t * s[int(a)]))
        for a, t in zip(axes, thetas)), tol.transcendental)

    _structure_checks(report, rng, samples, tol)


def _structure_checks(report: RunReport, rng, samples: int, tol: Tolerances) -> None:
    fwd = algebra.axis_cycle_operator("forward")
    report.bound("algebra.axis_cycle_cubed", _norm(fwd @ fwd @ fwd - _eye()), tol.transcendental)
    report.bound("algebra.axis_cycle_reverse_inverse",
                 _norm(algebra.axis_cycle_operator("reverse") @ fwd - _eye()), tol.transcendental)
    seeds = [polarization.seed_bivector(a).components for a in (1, 2, 3)]
    report.bound("algebra.axis_cycle_seeds", _worst(
        np.linalg.norm(fwd @ seeds[a] - seeds[(a + 1) % 3]) for a in range(3)), tol.transcendental)
    vseeds = [polarization.vector_seed(a).components for a in (1, 2, 3)]
    report.bound("algebra.axis_cycle_vector_seeds", _worst(
        np.linalg.norm(fwd @ vseeds[a] - vseeds[(a + 1) % 3]) for a in range(3)), tol.transcendental)

    psi_plus = polarization.seed_bivector(1, 1).components
    psi_minus = polarization.seed_bivector(1, -1).components
    x = FourMomentum(1.0, 1.0, 0.0, 0.0)
    report.bound("algebra.covariant_annihilates_seed",
                 float(np.linalg.norm(algebra.covariant_contraction(x) @ psi_plus)), tol.exact)
    report.bound("algebra.contravariant_annihilates_seed",
                 float(np.linalg.norm(algebra.contravariant_contraction(x) @ psi_minus)), tol.exact)

    worst4 = worst8 = 0.0
    refl_t = refl_s = 0.0
    for p in _momenta(rng, samples):
        ev = np.sort(np.linalg.eigvalsh(algebra.hamiltonian(p)))
        worst4 = max(worst4, _norm(ev - p.p0 * np.array([-1, -1, 1, 1])) / p.p0)
        ev8 = np.sort(np.linalg.eigvalsh(algebra.direct_sum_hamiltonian(p)))
        worst8 = max(worst8, _norm(ev8 - p.p0 * np.repeat([-1.0, 1.0], 4)) / p.p0)
        refl_t = max(refl_t, _norm(algebra.reflection_conjugation("time", p)
                                   - algebra.direct_sum_field_operator(p.time_reflected())) / p.p0)
        refl_s = max(refl_s, _norm(algebra.reflection_conjugation("space", p)
                                   - algebra.direct_sum_field_operator(p.space_reflected())) / p.p0)
    report.bound("algebra.hamiltonian_spectrum", worst4, tol.transcendental)
    report.bound("algebra.direct_sum_spectrum", worst8, tol.transcendental)
    report.bound("algebra.time_reflection_conjugation", refl_t, tol.exact)
    report.bound("algebra.space_reflection_conjugation", refl_s, tol.exact)
    rt, rs = algebra.TIME_REFLECTION, algebra.SPACE_REFLECTION
    report.bound("algebra.time_reflection_squared", _norm(rt @ rt + np.eye(8)), tol.exact)
    report.bound("algebra.space_reflection_squared", _norm(rs @ rs - np.eye(8)), tol.exact)


# -- polarization ------------------------------------------------------------

def _transverse_states(p: FourMomentum, h: int) -> dict:
    states = {f"z{j}": polarization.z_axis(p, j, h) for j in (1, 2, 3)}
    states["zS"] = polarization.z_symmetric(p, h)
    return states


def polarization_suite(report: RunReport, rng, samples: int, tol: Tolerances) -> None:
    t = tol.transcendental
    worst = dict.fromkeys(
        ["equation", "helicity", "norm", "transverse", "closed_vs_rotation", "proportional",
         "orthonormal", "projection", "projectors", "amplitudes", "longitudinal_rotation",
         "reversed_phase", "rotation_covariance", "boost_covariance"], 0.0)
    for p in _momenta(rng, samples):
        p0 = p.p0
        zt = polarization.z_longitudinal(p)
        for h in (1, -1):
            states = _transverse_states(p, h)
            for z in states.values():
                worst["equation"] = max(worst["equation"], polarization.equation_residual(z) / p0)
                worst["helicity"] = max(worst["helicity"], polarization.helicity_residual(z))
                worst["norm"] = max(worst["norm"], abs(z.norm() - 1.0))
                worst["transverse"] = max(worst["transverse"], abs(z.time_component),
                                          abs(polarization.bilinear(z, z)))
            for j in (1, 2, 3):
                worst["closed_vs_rotation"] = max(worst["closed_vs_rotation"], _norm(
                    states[f"z{j}"].components - polarization.z_axis_by_rotation(p, j, h).components))
            for a, b in itertools.combinations(states.values(), 2):
                r, res = polarization.phase_ratio(a, b)
                worst["proportional"] = max(worst["proportional"], res, abs(abs(r) - 1.0))
            for seed in (1, 2, 3):
                y = polarization.reversed_order_bivector(p, seed, h)
                r, res = polarization.phase_ratio(states["zS"], y)
                worst["reversed_phase"] = max(worst["reversed_phase"], res, abs(abs(r) - 1.0),
                                              polarization.equation_residual(y) / p0)
        zs = polarization.z_symmetric(p)
        worst["equation"] = max(worst["equation"], polarization.equation_residual(zt) / p0)
        worst["helicity"] = max(worst["helicity"], polarization.helicity_residual(zt))
        worst["norm"] = max(worst["norm"], abs(zt.norm() - 1.0))
        ip = polarization.inner_product
        worst["orthonormal"] = max(worst["orthonormal"], abs(ip(zt, zt) - 1), abs(ip(zs, zs) - 1),
                                   abs(ip(zt, zs)), abs(ip(zs, zt)), abs(ip(zs, zs.conjugate())),
                                   abs(ip(zt, zs.conjugate())))
        proj = polarization.projection_sum(p)
        expected = np.zeros((4, 4))
        expected[1:, 1:] = np.eye(3) - np.outer(p.spatial, p.spatial) / p0**2
        amps = polarization.decompose(zs)
        two_eb = np.zeros((4, 4))
        two_eb[1:, 1:] = 2.0 * (np.outer(amps.e_part, amps.e_part) + np.outer(amps.b_part, amps.b_part))
        worst["projection"] = max(worst["projection"], _norm(proj - expected), _norm(proj - two_eb))
        pp, pm = polarization.projector_positive(p), polarization.projector_negative(p)
        outer = np.outer(zt.components, zt.components.conj()) + np.outer(zs.components, zs.components.conj())
        outer_m = (np.outer(zt.components.conj(), zt.components)
                   + np.outer(zs.components.conj(), zs.components))
        worst["projectors"] = max(
            worst["projectors"], _norm(pp @ pp - pp), _norm(pm @ pm - pm), _norm(pp @ pm), _norm(pm @ pp),
            _norm(pp - outer), _norm(pm - outer_m),
            *(float(np.linalg.norm(pp @ z.components - z.components)) for z in (zs, zt)),
            *(float(np.linalg.norm(pm @ z.components.conj() - z.components.conj())) for z in (zs, zt)),
            *(float(np.linalg.norm(pp @ z.components.conj())) for z in (zs, zt)),
            *(float(np.linalg.norm(pm @ z.components)) for z in (zs, zt)))
        closed = polarization.field_amplitudes(p)
        e, b = amps.e_part, amps.b_part
        worst["amplitudes"] = max(worst["amplitudes"], _norm(e - closed.e_part), _norm(b - closed.b_part),
                                  abs(e @ b), abs(e @ e - 0.5), abs(b @ b - 0.5),
                                  abs(e @ p.spatial) / p0, abs(b @ p.spatial) / p0)
        for seed in (1, 2, 3):
            worst["longitudinal_rotation"] = max(worst["longitudinal_rotation"], _norm(
                polarization.z_longitudinal_by_rotation(p, seed).components - zt.components))
        axis = int(rng.integers(1, 4))
        angle = float(rng.uniform(-math.pi, math.pi))
        rotated = polarization.rotate_state(zs, axis, angle)
        worst["rotation_covariance"] = max(worst["rotation_covariance"],
                                           polarization.equation_residual(rotated) / p0,
                                           abs(rotated.norm() - 1.0))
        boosted = polarization.boost_state(zs, axis, float(rng.uniform(-1.0, 1.0))).state
        worst["boost_covariance"] = max(worst["boost_covariance"],
                                        polarization.equation_residual(boosted) / boosted.momentum.p0)
    for name, value in worst.items():
        report.bound(f"polarization.{name}", value, t)

    zs = polarization.z_symmetric(REFERENCE_P)
    closed = polarization.field_amplitudes(REFERENCE_P)
    report.close("polarization.zS_reference_components",
                 closed.e_part + 1j * closed.b_part, zs.spatial, tol.exact)
    report.close("polarization.zS_reference_literal",
                 np.array([(3 + 1j) / 6, (-3 + 1j) / 6, -2j / 3]), zs.spatial, tol.exact)
    z2 = polarization.z_axis(REFERENCE_P, 2)
    report.close("polarization.z2_reference_literal",
                 np.array([0, 4j - 3, -5j, 6 + 2j]) / (3 * math.sqrt(10)), z2.components, tol.exact)
    sym = polarization.amplitude_symmetries(REFERENCE_P)
    report.bound("polarization.amplitude_reflections", max(sym.values()), tol.exact)


# -- holonomy ----------------------------------------------------------------

def holonomy_suite(report: RunReport, rng, samples: int, tol: Tolerances) -> None:
    loop_tol = holonomy.RETURN_TOL
    worst_closed = worst_flip = worst_rev = worst_long = worst_sph = worst_norm = 0.0
    for p in _momenta(rng, samples):
        phase = holonomy.loop_phase(p).phase
        worst_closed = max(worst_closed, abs(phase - holonomy.closed_form_phase(p).phase))
        worst_flip = max(worst_flip, abs(holonomy.loop_phase(p, -1).phase + phase))
        worst_rev = max(worst_rev, abs(holonomy.loop_phase(p, reverse=True).phase + phase))
        worst_long = max(worst_long, abs(holonomy.longitudinal_loop_phase(p).phase))
        theta = math.acos(p.p3 / p.p0)
        phi = math.atan2(p.p2, p.p1)
        worst_sph = max(worst_sph, abs(holonomy.spherical_phase(theta, phi) - holonomy.closed_form_phase(p).phase))
        out, back = holonomy.loop_paths(p)
        z = holonomy.transport(polarization.seed_bivector(1), out + back)
        worst_norm = max(worst_norm, abs(z.norm() - 1.0))
    report.bound("holonomy.loop_vs_closed_form", worst_closed, loop_tol)
    report.bound("holonomy.helicity_flip_negates", worst_flip, loop_tol)
    report.bound("holonomy.reversal_negates", worst_rev, loop_tol)
    report.bound("holonomy.longitudinal_phase_zero", worst_long, loop_tol)
    report.bound("holonomy.spherical_vs_cartesian", worst_sph, tol.transcendental)
    report.bound("holonomy.transport_norm", worst_norm, loop_tol)

    ref = holonomy.loop_phase(REFERENCE_P).phase
    report.close("holonomy.reference_phase", math.atan(1.0 / 3.0), ref, loop_tol)
    report.results["holonomy.reference_phase"] = ref
    for n in (2, 3):
        report.close(f"holonomy.spin{n}_scaling", n * ref, holonomy.spin_n_phase(REFERENCE_P, n), 1e-9)
    small = holonomy.solid_angle_check(0.01, 0.5)
    report.bound("holonomy.gauss_bonnet_small_theta", abs(small.ratio - 1.0), 1e-3)
    report.results["holonomy.gauss_bonnet_area"] = small.area
    back = holonomy.solid_angle_check(0.01, 0.5, reverse=True)
    report.close("holonomy.gauss_bonnet_reversed", [-small.phase, -small.area],
                 [back.phase, back.area], 1e-9)


# -- currents ----------------------------------------------------------------

def currents_suite(report: RunReport, rng, samples: int, tol: Tolerances) -> None:
    t = tol.transcendental
    w = dict.fromkeys(["velocity_zS", "velocity_zT", "stress_energy_zS", "field_reality",
                       "field_vs_bilinear", "null_current", "field_stress_vs_bilinear",
                       "boost_transform", "rotation_transform"], 0.0)
    zt_stress = 0.0
    for p in _momenta(rng, samples):
        v = p.array / p.p0
        zs, zt = polarization.z_symmetric(p), polarization.z_longitudinal(p)
        js, jt = currents.current(zs), currents.current(zt)
        w["velocity_zS"] = max(w["velocity_zS"], _norm(js.components - v))
        w["velocity_zT"] = max(w["velocity_zT"], _norm(jt.components - v))
        w["null_current"] = max(w["null_current"], js.null_residual(), jt.null_residual())
        w["stress_energy_zS"] = max(w["stress_energy_zS"], _norm(currents.stress_energy_tensor(zs) - np.outer(v, v)))
        zt_stress = max(zt_stress, _norm(currents.stress_energy_tensor(zt) - np.outer(v, v)))
        e, b = currents.field_amplitudes_of(zs)
        fc = currents.field_currents(e, b, e, b, 1, p.p0)
        field_t = currents.stress_energy_field_tensor(e, b, e, b, 1, p.p0)
        w["field_reality"] = max(w["field_reality"], fc.imag_residual,
                                 float(np.max(np.abs(field_t.imag))) / p.p0)
        w["field_vs_bilinear"] = max(w["field_vs_bilinear"], _norm(fc.components - js.components))
        w["field_stress_vs_bilinear"] = max(w["field_stress_vs_bilinear"], _norm(
            field_t / (2.0 * p.p0) - currents.stress_energy_tensor(zs)[1:, 1:]))
        axis = int(rng.integers(1, 4))
        kappa = float(rng.uniform(-1.0, 1.0))
        for z in (zs, zt):
            bt = currents.transform_current(z, "boost", axis, kappa)
            w["boost_transform"] = max(w["boost_transform"], _norm(
                bt.current.normalized().components - bt.momentum.array / bt.momentum.p0))
            rt = currents.transform_current(z, "rotation", axis, kappa)
            w["rotation_transform"] = max(w["rotation_transform"], _norm(
                rt.current.components - rt.momentum.array / rt.momentum.p0))
    for name, value in w.items():
        report.bound(f"currents.{name}", value, t)
    # z_T does not satisfy the tensor identity under this reading; reported, not checked
    report.results["currents.stress_energy_zT_max_deviation"] = zt_stress

    zs = polarization.z_symmetric(REFERENCE_P)
    report.close("currents.reference_velocity_zS_1", 2.0 / 3.0, currents.bilinear_current(zs, 1), t)
    report.close("currents.reference_velocity_zT_3", 1.0 / 3.0,
                 currents.bilinear_current(polarization.z_longitudinal(REFERENCE_P), 3), t)
    report.close("currents.reference_stress_zS_12", 4.0 / 9.0, currents.stress_energy_bilinear(zs, 1, 2), t)
    unit = currents.field_currents([1, 0, 0], [0, 1, 0], [1, 0, 0], [0, 1, 0], 1, 1.0)
    report.close("currents.crossed_fields", [1.0, 0.0, 0.0, 1.0], unit.components, tol.exact)
    report.close("currents.stress_field_33", 2.0,
                 currents.stress_energy_field([1, 0, 0], [0, 1, 0], [1, 0, 0], [0, 1, 0], 1, 1.0, 3, 3),
                 tol.exact)


# -- wavepacket --------------------------------------------------------------

WAVEPACKET_SIGMAS = (0.3, 1.0, 3.0, 0.5, 2.0)


def wavepacket_suite(report: RunReport, rng, samples: int, tol: Tolerances) -> None:
    q = tol.quadrature
    sigmas = WAVEPACKET_SIGMAS[:max(1, min(samples, len(WAVEPACKET_SIGMAS)))]
    worst_norm = worst_corr = worst_vec = worst_biv = worst_gap = 0.0
    for s in sigmas:
        env = wavepacket.GaussianEnvelope.along_axis1(s)
        worst_norm = max(worst_norm, abs(wavepacket.envelope_norm_integral(env, 0.4) - 1.0))
        worst_corr = max(worst_corr, abs(wavepacket.envelope_derivative_integral(s) - 1.0 / (4 * s * s)))
        vec = wavepacket.vector_potential_momentum(env, 1.0).per_mode
        vq = wavepacket.vector_potential_momentum_quadrature(env, 1.0).per_mode
        bq = wavepacket.bivector_momentum_quadrature(env, 1.0).per_mode
        worst_vec = max(worst_vec, _norm(vq - vec) / vec[0])
        worst_biv = max(worst_biv, _norm(bq - wavepacket.bivector_momentum(env, 1.0).per_mode))
        worst_gap = max(worst_gap, _norm((vq - bq) - env.k.array / (4 * s * s)))
    report.bound("wavepacket.envelope_normalization", worst_norm, q)
    report.bound("wavepacket.envelope_correction", worst_corr, q)
    report.close("wavepacket.envelope_correction_sigma1", 0.25, wavepacket.envelope_derivative_integral(1.0), q)
    report.bound("wavepacket.vector_potential_quadrature", worst_vec, 1e-6)
    report.bound("wavepacket.bivector_quadrature", worst_biv, 1e-6)
    report.bound("wavepacket.discrimination_gap", worst_gap, 1e-6)

    env = wavepacket.GaussianEnvelope.along_axis1(1.0)
    fr = wavepacket.fourier_spectrum_check(env)
    report.bound("wavepacket.fourier_closed_form", fr.max_relative_error, 1e-6)
    report.close("wavepacket.fourier_peak", env.k1, fr.peak_location, 1e-6)
    report.close("wavepacket.fourier_half_width", env.k1 / env.sigma, fr.half_width, 1e-6)

    f = wavepacket.GaussianEnvelope.along_axis1(1.0)
    g = wavepacket.GaussianEnvelope.along_axis1(1.0, direction=-1)
    xs = np.linspace(-3.0, 3.0, 25)
    worst_pt = 0.0
    for x0 in (0.0, 0.5, 1.3):
        worst_pt = max(worst_pt, _norm(wavepacket.interference_density(f, g, x0, xs)
                                        - wavepacket.interference_closed_form(1.0, 1.0, 1.0, x0, xs)))
    report.bound("wavepacket.interference_closed_form", worst_pt, q)
    energies, momenta = [], []
    for x0 in (0.0, 0.5, 1.0, 2.0):
        sc = wavepacket.superposition_currents(f, g, 1.0, x0)
        energies.append(sc.energy)
        momenta.append(sc.momentum[0])
    report.bound("wavepacket.superposition_net_momentum", max(abs(m) for m in momenta), 1e-6)
    report.bound("wavepacket.superposition_energy_conserved", max(abs(e - 2.0) for e in energies), 1e-6)
    worst_fd = 0.0
    for x1 in np.linspace(-2.5, 2.5, 11):
        d = wavepacket.translation_current_density(f, g, 0.5, x1)
        en, mo = wavepacket.superposition_densities(f, g, 0.5, x1)
        worst_fd = max(worst_fd, abs(d[0] - en), abs(d[1] - mo))
    report.bound("wavepacket.superposition_density_vs_field", worst_fd, 1e-8)
    vs = wavepacket.superposition_vector_potential_currents(f, g, 1.0)
    report.flag("wavepacket.vector_superposition_imaginary_terms", vs.has_imaginary_terms, vs.max_imag_integrand)
    report.bound("wavepacket.vector_superposition_squared_part", abs(vs.squared_part), 1e-6)
    single = wavepacket.superposition_vector_potential_currents(f, None, 1.0)
    report.close("wavepacket.vector_superposition_single", 1.25, single.real_integral, q)


SUITE_FUNCTIONS = {
    "algebra": algebra_suite,
    "polarization": polarization_suite,
    "holonomy": holonomy_suite,
    "currents": currents_suite,
    "wavepacket": wavepacket_suite,
}


def run_suite(name: str, seed: int = 0, samples: int | None = None,
              tolerances: Tolerances | None = None) -> RunReport:
    """Run one suite or ``all`` and return the report."""
    tol = tolerances or Tolerances()
    names = SUITES if name == "all" else (name,)
    for n in names:
        if n not in SUITE_FUNCTIONS:
            raise KeyError(n)
    report = RunReport("verify", inputs={
        "suite": name, "seed": seed, "samples": samples,
        "tolExact": tol.exact, "tolTranscendental": tol.transcendental, "tolQuadrature": tol.quadrature,
    })
    rng = np.random.default_rng(seed)
    for n in names:
        count = DEFAULT_SAMPLES[n] if samples is None else samples
        SUITE_FUNCTIONS[n](report, rng, count, tol)
    return report
