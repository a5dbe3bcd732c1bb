"""Polarization bivectors of the massless spin-one field.

Seeds are the chi-eigenvectors for pure motion along a coordinate axis.
Rotating a seed to an arbitrary null momentum gives the transverse bivectors
z_1, z_2, z_3 (each singular for pure motion along its own axis) and their
normalized sum z_S, which is singular only along (1, 1, 1).  The vector seeds
rotate to the longitudinal solution z_T.  Negative helicity is the complex
conjugate throughout.

Rotation sequences are written as operator products in the order they are
performed, leftmost first: ``[(b, beta), (c, gamma)]`` means
``exp(-i beta S_b) exp(-i gamma S_c)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import algebra
from .errors import DegenerateDirection, NotTransverse
from .momentum import FourMomentum, boost_momentum, check_degenerate, rotate_momentum

SQRT2 = math.sqrt(2.0)


class Basis(str, enum.Enum):
    SEED_AXIS1 = "seedAxis1"
    SEED_AXIS2 = "seedAxis2"
    SEED_AXIS3 = "seedAxis3"
    VECTOR_SEED1 = "vectorSeed1"
    VECTOR_SEED2 = "vectorSeed2"
    VECTOR_SEED3 = "vectorSeed3"
    Z1 = "z1"
    Z2 = "z2"
    Z3 = "z3"
    ZS = "zS"
    ZT = "zT"
    Y_REVERSED1 = "yReversed1"
    Y_REVERSED2 = "yReversed2"
    Y_REVERSED3 = "yReversed3"
    CUSTOM = "custom"

    @property
    def transverse(self) -> bool:
        return self not in (Basis.ZT, Basis.VECTOR_SEED1, Basis.VECTOR_SEED2,
                            Basis.VECTOR_SEED3, Basis.CUSTOM)


_Z_BASIS = {1: Basis.Z1, 2: Basis.Z2, 3: Basis.Z3}
_Y_BASIS = {1: Basis.Y_REVERSED1, 2: Basis.Y_REVERSED2, 3: Basis.Y_REVERSED3}
_SEED_BASIS = {1: Basis.SEED_AXIS1, 2: Basis.SEED_AXIS2, 3: Basis.SEED_AXIS3}
_VECTOR_BASIS = {1: Basis.VECTOR_SEED1, 2: Basis.VECTOR_SEED2, 3: Basis.VECTOR_SEED3}


@dataclass(frozen=True)
class PolarizationBivector:
    """A complex 4-component polarization state tied to a momentum.

    ``components`` is stored read-only.  ``helicity`` selects which field
    equation the state solves: covariant for +1, contravariant for -1.
    """

    components: np.ndarray
    helicity: int
    basis: Basis
    momentum: FourMomentum

    def __post_init__(self):
        c = np.array(self.components, dtype=complex)
        if c.shape != (4,):
            raise ValueError(f"expected 4 components, got shape {c.shape}")
        if not np.all(np.isfinite(c)):
            raise ValueError("components must be finite")
        if self.helicity not in (1, -1):
            raise ValueError(f"helicity must be +1 or -1, got {self.helicity!r}")
        c.flags.writeable = False
        object.__setattr__(self, "components", c)
        object.__setattr__(self, "basis", Basis(self.basis))

    def __array__(self, dtype=None, copy=None):
        return self.components.astype(dtype) if dtype else self.components.copy()

    @property
    def time_component(self) -> complex:
        return complex(self.components[0])

    @property
    def spatial(self) -> np.ndarray:
        return self.components[1:].copy()

    def norm(self) -> float:
        return float(np.sqrt(np.vdot(self.components, self.components).real))

    def conjugate(self) -> PolarizationBivector:
        """Complex conjugate: same basis and momentum, opposite helicity."""
        return PolarizationBivector(self.components.conj(), -self.helicity,
                                    self.basis, self.momentum)

    def with_components(self, components, basis=Basis.CUSTOM, momentum=None):
        return PolarizationBivector(components, self.helicity, basis,
                                    self.momentum if momentum is None else momentum)


@dataclass(frozen=True)
class FieldAmplitudes:
    """Electric and magnetic amplitudes: spatial part = e_part + i b_part."""

    e_part: np.ndarray
    b_part: np.ndarray

    def __post_init__(self):
        for name in ("e_part", "b_part"):
            v = np.array(getattr(self, name), dtype=float)
            v.flags.writeable = False
            object.__setattr__(self, name, v)


def _vec(z) -> np.ndarray:
    if isinstance(z, PolarizationBivector):
        return z.components
    return np.asarray(z, dtype=complex)


def _axis(i: int) -> int:
    if i not in (1, 2, 3):
        raise IndexError(f"axis must be 1, 2 or 3, got {i!r}")
    return i


def _helicity(h: int) -> int:
    if h not in (1, -1):
        raise ValueError(f"helicity must be +1 or -1, got {h!r}")
    return h


def _cyclic(a: int) -> tuple[int, int]:
    b = a % 3 + 1
    return b, b % 3 + 1


def _pure_motion(axis: int) -> FourMomentum:
    v = [1.0, 0.0, 0.0, 0.0]
    v[axis] = 1.0
    return FourMomentum(*v)


def _with_helicity(components: np.ndarray, helicity: int) -> np.ndarray:
    return components if helicity == 1 else components.conj()


# -- seeds ------------------------------------------------------------------

_SEEDS = {
    1: np.array([0, 0, -1j, 1]) / SQRT2,
    2: np.array([0, 1, 0, -1j]) / SQRT2,
    3: np.array([0, -1j, 1, 0]) / SQRT2,
}


def seed_bivector(axis: int, helicity: int = 1) -> PolarizationBivector:
    """Transverse chi-eigenbivector for unit-energy motion along ``axis``."""
    _axis(axis)
    _helicity(helicity)
    return PolarizationBivector(_with_helicity(_SEEDS[axis], helicity), helicity,
                                _SEED_BASIS[axis], _pure_motion(axis))


def vector_seed(axis: int) -> PolarizationBivector:
    """Time-imaginary vector (i, e_axis)/sqrt 2, the longitudinal seed."""
    _axis(axis)
    v = np.zeros(4, dtype=complex)
    v[0] = 1j
    v[axis] = 1.0
    return PolarizationBivector(v / SQRT2, 1, _VECTOR_BASIS[axis], _pure_motion(axis))


# -- rotation angles --------------------------------------------------------

def forward_rotation_sequence(p: FourMomentum, seed_axis: int) -> list[tuple[int, float]]:
    """Two-rotation sequence carrying pure ``seed_axis`` motion onto ``p``.

    For seed 1 this is [(2, lambda_2), (3, lambda_3)] with
    sin(lambda_3) = p2/|p| and (cos, sin)(lambda_2) proportional to (p1, -p3);
    seeds 2 and 3 follow by cyclic relabelling.  The result solves for z_b,
    b the axis after ``seed_axis``.
    """
    a = _axis(seed_axis)
    b, c = _cyclic(a)
    pn = p.spatial_norm()
    if check_degenerate(math.hypot(p[a], p[c]), p):
        raise DegenerateDirection(
            f"z{b} is undefined for pure motion along axis {b}: p={tuple(p)}")
    inner = math.asin(max(-1.0, min(1.0, p[b] / pn)))
    outer = math.atan2(-p[c], p[a])
    return [(b, outer), (c, inner)]


def reversed_rotation_sequence(p: FourMomentum, seed_axis: int) -> list[tuple[int, float]]:
    """The same two rotations taken in the opposite order.

    For seed 1: [(3, lambda_3), (2, lambda_2)] with lambda_3 = arctan(p2/p1)
    and sin(lambda_2) = -p3/|p|.  When p1 < 0 the tilt is taken past pi/2,
    lambda_2 -> pi - lambda_2, so the sequence still ends on ``p`` while the
    azimuth stays on the principal branch.
    """
    a = _axis(seed_axis)
    b, c = _cyclic(a)
    pn = p.spatial_norm()
    if check_degenerate(math.hypot(p[a], p[b]), p):
        raise DegenerateDirection(
            f"reversed construction from seed {a} is undefined for pure motion "
            f"along axis {c}: p={tuple(p)}")
    tilt = math.asin(max(-1.0, min(1.0, -p[c] / pn)))
    if p[a] >= 0.0:
        azimuth = math.atan2(p[b], p[a])
    else:
        azimuth = math.atan2(-p[b], -p[a])
        tilt = math.pi - tilt
    return [(c, azimuth), (b, tilt)]


def sequence_operator(sequence) -> np.ndarray:
    """Ordered product of exp(-i angle S_axis) over the sequence."""
    op = np.eye(4, dtype=complex)
    for axis, angle in sequence:
        op = op @ algebra.rotation_operator(axis, angle)
    return op


# -- transverse bivectors ---------------------------------------------------

def z_axis(p: FourMomentum, j: int, helicity: int = 1) -> PolarizationBivector:
    """Closed-form z_j(p); undefined for pure motion along axis ``j``."""
    _axis(j)
    _helicity(helicity)
    p.require_null()
    p0, p1, p2, p3 = p
    if j == 2:
        d = math.hypot(p1, p3)
        num = [0, 1j * p1 * p2 - p0 * p3, -1j * (p1**2 + p3**2), p0 * p1 + 1j * p2 * p3]
    elif j == 3:
        d = math.hypot(p1, p2)
        num = [0, p0 * p2 + 1j * p1 * p3, -p0 * p1 + 1j * p2 * p3, -1j * (p1**2 + p2**2)]
    else:
        d = math.hypot(p2, p3)
        num = [0, -1j * (p2**2 + p3**2), 1j * p1 * p2 + p0 * p3, -p0 * p2 + 1j * p1 * p3]
    if check_degenerate(d, p):
        raise DegenerateDirection(f"z{j} is undefined for pure motion along axis {j}: p={tuple(p)}")
    z = np.array(num, dtype=complex) / (SQRT2 * p0 * d)
    return PolarizationBivector(_with_helicity(z, helicity), helicity, _Z_BASIS[j], p)


def z_axis_by_rotation(p: FourMomentum, j: int, helicity: int = 1) -> PolarizationBivector:
    """z_j(p) built by rotating the seed of the preceding axis."""
    _axis(j)
    _helicity(helicity)
    p.require_null()
    seed_axis = (j + 1) % 3 + 1
    op = sequence_operator(forward_rotation_sequence(p, seed_axis))
    z = op @ seed_bivector(seed_axis, helicity).components
    return PolarizationBivector(z, helicity, _Z_BASIS[j], p)


def symmetric_denominator(p: FourMomentum) -> float:
    """sqrt((p1-p2)^2 + (p1-p3)^2 + (p2-p3)^2), zero along (1, 1, 1)."""
    _, p1, p2, p3 = p
    return math.sqrt((p1 - p2) ** 2 + (p1 - p3) ** 2 + (p2 - p3) ** 2)


def _require_symmetric(p: FourMomentum) -> float:
    d = symmetric_denominator(p)
    if check_degenerate(d, p):
        raise DegenerateDirection(f"zS is undefined for motion along (1, 1, 1): p={tuple(p)}")
    return d


def z_symmetric(p: FourMomentum, helicity: int = 1) -> PolarizationBivector:
    """z_S(p), the normalized weighted sum of z_1, z_2, z_3.

    z_S_j = sum_k (-p0 eps_jkm p_m + i (p_j p_k - p_k^2)) / (sqrt 2 p0 D).
    """
    _helicity(helicity)
    p.require_null()
    d = _require_symmetric(p)
    q = p.spatial
    eps = algebra.levi_civita()
    z = np.zeros(4, dtype=complex)
    for j in range(3):
        total = 0j
        for k in range(3):
            total += -p.p0 * float(eps[j, k] @ q) + 1j * (q[j] * q[k] - q[k] ** 2)
        z[j + 1] = total
    z /= SQRT2 * p.p0 * d
    return PolarizationBivector(_with_helicity(z, helicity), helicity, Basis.ZS, p)


def field_amplitudes(p: FourMomentum) -> FieldAmplitudes:
    """Closed forms of the electric and magnetic parts of z_S(p).

    ze_j = p0 (p_{j+1} - p_{j+2}) / N and zb_j = (-p0^2 + p_j sum_k p_k) / N
    with N = sqrt 2 p0 D, indices cyclic.  Signed p0 is used, so the
    reflection behaviour can be read off directly.
    """
    d = _require_symmetric(p)
    p0 = p.p0
    q = p.spatial
    n = SQRT2 * p0 * d
    total = float(q.sum())
    ze = np.array([p0 * (q[(j + 1) % 3] - q[(j + 2) % 3]) for j in range(3)]) / n
    zb = np.array([-(p0**2) + q[j] * total for j in range(3)]) / n
    return FieldAmplitudes(ze, zb)


def z_longitudinal(p: FourMomentum) -> PolarizationBivector:
    """z_T(p) = (i p0, p1, p2, p3) / (sqrt 2 p0)."""
    p.require_null()
    z = np.array([1j * p.p0, p.p1, p.p2, p.p3], dtype=complex) / (SQRT2 * p.p0)
    return PolarizationBivector(z, 1, Basis.ZT, p)


def z_longitudinal_by_rotation(p: FourMomentum, seed_axis: int = 1) -> PolarizationBivector:
    p.require_null()
    op = sequence_operator(forward_rotation_sequence(p, seed_axis))
    return PolarizationBivector(op @ vector_seed(seed_axis).components, 1, Basis.ZT, p)


def reversed_order_bivector(p: FourMomentum, seed_axis: int = 1,
                            helicity: int = 1) -> PolarizationBivector:
    """Seed rotated to ``p`` with the two rotations in reversed order.

    Seed 1 gives y_3, seed 2 gives y_1, seed 3 gives y_2; each y_c is
    undefined for pure motion along axis c.
    """
    _axis(seed_axis)
    _helicity(helicity)
    p.require_null()
    _, c = _cyclic(seed_axis)
    op = sequence_operator(reversed_rotation_sequence(p, seed_axis))
    z = op @ seed_bivector(seed_axis, helicity).components
    return PolarizationBivector(z, helicity, _Y_BASIS[c], p)


def build(p: FourMomentum, basis, helicity: int = 1) -> PolarizationBivector:
    """Construct the named basis state at ``p`` (used by the CLI)."""
    basis = Basis(basis)
    if basis in (Basis.Z1, Basis.Z2, Basis.Z3):
        return z_axis(p, int(basis.value[1]), helicity)
    if basis is Basis.ZS:
        return z_symmetric(p, helicity)
    if basis is Basis.ZT:
        z = z_longitudinal(p)
        return z if helicity == 1 else z.conjugate()
    if basis in (Basis.Y_REVERSED1, Basis.Y_REVERSED2, Basis.Y_REVERSED3):
        c = int(basis.value[-1])
        return reversed_order_bivector(p, c % 3 + 1, helicity)
    raise ValueError(f"basis {basis.value!r} cannot be built from a momentum")


# -- decomposition and products ---------------------------------------------

def decompose(z, tol: float = 1e-12) -> FieldAmplitudes:
    """Split a transverse bivector into e_part + i b_part."""
    v = _vec(z)
    if abs(v[0]) > tol:
        raise NotTransverse(f"time component {v[0]:.3e} is not zero")
    return FieldAmplitudes(v[1:].real, v[1:].imag)


def amplitude_symmetries(p: FourMomentum) -> dict:
    """Reflection behaviour of the closed-form amplitudes.

    Returns the maximal residuals of ze(-p) = -ze(p), zb(-p) = zb(p),
    ze(p0 -> -p0) = ze(p), zb(p0 -> -p0) = -zb(p) and of the combined flip.
    """
    base = field_amplitudes(p)
    space = field_amplitudes(p.space_reflected())
    time = field_amplitudes(p.time_reflected())
    both = field_amplitudes(p.space_reflected().time_reflected())

    def r(a, b):
        return float(np.max(np.abs(a - b)))

    return {
        "space_ze_negated": r(space.e_part, -base.e_part),
        "space_zb_unchanged": r(space.b_part, base.b_part),
        "time_ze_unchanged": r(time.e_part, base.e_part),
        "time_zb_negated": r(time.b_part, -base.b_part),
        "both_ze_negated": r(both.e_part, -base.e_part),
        "both_zb_negated": r(both.b_part, -base.b_part),
    }


def inner_product(a, b) -> complex:
    """conj(a) . b, conjugate-linear in the first argument."""
    return complex(np.vdot(_vec(a), _vec(b)))


def bilinear(a, b) -> complex:
    """Plain a . b without conjugation."""
    return complex(_vec(a) @ _vec(b))


def equation_residual(z: PolarizationBivector) -> float:
    """Norm of the helicity-appropriate field operator applied to ``z``."""
    op = (algebra.covariant_contraction(z.momentum) if z.helicity == 1
          else algebra.contravariant_contraction(z.momentum))
    return float(np.linalg.norm(op @ z.components))


def helicity_residual(z: PolarizationBivector) -> float:
    """|| (p.chi / p0) z - helicity z ||."""
    h = algebra.hamiltonian(z.momentum) / z.momentum.p0
    return float(np.linalg.norm(h @ z.components - z.helicity * z.components))


def phase_ratio(a, b) -> tuple[complex, float]:
    """r = conj(a).b and the residual ||b - r a|| for unit states a, b."""
    va, vb = _vec(a), _vec(b)
    r = complex(np.vdot(va, vb))
    return r, float(np.linalg.norm(vb - r * va))


def projection_sum(p: FourMomentum) -> np.ndarray:
    """z_S (x) conj(z_S) + conj(z_S) (x) z_S.

    Spatial block delta_ij - p_i p_j / p0^2, zero time row and column.
    """
    z = z_symmetric(p).components
    return np.outer(z, z.conj()) + np.outer(z.conj(), z)


def projector_positive(p: FourMomentum) -> np.ndarray:
    """(p0 I + p.chi) / (2 p0) = z_T (x) conj(z_T) + z_S (x) conj(z_S)."""
    p.require_null()
    return (p.p0 * np.eye(4) + algebra.hamiltonian(p)) / (2.0 * p.p0)


def projector_negative(p: FourMomentum) -> np.ndarray:
    """(p0 I - p.chi) / (2 p0) = conj(z_T) (x) z_T + conj(z_S) (x) z_S."""
    p.require_null()
    return (p.p0 * np.eye(4) - algebra.hamiltonian(p)) / (2.0 * p.p0)


# -- frame changes ----------------------------------------------------------

def rotate_state(z: PolarizationBivector, axis: int, angle: float) -> PolarizationBivector:
    """exp(-i angle S_axis) z, tagged with the rotated momentum."""
    op = algebra.rotation_operator(axis, angle)
    return z.with_components(op @ z.components,
                             momentum=rotate_momentum(z.momentum, axis, angle))


@dataclass(frozen=True)
class BoostedState:
    """Unit-normalized boosted state plus the discarded scale factor."""

    state: PolarizationBivector
    scale: float
    operator: np.ndarray = field(repr=False)


def boost_state(z: PolarizationBivector, axis: int, rapidity: float) -> BoostedState:
    """Carry ``z`` to ``boost_momentum(z.momentum, axis, rapidity)``.

    Transverse states use exp(+-rapidity S_axis) (upper sign for positive
    helicity), longitudinal ones exp(+-rapidity K_axis).  The raw image has
    norm equal to the Doppler factor p0'/p0; it is renormalized here and the
    factor reported as ``scale``.
    """
    _axis(axis)
    if z.basis is Basis.ZT or z.basis in _VECTOR_BASIS.values():
        op = algebra.exp_boost(axis, z.helicity * rapidity)
    else:
        op = algebra.exp_spin(axis, z.helicity * rapidity)
    w = op @ z.components
    scale = float(np.linalg.norm(w))
    new_p = boost_momentum(z.momentum, axis, rapidity)
    return BoostedState(z.with_components(w / scale, momentum=new_p), scale, op)
