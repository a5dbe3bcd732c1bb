"""Current bilinears and stress-energy components.

Two views of the same quantities: bilinears conj(z) chi z of unit
polarization bivectors, and component formulas in terms of electric and
magnetic amplitudes together with their adjoints.  For a free field the
adjoint amplitudes coincide with the plain ones and every imaginary term
cancels.  The bridge between the views is e = sqrt(2 p0) ze,
b = sqrt(2 p0) zb.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import algebra
from .momentum import FourMomentum, boost_momentum, rotate_momentum
from .polarization import PolarizationBivector, boost_state, decompose

_EPS = algebra.levi_civita()


@dataclass(frozen=True)
class CurrentTensor:
    """A four-current with optional 4x4 tensor, stored as complex values.

    ``time_component`` and ``spatial`` return real parts; ``imag_residual``
    is the largest imaginary magnitude present.
    """

    components: np.ndarray
    full_tensor: np.ndarray | None = None

    def __post_init__(self):
        c = np.array(self.components, dtype=complex)
        if c.shape != (4,):
            raise ValueError(f"expected 4 components, got shape {c.shape}")
        c.flags.writeable = False
        object.__setattr__(self, "components", c)
        if self.full_tensor is not None:
            t = np.array(self.full_tensor, dtype=complex)
            t.flags.writeable = False
            object.__setattr__(self, "full_tensor", t)

    @property
    def time_component(self) -> float:
        return float(self.components[0].real)

    @property
    def spatial(self) -> np.ndarray:
        return self.components[1:].real.copy()

    @property
    def real(self) -> np.ndarray:
        return self.components.real.copy()

    @property
    def imag_residual(self) -> float:
        parts = [np.max(np.abs(self.components.imag))]
        if self.full_tensor is not None:
            parts.append(np.max(np.abs(self.full_tensor.imag)))
        return float(max(parts))

    def null_residual(self) -> float:
        """|j0^2 - |j|^2|."""
        j = self.real
        return abs(j[0] ** 2 - float(j[1:] @ j[1:]))

    def normalized(self) -> CurrentTensor:
        """Divide by the time component, giving a generalized velocity."""
        return CurrentTensor(self.components / self.components[0],
                             None if self.full_tensor is None else self.full_tensor / self.components[0])


def _vec(z) -> np.ndarray:
    return z.components if isinstance(z, PolarizationBivector) else np.asarray(z, dtype=complex)


def bilinear_current(z, mu: int) -> complex:
    """conj(z) . chi^mu . z; equals p^mu / p0 for unit z_S and z_T."""
    v = _vec(z)
    return complex(np.vdot(v, algebra.chi(mu) @ v))


def current(z) -> CurrentTensor:
    return CurrentTensor([bilinear_current(z, mu) for mu in range(4)])


def stress_energy_bilinear(z, alpha: int, beta: int) -> complex:
    """conj(z) g chi^alpha g chi^beta z with g = diag(-1, 1, 1, 1).

    For unit z_S this is p^alpha p^beta / p0^2.  The plain product
    conj(z) chi^alpha chi^beta z is :func:`plain_stress_energy_bilinear`.
    """
    v = _vec(z)
    g = algebra.METRIC
    return complex(np.vdot(v, g @ algebra.chi(alpha) @ g @ algebra.chi(beta) @ v))


def plain_stress_energy_bilinear(z, alpha: int, beta: int) -> complex:
    v = _vec(z)
    return complex(np.vdot(v, algebra.chi(alpha) @ algebra.chi(beta) @ v))


def stress_energy_tensor(z) -> np.ndarray:
    return np.array([[stress_energy_bilinear(z, a, b) for b in range(4)] for a in range(4)])


def _amplitudes(e, b, e_dagger, b_dagger):
    arrays = [np.asarray(x, dtype=complex) for x in (e, b, e_dagger, b_dagger)]
    for x in arrays:
        if x.shape != (3,):
            raise ValueError("field amplitudes must be 3-vectors")
    return arrays


def _require_positive(p0: float) -> float:
    if not p0 > 0:
        raise ValueError(f"p0 must be positive, got {p0}")
    return float(p0)


def field_currents(e, b, e_dagger, b_dagger, helicity: int, p0: float) -> CurrentTensor:
    """Energy and momentum currents from field amplitudes and their adjoints.

    energy  = (b+.b + e+.e +- i (e+.b - b+.e)) / (2 p0)
    mom_i   = +- eps_ijk (e+_j b_k - b+_j e_k -+ i (b+_j b_k + e+_j e_k)) / (2 p0)

    Upper signs for positive helicity.  The adjoints are independent inputs;
    with e+ = e and b+ = b real this reduces to (e.e + b.b)/(2 p0) and
    +-(e x b)/p0.
    """
    h = _sign(helicity)
    e, b, ed, bd = _amplitudes(e, b, e_dagger, b_dagger)
    p0 = _require_positive(p0)
    energy = (bd @ b + ed @ e + h * 1j * (ed @ b - bd @ e)) / (2.0 * p0)
    inner = np.outer(ed, b) - np.outer(bd, e) - h * 1j * (np.outer(bd, b) + np.outer(ed, e))
    momentum = h * np.einsum("ijk,jk->i", _EPS, inner) / (2.0 * p0)
    return CurrentTensor(np.concatenate([[energy], momentum]))


def stress_energy_field(e, b, e_dagger, b_dagger, helicity: int, p0: float,
                        l: int, m: int) -> complex:
    """Spatial stress-energy element (l, m) in 1..3 from field amplitudes.

    delta_lm (b+.b + e+.e +- i (e+.b - b+.e))
      - (b+_l b_m + b+_m b_l + e+_l e_m + e+_m e_l
         +- i (e+_l b_m - b+_m e_l + e+_m b_l - b+_l e_m))

    No 1/(2 p0) factor is applied, so ``p0`` only enters via validation.
    """
    h = _sign(helicity)
    if l not in (1, 2, 3) or m not in (1, 2, 3):
        raise IndexError("stress-energy indices must be 1, 2 or 3")
    e, b, ed, bd = _amplitudes(e, b, e_dagger, b_dagger)
    _require_positive(p0)
    i, j = l - 1, m - 1
    trace = bd @ b + ed @ e + h * 1j * (ed @ b - bd @ e)
    cross = (bd[i] * b[j] + bd[j] * b[i] + ed[i] * e[j] + ed[j] * e[i]
             + h * 1j * (ed[i] * b[j] - bd[j] * e[i] + ed[j] * b[i] - bd[i] * e[j]))
    return complex((1.0 if l == m else 0.0) * trace - cross)


def stress_energy_field_tensor(e, b, e_dagger, b_dagger, helicity: int, p0: float) -> np.ndarray:
    return np.array([[stress_energy_field(e, b, e_dagger, b_dagger, helicity, p0, l, m)
                      for m in (1, 2, 3)] for l in (1, 2, 3)])


def field_amplitudes_of(z: PolarizationBivector) -> tuple[np.ndarray, np.ndarray]:
    """Amplitudes with z = (e + i h b) / sqrt(2 p0), h the helicity.

    For z_S this gives e = sqrt(2 p0) ze and b = sqrt(2 p0) zb; its conjugate
    yields the same pair with h = -1.
    """
    a = decompose(z)
    scale = math.sqrt(2.0 * z.momentum.p0)
    return scale * a.e_part, z.helicity * scale * a.b_part


def hermitian_field_currents(z: PolarizationBivector) -> CurrentTensor:
    """Field-amplitude currents of ``z`` with adjoints equal to the amplitudes."""
    e, b = field_amplitudes_of(z)
    return field_currents(e, b, e, b, z.helicity, z.momentum.p0)


def _sign(helicity: int) -> int:
    if helicity not in (1, -1):
        raise ValueError(f"helicity must be +1 or -1, got {helicity!r}")
    return helicity


@dataclass(frozen=True)
class TransformedCurrent:
    """Current of a boosted or rotated state and the momentum it should track."""

    current: CurrentTensor
    momentum: FourMomentum


def transform_current(z: PolarizationBivector, kind: str, axis: int, kappa: float) -> TransformedCurrent:
    """Current conj(U z) chi (U z) of the transformed state U z.

    For a boost U = exp(+-kappa S) (exp(+-kappa K) for z_T); both generators
    are Hermitian, so the current reads conj(z) U chi U z with the same
    exponential on both sides.  The result is proportional to the boosted
    p'^mu with time component (p0'/p0)^2.  For a rotation
    U = exp(-i kappa S) and the current is conj(z) exp(i kappa S) chi
    exp(-i kappa S) z = p'^mu / p0 with p' the rotated momentum.
    """
    v = z.components
    if kind == "boost":
        u = boost_state(z, axis, kappa).operator
        target = boost_momentum(z.momentum, axis, kappa)
    elif kind == "rotation":
        u = algebra.rotation_operator(axis, kappa)
        target = rotate_momentum(z.momentum, axis, kappa)
    else:
        raise ValueError(f"kind must be 'boost' or 'rotation', got {kind!r}")
    return TransformedCurrent(current(u @ v), target)
