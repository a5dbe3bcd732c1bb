"""The chi operators, spin-one generators and the 8x8 direct-sum machinery.

Every operator is a plain ``numpy`` complex array: 4x4 for single-helicity
objects, 8x8 for the direct sum of the two helicities.  Index 0 is time.
Returned arrays are fresh copies and may be modified by the caller.
"""

from __future__ import annotations

import math

import numpy as np

from .momentum import FourMomentum

__all__ = [
    "levi_civita", "chi", "spin_generator", "boost_generator", "exp_spin",
    "exp_boost", "rotation_operator", "axis_rotation_operator",
    "covariant_contraction", "contravariant_contraction", "hamiltonian",
    "axis_cycle_operator", "commutator", "anticommutator",
    "direct_sum", "direct_sum_hamiltonian", "direct_sum_field_operator",
    "direct_sum_boost_generator", "direct_sum_rotation_generator",
    "TIME_REFLECTION", "SPACE_REFLECTION", "reflection_conjugation",
    "METRIC",
]

METRIC = np.diag([-1.0, 1.0, 1.0, 1.0]).astype(complex)


def levi_civita() -> np.ndarray:
    eps = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[i, j, k] = 1.0
        eps[j, i, k] = -1.0
    return eps


_EPS = levi_civita()


def _check_spatial(i: int) -> None:
    if i not in (1, 2, 3):
        raise IndexError(f"spatial index must be 1, 2 or 3, got {i!r}")


def _build_spin(i: int) -> np.ndarray:
    s = np.zeros((4, 4), dtype=complex)
    s[1:, 1:] = -1j * _EPS[i - 1]
    return s


def _build_boost(i: int) -> np.ndarray:
    k = np.zeros((4, 4), dtype=complex)
    k[0, i] = 1j
    k[i, 0] = -1j
    return k


_S = {i: _build_spin(i) for i in (1, 2, 3)}
_K = {i: _build_boost(i) for i in (1, 2, 3)}
_CHI = {0: np.eye(4, dtype=complex), **{i: _S[i] + _K[i] for i in (1, 2, 3)}}
for _m in (*_S.values(), *_K.values(), *_CHI.values()):
    _m.flags.writeable = False


def spin_generator(i: int) -> np.ndarray:
    """S_i: spatial block -i eps_ijk, zero time row and column."""
    _check_spatial(i)
    return _S[i].copy()


def boost_generator(i: int) -> np.ndarray:
    """K_i: (K_i)^0_j = i delta_ij, (K_i)^j_0 = -i delta_ij, zero spatial block."""
    _check_spatial(i)
    return _K[i].copy()


def chi(mu: int) -> np.ndarray:
    """chi^0 is the identity; chi^j = K_j + S_j."""
    if mu not in (0, 1, 2, 3):
        raise IndexError(f"chi index must be 0..3, got {mu!r}")
    return _CHI[mu].copy()


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


def exp_spin(i: int, kappa: float) -> np.ndarray:
    """exp(kappa S_i) = K_i^2 + S_i^2 cosh(kappa) + S_i sinh(kappa)."""
    _check_spatial(i)
    s, k = _S[i], _K[i]
    return k @ k + (s @ s) * math.cosh(kappa) + s * math.sinh(kappa)


def exp_boost(i: int, kappa: float) -> np.ndarray:
    """exp(kappa K_i) = S_i^2 + K_i^2 cosh(kappa) + K_i sinh(kappa)."""
    _check_spatial(i)
    s, k = _S[i], _K[i]
    return s @ s + (k @ k) * math.cosh(kappa) + k * math.sinh(kappa)


def _rodrigues(generator: np.ndarray, theta: float) -> np.ndarray:
    # exp(-i theta J) for any J with J^3 = J (unit-axis spin-one generator)
    return (np.eye(4, dtype=complex) - 1j * math.sin(theta) * generator
            + (math.cos(theta) - 1.0) * (generator @ generator))


def rotation_operator(axis: int, theta: float) -> np.ndarray:
    """exp(-i theta S_axis).

    The spatial block is the active right-handed rotation by ``theta`` about
    ``axis``; the time component is untouched.
    """
    _check_spatial(axis)
    return _rodrigues(_S[axis], theta)


def axis_rotation_operator(n, theta: float) -> np.ndarray:
    """exp(-i theta n.S) about a unit (or normalizable) axis ``n``."""
    n = np.asarray(n, dtype=float)
    n = n / np.linalg.norm(n)
    generator = n[0] * _S[1] + n[1] * _S[2] + n[2] * _S[3]
    return _rodrigues(generator, theta)


def axis_cycle_operator(direction: str = "forward") -> np.ndarray:
    """exp(-2 pi i (S_1 + S_2 + S_3) / (3 sqrt 3)), or its square for ``reverse``.

    The forward operator carries axis 1 to 2, 2 to 3 and 3 to 1, both for the
    positive-helicity seeds and for the vector seeds (i, e_j).
    """
    forward = axis_rotation_operator((1.0, 1.0, 1.0), 2.0 * math.pi / 3.0)
    if direction == "forward":
        return forward
    if direction == "reverse":
        return forward @ forward
    raise ValueError(f"direction must be 'forward' or 'reverse', got {direction!r}")


def hamiltonian(p: FourMomentum) -> np.ndarray:
    """sum_j p_j chi^j; eigenvalues +-p0, each twice, for null p."""
    return p.p1 * _CHI[1] + p.p2 * _CHI[2] + p.p3 * _CHI[3]


def covariant_contraction(p: FourMomentum) -> np.ndarray:
    """chi^mu p_mu = -p0 I + p.chi (annihilates positive helicity states)."""
    return -p.p0 * np.eye(4, dtype=complex) + hamiltonian(p)


def contravariant_contraction(p: FourMomentum) -> np.ndarray:
    """chi^mu p^mu = +p0 I + p.chi (annihilates negative helicity states)."""
    return p.p0 * np.eye(4, dtype=complex) + hamiltonian(p)


# -- 8x8 direct sum ---------------------------------------------------------

def direct_sum(top_left: np.ndarray, bottom_right: np.ndarray) -> np.ndarray:
    out = np.zeros((8, 8), dtype=complex)
    out[:4, :4] = top_left
    out[4:, 4:] = bottom_right
    return out


def direct_sum_hamiltonian(p: FourMomentum) -> np.ndarray:
    """diag(p.chi, -p.chi); eigenvalues +-p0 each four times for null p."""
    h = hamiltonian(p)
    return direct_sum(h, -h)


def direct_sum_field_operator(p: FourMomentum) -> np.ndarray:
    """diag(chi^mu p_mu, -chi^mu p^mu), the momentum form of the operator acting on (psi+, -psi-)."""
    return direct_sum(covariant_contraction(p), -contravariant_contraction(p))


def direct_sum_boost_generator(i: int) -> np.ndarray:
    s = spin_generator(i)
    return direct_sum(s, -s)


def direct_sum_rotation_generator(i: int) -> np.ndarray:
    s = spin_generator(i)
    return direct_sum(s, s)


def _reflection(sign: float) -> np.ndarray:
    r = np.zeros((8, 8), dtype=complex)
    r[:4, 4:] = sign * np.eye(4)
    r[4:, :4] = np.eye(4)
    r.flags.writeable = False
    return r


TIME_REFLECTION = _reflection(-1.0)
SPACE_REFLECTION = _reflection(1.0)


def reflection_conjugation(which: str, p: FourMomentum) -> np.ndarray:
    """R G(p) R for the time or space reflection R.

    R_T G(p) R_T equals G at (-p0, p) and R_S G(p) R_S equals G at (p0, -p).
    """
    if which in ("time", "timeReflection", "T"):
        r = TIME_REFLECTION
    elif which in ("space", "spaceReflection", "S"):
        r = SPACE_REFLECTION
    else:
        raise ValueError(f"unknown reflection {which!r}")
    return r @ direct_sum_field_operator(p) @ r
