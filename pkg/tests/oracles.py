"""Independent reference computations used only by the tests.

None of these call into the package's closed forms.
"""

from __future__ import annotations

import math

import numpy as np


def series_expm(a: np.ndarray) -> np.ndarray:
    """Matrix exponential by scaling and squaring a Taylor series.

    The series is summed until the term norm drops below 1e-16.
    """
    a = np.asarray(a, dtype=complex)
    norm = float(np.max(np.sum(np.abs(a), axis=1)))
    squarings = max(0, int(math.ceil(math.log2(norm))) + 1) if norm > 0.5 else 0
    x = a / (2.0**squarings)
    result = np.eye(a.shape[0], dtype=complex)
    term = np.eye(a.shape[0], dtype=complex)
    for n in range(1, 200):
        term = term @ x / n
        result = result + term
        if np.max(np.abs(term)) < 1e-16:
            break
    for _ in range(squarings):
        result = result @ result
    return result


def sorted_eigenvalues(a: np.ndarray) -> np.ndarray:
    """Eigenvalues from the general dense solver, sorted by real part."""
    return np.sort_complex(np.linalg.eigvals(np.asarray(a, dtype=complex)))


def so3_rotation(axis: int, angle: float) -> np.ndarray:
    """Active right-handed rotation from scipy's independent implementation."""
    from scipy.spatial.transform import Rotation

    vec = np.zeros(3)
    vec[axis - 1] = angle
    return Rotation.from_rotvec(vec).as_matrix()


def levi_civita_from_permutations() -> np.ndarray:
    eps = np.zeros((3, 3, 3))
    for i in range(3):
        for j in range(3):
            for k in range(3):
                eps[i, j, k] = (i - j) * (j - k) * (k - i) / 2.0
    return eps


def lhuilier_area(a, b, c) -> float:
    """Unsigned area of a spherical triangle by L'Huilier's theorem."""
    a, b, c = (np.asarray(v, dtype=float) / np.linalg.norm(v) for v in (a, b, c))
    sa = math.acos(max(-1.0, min(1.0, float(b @ c))))
    sb = math.acos(max(-1.0, min(1.0, float(a @ c))))
    sc = math.acos(max(-1.0, min(1.0, float(a @ b))))
    s = 0.5 * (sa + sb + sc)
    t = (math.tan(s / 2) * math.tan((s - sa) / 2) * math.tan((s - sb) / 2) * math.tan((s - sc) / 2))
    return 4.0 * math.atan(math.sqrt(max(t, 0.0)))


def cap_area(half_angle: float) -> float:
    """Area of a spherical cap of given angular radius."""
    return 2.0 * math.pi * (1.0 - math.cos(half_angle))


def trapezoid(fn, a: float, b: float, n: int = 200001) -> float:
    """Composite trapezoid rule on a uniform grid (spectrally accurate for
    smooth integrands decaying at both ends)."""
    x = np.linspace(a, b, n)
    y = fn(x)
    return float(np.trapezoid(y, x)) if hasattr(np, "trapezoid") else float(np.trapz(y, x))


def gaussian_envelope(u, sigma: float, k0: float = 1.0):
    """Direct transcription of the normalized Gaussian wavelet envelope."""
    return (2.0 * math.pi * sigma**2 / k0**2) ** -0.25 * np.exp(-np.asarray(u) ** 2 / (4.0 * sigma**2))


def numeric_derivative(fn, x, h: float = 1e-4):
    """Six-point central difference."""
    w = np.array([-1.0, 9.0, -45.0, 45.0, -9.0, 1.0]) / (60.0 * h)
    offs = np.array([-3.0, -2.0, -1.0, 1.0, 2.0, 3.0]) * h
    return sum(wi * fn(x + oi) for wi, oi in zip(w, offs))
