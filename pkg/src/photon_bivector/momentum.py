"""Four-momenta in natural units with signature (-+++)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BivectorError, NotNull
from .tolerances import DEGENERACY_TOL, NULL_TOL


@dataclass(frozen=True)
class FourMomentum:
    """Contravariant components (p0, p1, p2, p3).

    The lowered components are (-p0, p1, p2, p3).  Construction only checks
    finiteness; use :meth:`require_null` where a physical photon momentum is
    needed.
    """

    p0: float
    p1: float
    p2: float
    p3: float

    def __post_init__(self):
        for name in ("p0", "p1", "p2", "p3"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise BivectorError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_array(cls, values) -> FourMomentum:
        v = [float(x) for x in values]
        if len(v) != 4:
            raise BivectorError(f"expected 4 components, got {len(v)}")
        return cls(*v)

    @classmethod
    def from_direction(cls, direction, energy: float) -> FourMomentum:
        """Exactly null momentum of the given energy along ``direction``."""
        d = np.asarray(direction, dtype=float)
        norm = float(np.linalg.norm(d))
        if d.shape != (3,) or norm == 0.0:
            raise BivectorError("direction must be a non-zero 3-vector")
        if not energy > 0:
            raise BivectorError("energy must be positive")
        d = d / norm * energy
        return cls(energy, d[0], d[1], d[2])

    @classmethod
    def from_spherical(cls, theta: float, phi: float, energy: float = 1.0) -> FourMomentum:
        """p1 = p0 cos(phi) sin(theta), p2 = p0 sin(phi) sin(theta), p3 = p0 cos(theta)."""
        return cls(
            energy,
            energy * math.cos(phi) * math.sin(theta),
            energy * math.sin(phi) * math.sin(theta),
            energy * math.cos(theta),
        )

    def __iter__(self):
        return iter((self.p0, self.p1, self.p2, self.p3))

    def __getitem__(self, mu: int) -> float:
        return (self.p0, self.p1, self.p2, self.p3)[mu]

    @property
    def array(self) -> np.ndarray:
        return np.array([self.p0, self.p1, self.p2, self.p3])

    @property
    def spatial(self) -> np.ndarray:
        return np.array([self.p1, self.p2, self.p3])

    @property
    def lowered(self) -> np.ndarray:
        return np.array([-self.p0, self.p1, self.p2, self.p3])

    def spatial_norm(self) -> float:
        return math.sqrt(self.p1**2 + self.p2**2 + self.p3**2)

    def mass_shell_residual(self) -> float:
        """|p0^2 - |p|^2| / p0^2."""
        if self.p0 == 0.0:
            return math.inf
        return abs(self.p0**2 - (self.p1**2 + self.p2**2 + self.p3**2)) / self.p0**2

    def is_null(self, tol: float = NULL_TOL) -> bool:
        return self.mass_shell_residual() <= tol

    def require_null(self, tol: float = NULL_TOL) -> FourMomentum:
        if not self.p0 > 0:
            raise NotNull(f"energy must be positive, got p0={self.p0}")
        if not self.is_null(tol):
            raise NotNull(
                f"momentum {tuple(self)} is not null "
                f"(relative residual {self.mass_shell_residual():.3e} > {tol:.1e})"
            )
        return self

    def time_reflected(self) -> FourMomentum:
        return FourMomentum(-self.p0, self.p1, self.p2, self.p3)

    def space_reflected(self) -> FourMomentum:
        return FourMomentum(self.p0, -self.p1, -self.p2, -self.p3)

    def scaled(self, factor: float) -> FourMomentum:
        return FourMomentum(*(factor * x for x in self))


def _axis_index(axis: int) -> int:
    if axis not in (1, 2, 3):
        raise IndexError(f"spatial axis must be 1, 2 or 3, got {axis!r}")
    return axis


def boost_momentum(p: FourMomentum, axis: int, rapidity: float) -> FourMomentum:
    """Active boost of rapidity ``rapidity`` along ``axis``.

    p0' = cosh(k) p0 + sinh(k) p_a,  p_a' = cosh(k) p_a + sinh(k) p0.
    """
    a = _axis_index(axis)
    c, s = math.cosh(rapidity), math.sinh(rapidity)
    v = list(p)
    v[0], v[a] = c * p[0] + s * p[a], c * p[a] + s * p[0]
    return FourMomentum(*v)


def rotation_matrix(axis: int, angle: float) -> np.ndarray:
    """Active right-handed SO(3) rotation about a coordinate axis."""
    a = _axis_index(axis) - 1
    c, s = math.cos(angle), math.sin(angle)
    j, k = (a + 1) % 3, (a + 2) % 3
    m = np.eye(3)
    m[j, j] = c
    m[k, k] = c
    m[j, k] = -s
    m[k, j] = s
    return m


def rotate_momentum(p: FourMomentum, axis: int, angle: float) -> FourMomentum:
    q = rotation_matrix(axis, angle) @ p.spatial
    return FourMomentum(p.p0, q[0], q[1], q[2])


def random_null_momentum(rng: np.random.Generator, *, margin: float = 0.0,
                         reject=None) -> FourMomentum:
    """Direction uniform on the sphere, energy log-uniform in [0.1, 10].

    Directions where any of the pairwise sums p_j^2 + p_k^2 (or the pairwise
    differences used by the symmetric bivector) fall below ``margin * p0^2``
    are redrawn, as is anything ``reject(p)`` flags.
    """
    while True:
        d = rng.normal(size=3)
        n = float(np.linalg.norm(d))
        if n < 1e-12:
            continue
        energy = float(np.exp(rng.uniform(np.log(0.1), np.log(10.0))))
        p = FourMomentum.from_direction(d / n, energy)
        if margin > 0.0 and _too_close_to_degenerate(p, margin):
            continue
        if reject is not None and reject(p):
            continue
        return p


def _too_close_to_degenerate(p: FourMomentum, margin: float) -> bool:
    _, p1, p2, p3 = p
    scale = margin * p.p0**2
    pair_sums = (p2**2 + p3**2, p1**2 + p3**2, p1**2 + p2**2)
    diffs = (p1 - p2) ** 2 + (p1 - p3) ** 2 + (p2 - p3) ** 2
    return min(pair_sums) < scale or diffs < scale


def check_degenerate(value: float, p: FourMomentum) -> bool:
    """True when a normalization denominator is numerically zero."""
    return value <= DEGENERACY_TOL * abs(p.p0)
