"""Geometric phase of polarization bivectors transported around rotation loops.

A loop starts at the axis-1 seed, goes out to ``p`` along the forward
(z_2-order) rotation sequence and returns along the inverse of the
reversed-order sequence.  Both legs end on the same direction, so the
returned state is the seed times a phase; that phase is
arctan(p2 p3 / (p0 p1)) for positive helicity and its negative for negative
helicity.  The enclosed solid angle supplies an independent geometric check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import NamedTuple

import numpy as np

from . import algebra
from .errors import DimensionLimit, NonProportionalReturn, ZeroOverlap
from .momentum import FourMomentum, check_degenerate, rotation_matrix
from .polarization import (
    PolarizationBivector,
    forward_rotation_sequence,
    reversed_rotation_sequence,
    seed_bivector,
    vector_seed,
    z_longitudinal,
)

RETURN_TOL = 1e-10
OVERLAP_FLOOR = 1e-6
MAX_SPIN = 4


@dataclass(frozen=True)
class RotationStep:
    axis: int
    angle: float

    def __post_init__(self):
        if self.axis not in (1, 2, 3):
            raise IndexError(f"rotation axis must be 1, 2 or 3, got {self.axis!r}")
        angle = float(self.angle)
        if not math.isfinite(angle):
            raise ValueError("rotation angle must be finite")
        object.__setattr__(self, "angle", angle)

    def operator(self) -> np.ndarray:
        return algebra.rotation_operator(self.axis, self.angle)

    def inverse(self) -> RotationStep:
        return RotationStep(self.axis, -self.angle)


@dataclass(frozen=True)
class HolonomyResult:
    phase: float
    residual: float
    solid_angle: float | None = None


class ClosedFormPhase(NamedTuple):
    """arctan(p2 p3 / (p0 p1)); ``limiting`` marks the p1 = 0 limit value."""

    phase: float
    limiting: bool


class SolidAngleComparison(NamedTuple):
    phase: float
    area: float
    ratio: float


def as_path(steps) -> list[RotationStep]:
    """Accept RotationStep objects or (axis, angle) pairs."""
    return [s if isinstance(s, RotationStep) else RotationStep(int(s[0]), s[1]) for s in steps]


def path_operator(path) -> np.ndarray:
    """Ordered product of the step operators, leftmost step leftmost."""
    ops = [s.operator() for s in as_path(path)]
    return reduce(np.matmul, ops, np.eye(4, dtype=complex))


def inverse_path(path) -> list[RotationStep]:
    return [s.inverse() for s in reversed(as_path(path))]


def transport(z: PolarizationBivector, path) -> PolarizationBivector:
    """Apply the path operator to ``z``.

    The path [(a1, t1), (a2, t2), ...] acts as
    exp(-i t1 S_a1) exp(-i t2 S_a2) ... z, i.e. each later step is taken about
    the axis as carried by the earlier ones.  This is the ordering under which
    [(2, beta), (3, gamma)] on the axis-1 seed yields z_2.  The momentum tag is
    rotated by the real spatial block of the same operator.
    """
    op = path_operator(path)
    rot = op[1:, 1:].real
    q = rot @ z.momentum.spatial
    p = FourMomentum(z.momentum.p0, q[0], q[1], q[2])
    return z.with_components(op @ z.components, basis=z.basis, momentum=p)


def extract_phase(reference, candidate) -> tuple[float, float]:
    """arg(conj(reference) . candidate) in (-pi, pi] and |1 - |r||."""
    a = reference.components if isinstance(reference, PolarizationBivector) else np.asarray(reference)
    b = candidate.components if isinstance(candidate, PolarizationBivector) else np.asarray(candidate)
    r = complex(np.vdot(a, b))
    if abs(r) < OVERLAP_FLOOR:
        raise ZeroOverlap(f"overlap {abs(r):.3e} is below {OVERLAP_FLOOR:.0e}")
    return wrap_phase(math.atan2(r.imag, r.real)), abs(1.0 - abs(r))


def wrap_phase(angle: float) -> float:
    wrapped = math.remainder(angle, 2.0 * math.pi)
    return math.pi if wrapped <= -math.pi else wrapped


def loop_paths(p: FourMomentum, reverse: bool = False) -> tuple[list[RotationStep], list[RotationStep]]:
    """(outbound, return) paths of the loop through ``p``."""
    p.require_null()
    fwd = as_path(forward_rotation_sequence(p, 1))
    rev = as_path(reversed_rotation_sequence(p, 1))
    if reverse:
        return rev, inverse_path(fwd)
    return fwd, inverse_path(rev)


def _run_loop(start: PolarizationBivector, p: FourMomentum, reverse: bool) -> HolonomyResult:
    out, back = loop_paths(p, reverse)
    final = transport(transport(start, out), back)
    phase, residual = extract_phase(start, final)
    if residual > RETURN_TOL or np.linalg.norm(final.components - np.exp(1j * phase) * start.components) > RETURN_TOL:
        raise NonProportionalReturn(f"returned state is not a phase multiple of the start (residual {residual:.3e})")
    return HolonomyResult(phase, residual)


def loop_phase(p: FourMomentum, helicity: int = 1, reverse: bool = False) -> HolonomyResult:
    """Phase gathered by the axis-1 seed around the loop through ``p``."""
    return _run_loop(seed_bivector(1, helicity), p, reverse)


def longitudinal_loop_phase(p: FourMomentum, reverse: bool = False) -> HolonomyResult:
    """Same loop for the vector seed; the outbound leg must land on z_T(p)."""
    start = vector_seed(1)
    out, _ = loop_paths(p, reverse)
    mid = transport(start, out)
    gap = float(np.linalg.norm(mid.components - z_longitudinal(p).components))
    if gap > RETURN_TOL:
        raise NonProportionalReturn(f"outbound leg misses z_T(p) by {gap:.3e}")
    return _run_loop(start, p, reverse)


def closed_form_phase(p: FourMomentum) -> ClosedFormPhase:
    """arctan(p2 p3 / (p0 p1)).

    At p1 = 0 with p2 p3 != 0 the ratio diverges; the approached value
    sign(p2 p3) pi/2 (for p1 -> 0+) is returned and flagged.
    """
    num = p.p2 * p.p3
    den = p.p0 * p.p1
    if check_degenerate(abs(p.p1), p):
        if num == 0.0:
            return ClosedFormPhase(0.0, False)
        return ClosedFormPhase(math.copysign(math.pi / 2.0, num), True)
    return ClosedFormPhase(math.atan(num / den), False)


def spherical_phase(theta: float, phi: float) -> float:
    """arctan(cos(theta) tan(phi)) for p = p0 (cos phi sin theta, sin phi sin theta, cos theta)."""
    return math.atan(math.cos(theta) * math.tan(phi))


def spin_n_phase(p: FourMomentum, n: int, helicity: int = 1) -> float:
    """Loop phase of the n-fold tensor power of the seed; equals n times the spin-one phase."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if n > MAX_SPIN:
        raise DimensionLimit(f"n={n} would need a {4 ** n}-component state; limit is n={MAX_SPIN}")
    out, back = loop_paths(p)
    seed = seed_bivector(1, helicity).components
    state = reduce(np.kron, [seed] * n)
    final = state
    for leg in (out, back):
        leg_op = np.eye(4 ** n, dtype=complex)
        for step in leg:
            leg_op = leg_op @ reduce(np.kron, [step.operator()] * n)
        final = leg_op @ final
    phase, residual = extract_phase(state, final)
    if residual > RETURN_TOL:
        raise NonProportionalReturn(f"spin-{n} loop residual {residual:.3e}")
    return phase


# -- solid angle -------------------------------------------------------------

def trace_path(path, start, samples_per_step: int) -> np.ndarray:
    """Points swept by ``start`` along the path, each step refined into segments.

    For step k the point is R_1 ... R_{k-1} R_k(t angle_k) start, t in [0, 1],
    matching the operator ordering of :func:`transport`.  The first point is
    ``start`` itself.
    """
    start = np.asarray(start, dtype=float)
    points = [start]
    prefix = np.eye(3)
    for step in as_path(path):
        for t in np.linspace(0.0, 1.0, samples_per_step + 1)[1:]:
            points.append(prefix @ rotation_matrix(step.axis, t * step.angle) @ start)
        prefix = prefix @ rotation_matrix(step.axis, step.angle)
    return np.array(points)


def loop_polygon(p: FourMomentum, samples_per_step: int = 2500, reverse: bool = False) -> np.ndarray:
    """Closed polygon on the unit sphere traced by the momentum direction."""
    p.require_null()
    e1 = np.array([1.0, 0.0, 0.0])
    fwd = trace_path(forward_rotation_sequence(p, 1), e1, samples_per_step)
    rev = trace_path(reversed_rotation_sequence(p, 1), e1, samples_per_step)
    loop = np.vstack([fwd, rev[::-1][1:]])
    return loop[::-1] if reverse else loop


def signed_spherical_area(polygon: np.ndarray) -> float:
    """Oriented area of a closed spherical polygon by a centroid fan.

    Each fan triangle contributes its signed excess
    E = 2 atan2(a.(b x c), 1 + a.b + b.c + c.a); the sum is compensated.
    """
    pts = np.asarray(polygon, dtype=float)
    if np.allclose(pts[0], pts[-1]):
        pts = pts[:-1]
    centre = pts.sum(axis=0)
    centre /= np.linalg.norm(centre)
    b = pts
    c = np.roll(pts, -1, axis=0)
    a = np.broadcast_to(centre, b.shape)
    triple = np.einsum("ij,ij->i", a, np.cross(b, c))
    denom = 1.0 + b @ centre + np.einsum("ij,ij->i", b, c) + c @ centre
    return math.fsum(2.0 * np.arctan2(triple, denom))


def solid_angle_check(theta: float, phi: float, reverse: bool = False,
                      samples_per_step: int = 2500) -> SolidAngleComparison:
    """Compare the loop phase at spherical (theta, phi) with its enclosed area.

    The area is oriented so that it equals the phase; traversing the loop the
    other way negates both.  ``ratio`` is phase / area (nan for zero area).
    """
    p = FourMomentum.from_spherical(theta, phi)
    phase = loop_phase(p, 1, reverse=reverse).phase
    polygon = loop_polygon(p, samples_per_step, reverse=reverse)
    area = wrap_phase(-signed_spherical_area(polygon))
    ratio = phase / area if area != 0.0 else math.nan
    return SolidAngleComparison(phase, area, ratio)
