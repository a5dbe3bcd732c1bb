from dataclasses import dataclass

# |p0^2 - |p|^2| <= NULL_TOL * p0^2 for a momentum to count as null.  Loose
# enough to accept seven-digit user input such as 1.7320508 for sqrt(3).
NULL_TOL = 1e-7

# Constructions are rejected when their normalization denominator falls
# below DEGENERACY_TOL * p0.
DEGENERACY_TOL = 1e-9


@dataclass(frozen=True)
class Tolerances:
    """Absolute tolerances used by the verification suites.

    ``exact`` applies to identities involving only arithmetic on the operator
    entries, ``transcendental`` to anything passing through trig/hyperbolic
    functions or an eigen-solver, ``quadrature`` to numerical integrals.
    """

    exact: float = 1e-14
    transcendental: float = 1e-12
    quadrature: float = 1e-8


DEFAULT_TOLERANCES = Tolerances()
