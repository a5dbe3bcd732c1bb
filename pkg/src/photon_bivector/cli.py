"""Command-line front end.

Commands print a JSON report (or CSV with ``--format csv``) and exit with
0 when every check passes, 1 on a failed check, 2 on a usage error, 3 on
invalid input and 4 on a degenerate direction.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import holonomy, polarization, wavepacket
from .errors import BivectorError, DegenerateDirection, NotTransverse
from .momentum import FourMomentum
from .report import RunReport
from .suites import SUITES, run_suite
from .tolerances import Tolerances

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INVALID, EXIT_DEGENERATE = 0, 1, 2, 3, 4


class InvalidInput(BivectorError):
    pass


def _float_list(text: str, n: int, what: str) -> list[float]:
    try:
        values = [float(x) for x in text.split(",")]
    except ValueError:
        raise InvalidInput(f"{what} must be {n} comma-separated numbers, got {text!r}") from None
    if len(values) != n or not all(math.isfinite(v) for v in values):
        raise InvalidInput(f"{what} must be {n} comma-separated finite numbers, got {text!r}")
    return values


def _momentum(args) -> FourMomentum:
    if args.p is not None and args.direction is not None:
        raise InvalidInput("give either --p or --direction, not both")
    if args.direction is not None:
        if args.energy is None:
            raise InvalidInput("--direction needs --energy")
        return FourMomentum.from_direction(_float_list(args.direction, 3, "--direction"), args.energy)
    if args.p is None:
        raise InvalidInput("a momentum is required: --p p0,p1,p2,p3 or --direction x,y,z --energy E")
    return FourMomentum.from_array(_float_list(args.p, 4, "--p")).require_null()


def _tolerances(args) -> Tolerances:
    return Tolerances(args.tol_exact, args.tol_transcendental, args.tol_quadrature)


def cmd_verify(args) -> RunReport:
    return run_suite(args.suite, seed=args.seed, samples=args.samples, tolerances=_tolerances(args))


def cmd_polarize(args) -> RunReport:
    p = _momentum(args)
    tol = _tolerances(args)
    z = polarization.build(p, args.basis, args.helicity)
    report = RunReport("polarize", inputs={"p": p.array, "basis": args.basis, "helicity": args.helicity})
    report.results["components"] = z.components
    try:
        amps = polarization.decompose(z, tol.transcendental)
        report.results["ePart"] = amps.e_part
        report.results["bPart"] = amps.b_part
    except NotTransverse:
        pass
    report.bound("equation_residual", polarization.equation_residual(z) / p.p0, tol.transcendental)
    report.bound("helicity_residual", polarization.helicity_residual(z), tol.transcendental)
    report.close("norm", 1.0, z.norm(), tol.transcendental)
    zt = polarization.z_longitudinal(p)
    if z.basis.transverse:
        report.bound("time_component", abs(z.time_component), tol.transcendental)
        report.bound("self_bilinear", abs(polarization.bilinear(z, z)), tol.transcendental)
        partner = zt if z.helicity == 1 else zt.conjugate()
        report.bound("orthogonal_to_zT", abs(polarization.inner_product(partner, z)), tol.transcendental)
        report.bound("orthogonal_to_conjugate", abs(polarization.inner_product(z, z.conjugate())),
                     tol.transcendental)
    return report


def cmd_holonomy(args) -> RunReport:
    p = _momentum(args)
    result = holonomy.loop_phase(p, args.helicity)
    closed = holonomy.closed_form_phase(p)
    expected = args.helicity * closed.phase
    report = RunReport("holonomy", inputs={"p": p.array, "helicity": args.helicity, "spin": args.spin})
    report.results["loopPhase"] = result.phase
    report.results["closedFormPhase"] = expected
    report.results["closedFormLimiting"] = closed.limiting
    report.results["residual"] = result.residual
    report.bound("return_residual", result.residual, holonomy.RETURN_TOL)
    report.close("loop_vs_closed_form", expected, result.phase, holonomy.RETURN_TOL)
    if args.spin != 1:
        spin_phase = holonomy.spin_n_phase(p, args.spin, args.helicity)
        report.results["spinPhase"] = spin_phase
        report.close("spin_scaling", holonomy.wrap_phase(args.spin * result.phase), spin_phase, 1e-9)
    return report


def cmd_envelope(args) -> RunReport:
    if not args.sigma > 0:
        raise InvalidInput(f"--sigma must be positive, got {args.sigma}")
    env = wavepacket.GaussianEnvelope.along_axis1(args.sigma)
    tol = _tolerances(args)
    n = args.occupation
    report = RunReport("envelope", inputs={"sigma": args.sigma, "mode": args.mode, "occupation": n})
    correction = wavepacket.envelope_correction(args.sigma)
    report.close("derivative_integral", correction, wavepacket.envelope_derivative_integral(args.sigma),
                 tol.quadrature)
    vec = wavepacket.vector_potential_momentum(env, n)
    biv = wavepacket.bivector_momentum(env, n)
    if args.mode in ("vector", "both"):
        report.results["vectorPotential"] = vec.per_mode
        quad = wavepacket.vector_potential_momentum_quadrature(env, n).per_mode
        scale = max(1.0, float(np.max(np.abs(vec.per_mode))))
        report.close("vector_potential_quadrature", vec.per_mode / scale, quad / scale, 1e-6)
    if args.mode in ("bivector", "both"):
        report.results["bivector"] = biv.per_mode
        quad = wavepacket.bivector_momentum_quadrature(env, n).per_mode
        report.close("bivector_quadrature", biv.per_mode, quad, 1e-6)
    report.results["gap"] = n * correction
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="photon-bivector", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--tol-exact", type=float, default=Tolerances.exact)
        p.add_argument("--tol-transcendental", type=float, default=Tolerances.transcendental)
        p.add_argument("--tol-quadrature", type=float, default=Tolerances.quadrature)

    def momentum_args(p):
        p.add_argument("--p", help="p0,p1,p2,p3")
        p.add_argument("--direction", help="x,y,z (builds an exactly null momentum)")
        p.add_argument("--energy", type=float)
        p.add_argument("--helicity", type=int, choices=(1, -1), default=1)

    v = sub.add_parser("verify", help="run an invariant suite")
    v.add_argument("--suite", choices=("all",) + SUITES, default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=None)
    common(v)
    v.set_defaults(func=cmd_verify)

    pol = sub.add_parser("polarize", help="construct a polarization bivector")
    momentum_args(pol)
    pol.add_argument("--basis", default="zS",
                     choices=[b.value for b in polarization.Basis
                              if b.value.startswith(("z", "y"))])
    common(pol)
    pol.set_defaults(func=cmd_polarize)

    hol = sub.add_parser("holonomy", help="loop phase for a momentum")
    momentum_args(hol)
    hol.add_argument("--spin", type=int, default=1)
    common(hol)
    hol.set_defaults(func=cmd_holonomy)

    env = sub.add_parser("envelope", help="wavelet envelope momenta")
    env.add_argument("--sigma", type=float, required=True)
    env.add_argument("--mode", choices=("vector", "bivector", "both"), default="both")
    env.add_argument("--occupation", type=float, default=1.0)
    common(env)
    env.set_defaults(func=cmd_envelope)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "samples", None) is not None and args.samples < 1:
        parser.error("--samples must be positive")
    try:
        report = args.func(args)
    except DegenerateDirection as exc:
        print(f"degenerate direction: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except BivectorError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(report.to_csv() if args.format == "csv" else report.to_json())
    return EXIT_OK if report.overall_pass else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
