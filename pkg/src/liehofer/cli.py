"""Command-line surface: reproducible JSON reports over all modules.

Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error.
Exact rationals are serialized as "p/q" strings; floats are fixed at 12
significant digits so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import hofer, loop_morse, quantum_cp1, su2_loops, verify
from .circle_index import CircleSubgroup, index_equality_report, weights_at_max
from .errors import LieHoferError, UnsupportedSystem
from .root_system import from_label


def _fmt(value):
    """Normalize values for deterministic JSON output."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return float(f"{value:.12g}")
    if isinstance(value, (list, tuple)):
        return [_fmt(v) for v in value]
    if isinstance(value, dict):
        return {k: _fmt(v) for k, v in value.items()}
    return value


def _emit(payload, out_path=None):
    text = json.dumps(_fmt(payload), indent=2)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    print(text)


def _parse_xi(system, text):
    coords = [int(x) for x in text.split(",")]
    return system.coweight(coords)


def _cmd_index(args):
    system = from_label(args.system)
    gamma = CircleSubgroup(_parse_xi(system, args.xi))
    report = index_equality_report(gamma)
    _emit(
        {
            "command": "index",
            "system": system.label,
            "xi": list(gamma.xi.coords),
            "regular": gamma.regular,
            "weights": list(report.weights.weights),
            "virtual_index": report.virtual_index,
            "riemannian_index": report.riemannian_index,
            "agree": report.agree,
            "units": {
                "virtual_index": "dimensionless",
                "riemannian_index": "dimensionless",
            },
        },
        args.out,
    )
    return 0


def _cmd_weights(args):
    system = from_label(args.system)
    gamma = CircleSubgroup(_parse_xi(system, args.xi))
    _emit(
        {
            "command": "weights",
            "system": system.label,
            "xi": list(gamma.xi.coords),
            "regular": gamma.regular,
            "weights": list(weights_at_max(gamma).weights),
            "units": {"weights": "dimensionless"},
        },
        args.out,
    )
    return 0


def _cmd_hofer(args):
    system = from_label(args.system)
    xi = _parse_xi(system, args.xi)
    length = hofer.hofer_length_circle(xi)
    payload = {
        "command": "hofer",
        "system": system.label,
        "xi": list(xi.coords),
        "length_squared": length.value_squared,
        "length": length.value_float,
        "units": {
            "length_squared": "lattice-units",
            "length": "lattice-units",
        },
    }
    if args.eta:
        eta = _parse_xi(system, args.eta)
        m, norm = hofer.positive_norm(eta, xi)
        payload.update(
            {
                "eta": list(eta.coords),
                "orbit_maximum": m,
                "positive_norm_squared": norm.value_squared,
                "positive_norm": norm.value_float,
                "norm_inequality_holds": hofer.check_norm_inequality(eta, xi),
            }
        )
        payload["units"].update(
            {
                "orbit_maximum": "lattice-units",
                "positive_norm_squared": "lattice-units",
                "positive_norm": "lattice-units",
            }
        )
    _emit(payload, args.out)
    return 0


def _cmd_omega_series(args):
    system = from_label(args.system)
    series = loop_morse.omega_g_series(system, args.cutoff, check=False)
    oracle = loop_morse.transgression_series(system, args.cutoff)
    match = series.coeffs == oracle.coeffs
    _emit(
        {
            "command": "omega-series",
            "system": system.label,
            "cutoff": args.cutoff,
            "coefficients": list(series.coeffs),
            "oracle": list(oracle.coeffs),
            "match": match,
            "units": {"coefficients": "dimensionless", "oracle": "dimensionless"},
        },
        args.out,
    )
    return 0 if match else 1


def _cmd_hessian(args):
    report = su2_loops.hessian_spectrum(
        args.functional, args.m, args.n, h=args.h, tol=args.tol
    )
    _emit(
        {
            "command": "hessian-su2",
            "functional": report.functional,
            "m": report.m,
            "n": report.n,
            "negative_count": report.negative_count,
            "zero_count": report.zero_count,
            "positive_count": report.positive_count,
            "min_eigenvalue": report.min_eigenvalue,
            "max_eigenvalue": report.max_eigenvalue,
            "tolerance": report.tolerance,
            "step": report.step,
            "units": {
                "negative_count": "dimensionless",
                "zero_count": "dimensionless",
                "positive_count": "dimensionless",
                "min_eigenvalue": "lattice-units",
                "max_eigenvalue": "lattice-units",
            },
        },
        args.out,
    )
    return 0


def _cmd_seidel(args):
    a1 = from_label("A1")
    xi = a1.coweight([args.xi])
    length = hofer.hofer_length_circle(xi)
    report = quantum_cp1.psi_leading(
        length.value_float, args.sign, area=args.area
    )
    _emit(
        {
            "command": "seidel-cp1",
            "xi": [args.xi],
            "area": args.area,
            "sign": report.sign,
            "leading_basis": quantum_cp1.PT,
            "leading_exponent": report.exponent,
            "l_plus_squared": length.value_squared,
            "nonzero": report.nonzero,
            "invertible": report.invertible,
            "corrections": [
                {"coefficient": c, "basis": b, "exponent": e}
                for c, b, e in report.corrections
            ],
            "units": {
                "leading_exponent": "lattice-units",
                "l_plus_squared": "lattice-units",
                "area": "lattice-units",
            },
        },
        args.out,
    )
    return 0


def _cmd_verify(args):
    labels = (
        list(verify.ALL_SYSTEMS)
        if args.systems == "all"
        else [s.strip() for s in args.systems.split(",")]
    )
    for label in labels:
        from_label(label)  # validate before running anything
    names = [c.strip() for c in args.checks.split(",")] if args.checks else None
    if names:
        unknown = [n for n in names if n not in verify.CHECKS]
        if unknown:
            raise UnsupportedSystem(f"unknown checks: {', '.join(unknown)}")
    results = verify.run_checks(labels, args.box, names)
    all_pass = all(r["pass"] for r in results.values())
    _emit(
        {
            "command": "verify",
            "systems": labels,
            "coordinate_box": args.box,
            "checks": results,
            "all_pass": all_pass,
            "units": {"coordinate_box": "dimensionless"},
        },
        args.out,
    )
    return 0 if all_pass else 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="liehofer",
        description="Exact circle-subgroup indices, Hofer lengths, loop-group "
        "Morse series and SU(2) Hessian numerics on coadjoint orbits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--out", help="also write the JSON report to this path")
        p.set_defaults(fn=fn)
        return p

    p = add("index", _cmd_index, help="virtual vs Riemannian index of a circle subgroup")
    p.add_argument("--system", required=True, help="root system label, e.g. A1")
    p.add_argument("--xi", required=True, help="comma-separated coweight coordinates")

    p = add("weights", _cmd_weights, help="weights at the moment-map maximum")
    p.add_argument("--system", required=True)
    p.add_argument("--xi", required=True)

    p = add("hofer", _cmd_hofer, help="Hofer length and positive norms")
    p.add_argument("--system", required=True)
    p.add_argument("--xi", required=True)
    p.add_argument("--eta", help="second coweight for the positive norm")

    p = add("omega-series", _cmd_omega_series, help="loop-group Poincare series vs oracle")
    p.add_argument("--system", required=True)
    p.add_argument("--cutoff", type=int, default=12)

    p = add("hessian-su2", _cmd_hessian, help="finite-difference Hessian spectrum on SU(2)")
    p.add_argument("--m", type=int, required=True, help="winding number")
    p.add_argument("--n", type=int, default=64, help="loop resolution")
    p.add_argument("--functional", choices=("energy", "lplus"), default="energy")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--h", type=float, default=1e-4, help="finite-difference step")

    p = add("seidel-cp1", _cmd_seidel, help="leading quantum term for an A1 circle")
    p.add_argument("--xi", type=int, required=True, help="A1 coweight coordinate")
    p.add_argument("--area", type=float, default=1.0, help="symplectic area of the line")
    p.add_argument("--sign", type=int, choices=(1, -1), default=1)

    p = add("verify", _cmd_verify, help="run the cross-module verification suite")
    p.add_argument("--box", type=int, default=4, help="coordinate bound for sweeps")
    p.add_argument("--systems", default="all")
    p.add_argument("--checks", help="comma-separated subset of: " + ", ".join(verify.CHECKS))

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UnsupportedSystem, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LieHoferError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
