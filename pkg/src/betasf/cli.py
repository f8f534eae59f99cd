"""Command-line entry point.

Subcommands cover the derivation pipeline (derive-ode), series extraction
(series), moment-coefficient solving (structure-coeff), spectral form
factor curves (sff), scaling-limit rate studies (scaling), and the named
verification suites (verify).  Symbolic results are emitted as canonical
JSON so identical commands produce byte-identical output; curves are CSV.

Every run writes a manifest recording the resolved inputs, tolerances, and
library versions next to its results; command_from_manifest rebuilds the
argument list so a run can be reproduced from the manifest alone.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy
import scipy

from . import __version__
from .errors import BetasfError
from .exact.jsonform import (
    dumps_canonical,
    operator_to_data,
    pipoly_to_data,
    series_to_data,
)
from .numerics import AccuracyPolicy, sff_curve, write_csv
from .selberg import (
    beta8_displayed_coefficients,
    bulk_limit,
    bulk_operator,
    eliminate,
    fourier_operator_beta4,
    fourier_side,
    specialize_circular,
)
from .series_analysis import (
    asymptotic_nonoscillatory,
    frobenius,
    indicial_roots,
    oscillatory_exponents,
)
from .structure import (
    arguments_interlace,
    k8_coefficient,
    solve_k10,
    zeros_on_unit_circle,
)
from .verification import SUITES, run_suite, suite_passed

_REFERENCE_BETAS = (2, 4, 6)


def _policy(args) -> AccuracyPolicy:
    return AccuracyPolicy(abs_tol=args.tol, rel_tol=args.tol)


def _format_float(value: float, precision: int) -> float:
    return float(f"{value:.{precision}g}")


def _write_output(args, text: str) -> None:
    if args.out_file:
        with open(args.out_file, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _manifest_path(args) -> str:
    if args.manifest:
        return args.manifest
    if args.out_file:
        return args.out_file + ".manifest.json"
    return f"betasf-{args.subcommand}.manifest.json"


_GLOBAL_KEYS = ("precision", "tol", "out_file", "manifest")


def _emit_manifest(args) -> None:
    arguments = {
        k: v
        for k, v in vars(args).items()
        if k not in ("subcommand", "func") and v is not None
    }
    manifest = {
        "package_version": __version__,
        "subcommand": args.subcommand,
        "arguments": arguments,
        "tolerances": {"abs_tol": args.tol, "rel_tol": args.tol},
        "versions": {
            "python": ".".join(str(v) for v in sys.version_info[:3]),
            "numpy": numpy.__version__,
            "scipy": scipy.__version__,
        },
    }
    with open(_manifest_path(args), "w") as fh:
        fh.write(dumps_canonical(manifest))


def command_from_manifest(path: str) -> list:
    """Reconstruct the argv list that reproduces a manifest's run.

    Global flags precede the subcommand token, matching the parser layout.
    """
    with open(path) as fh:
        manifest = json.load(fh)
    arguments = manifest["arguments"]
    argv = []
    for key in _GLOBAL_KEYS:
        if arguments.get(key) is not None:
            argv.extend([f"--{key.replace('_', '-')}", str(arguments[key])])
    argv.append(manifest["subcommand"])
    special = {"finite_n": "--finite-N"}
    for key, value in sorted(arguments.items()):
        if key in _GLOBAL_KEYS:
            continue
        flag = special.get(key, "--" + key.replace("_", "-"))
        if value is True:
            argv.append(flag)
        elif value is False:
            continue
        else:
            argv.extend([flag, str(value)])
    return argv


# -- derive-ode --------------------------------------------------------------


def _cmd_derive_ode(args) -> int:
    beta = args.beta
    if beta % 2 or beta < 2:
        raise BetasfError("derivation requires positive even beta")
    if args.finite_n and args.fourier:
        raise BetasfError("--finite-N and --fourier are mutually exclusive")
    result = eliminate(specialize_circular(beta))
    if args.finite_n:
        op = result.operator
    else:
        op = bulk_limit(result.operator)
        if args.fourier:
            op = fourier_side(op).normalize()
    payload = {"beta": beta, "operator": operator_to_data(op)}
    exit_code = 0
    if args.check_paper:
        matched = _check_paper(beta, op, args)
        payload["check_paper"] = matched
        if not matched:
            exit_code = 1
    _write_output(args, dumps_canonical(payload))
    return exit_code


def _check_paper(beta: int, op, args) -> bool:
    if args.finite_n:
        raise BetasfError("no embedded reference for the finite-N operator")
    if args.fourier:
        if beta != 4:
            raise BetasfError("embedded Fourier reference exists for beta=4 only")
        return op.normalize() == fourier_operator_beta4().normalize()
    if beta in _REFERENCE_BETAS:
        return op == bulk_operator(beta)
    if beta == 8:
        displayed = beta8_displayed_coefficients()
        return all(op.coefficient(j) == c for j, c in displayed.items())
    raise BetasfError(f"no embedded reference operator for beta={beta}")


# -- series ------------------------------------------------------------------


def _cmd_series(args) -> int:
    beta = args.beta
    if beta % 2 or beta < 2:
        raise BetasfError("series extraction requires positive even beta")
    op = bulk_limit(eliminate(specialize_circular(beta)).operator)
    if args.at == "zero":
        data = indicial_roots(op)
        payload = {
            "beta": beta,
            "at": "zero",
            "indicial_roots": [str(r) for r in data.roots],
        }
        if args.exponent is not None:
            rho = Fraction(args.exponent)
            series = frobenius(op, rho, args.terms)
            payload["series"] = series_to_data(series)
    else:
        expansion = asymptotic_nonoscillatory(op, args.terms)
        payload = {
            "beta": beta,
            "at": "infinity",
            "tail_c": [pipoly_to_data(c) for c in expansion.c],
            "oscillatory_exponents": [
                {"frequency": e.frequency, "decay": str(e.decay)}
                for e in oscillatory_exponents(op)
            ],
        }
    _write_output(args, dumps_canonical(payload))
    return 0


# -- structure-coeff ---------------------------------------------------------


def _cmd_structure_coeff(args) -> int:
    if args.order == 8:
        if args.beta is not None:
            value = k8_coefficient(Fraction(args.beta) / 2)
            payload = {"order": 8, "beta": args.beta, "value": pipoly_to_data(value)}
        else:
            from .selberg import K8_FACTOR

            payload = {"order": 8, "factor": [str(c) for c in K8_FACTOR]}
    else:
        solved = solve_k10()
        payload = {"order": 10, "factor": [str(c) for c in solved.b]}
        if args.beta is not None:
            value = solved.full_value(Fraction(args.beta) / 2)
            payload["beta"] = args.beta
            payload["value"] = pipoly_to_data(value)
    exit_code = 0
    if args.check_zeros:
        from .selberg import K8_FACTOR, K10_FACTOR

        inner = zeros_on_unit_circle(K8_FACTOR)
        outer = zeros_on_unit_circle(K10_FACTOR)
        interlaced = arguments_interlace(
            inner.upper_half_arguments(), outer.upper_half_arguments()
        )
        payload["zeros"] = {
            "max_modulus_deviation_8": inner.max_modulus_deviation,
            "max_modulus_deviation_10": outer.max_modulus_deviation,
            "interlaced": interlaced,
        }
        if not (inner.on_unit_circle and outer.on_unit_circle and interlaced):
            exit_code = 1
    _write_output(args, dumps_canonical(payload))
    return exit_code


# -- sff ---------------------------------------------------------------------


def _cmd_sff(args) -> int:
    curve = sff_curve(args.n, args.kmax, args.points, _policy(args))
    if args.out == "csv":
        import io

        buffer = io.StringIO()
        write_csv(curve, buffer)
        _write_output(args, buffer.getvalue())
    else:
        p = args.precision
        payload = {
            "n": curve.n,
            "rows": [
                {key: _format_float(value, p) for key, value in row.items()}
                for row in curve.rows()
            ],
        }
        _write_output(args, dumps_canonical(payload))
    return 0


# -- scaling -----------------------------------------------------------------


def _parse_ladder(text: str) -> list:
    return [int(v) for v in text.split(",")]


def _cmd_scaling(args) -> int:
    from .numerics import (
        d1_error,
        d2_error,
        d3_error,
        fit_loglog_slope,
        global_d1,
        global_d2,
        global_d3,
        mpa,
        mpa_counting_error,
        mpb,
        mpb_finite_n,
        q1_quadrature,
        q3,
        q4,
        q5_value,
        soft_cov_quadrature,
    )

    policy = _policy(args)
    p = args.precision
    payload = {"regime": args.regime}

    def ladder_block(ns, errors):
        slope = fit_loglog_slope(ns, errors)
        return {
            "n": list(ns),
            "error": [_format_float(e, p) for e in errors],
            "fitted_slope": _format_float(slope, p),
        }

    if args.regime == "global":
        if args.tau1 is None:
            raise BetasfError("--tau1 is required for the global regime")
        ns = _parse_ladder(args.ladder or "8,16,32,64")
        if args.tau2 is not None:
            payload["limit"] = _format_float(global_d3(args.tau1, args.tau2), p)
            errors = [d3_error(n, args.tau1, args.tau2, policy) for n in ns]
            payload["covariance"] = ladder_block(ns, errors)
        else:
            payload["limit"] = {
                "mean_density": _format_float(global_d1(args.tau1), p),
                "variance": _format_float(global_d2(args.tau1), p),
            }
            payload["mean_density"] = ladder_block(
                ns, [d1_error(n, args.tau1) for n in ns]
            )
            payload["variance"] = ladder_block(
                ns, [d2_error(n, args.tau1, policy) for n in ns]
            )
    elif args.regime == "bulk":
        if args.tau is None:
            raise BetasfError("--tau is required for the bulk regime")
        ns = _parse_ladder(args.ladder or "8,16,32,64")
        if args.gamma is not None:
            target = mpb(args.tau, args.gamma)
            payload["limit"] = _format_float(target, p)
            errors = [
                abs(mpb_finite_n(n, args.tau, args.gamma, policy) - target)
                for n in ns
            ]
            payload["tilted"] = ladder_block(ns, errors)
        else:
            payload["limit"] = _format_float(mpa(args.tau), p)
            errors = [mpa_counting_error(n, args.tau, policy) for n in ns]
            payload["counting"] = ladder_block(ns, errors)
    else:
        if args.gamma is None:
            raise BetasfError("--gamma is required for the soft regime")
        if args.gamma2 is not None:
            value = soft_cov_quadrature(args.gamma, args.gamma2, policy)
            closed = q4(args.gamma, args.gamma2)
            payload["covariance"] = {
                "quadrature": _format_float(value, p),
                "closed_form": _format_float(closed, p),
                "residual": _format_float(abs(value - closed), p),
            }
        else:
            value = q1_quadrature(args.gamma, policy)
            closed = q3(args.gamma)
            ns = _parse_ladder(args.ladder or "200,400,800")
            payload["mean"] = {
                "quadrature": _format_float(value, p),
                "closed_form": _format_float(closed, p),
                "residual": _format_float(abs(value - closed), p),
            }
            payload["finite_n_gap"] = {
                "n": list(ns),
                "gap": [
                    _format_float(abs(q5_value(n, args.gamma) - closed), p)
                    for n in ns
                ],
            }
    _write_output(args, dumps_canonical(payload))
    return 0


# -- verify ------------------------------------------------------------------


def _cmd_verify(args) -> int:
    results = run_suite(args.suite, _policy(args))
    lines = []
    for r in results:
        flag = "PASS" if r.passed else "FAIL"
        lines.append(f"[{flag}] {r.name}: {r.value:.3e} (tol {r.tolerance:.1e})")
    ok = suite_passed(results)
    lines.append(
        f"suite {args.suite}: {'PASS' if ok else 'FAIL'} "
        f"({sum(r.passed for r in results)}/{len(results)} checks)"
    )
    _write_output(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betasf",
        description="Bulk correlation ODEs and structure-function numerics.",
    )
    parser.add_argument(
        "--precision",
        type=int,
        default=17,
        help="significant digits for numeric JSON output",
    )
    parser.add_argument(
        "--tol", type=float, default=1e-10, help="quadrature tolerance"
    )
    parser.add_argument("--out-file", help="write results here instead of stdout")
    parser.add_argument("--manifest", help="manifest path override")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("derive-ode", help="derive the scalar operator for even beta")
    p.add_argument("--beta", type=int, required=True)
    p.add_argument(
        "--finite-N", dest="finite_n", action="store_true",
        help="emit the finite-N operator in z instead of the bulk limit",
    )
    p.add_argument(
        "--fourier", action="store_true",
        help="emit the Fourier-side operator in k",
    )
    p.add_argument(
        "--check-paper", dest="check_paper", action="store_true",
        help="compare against the embedded reference and fail on mismatch",
    )
    p.set_defaults(func=_cmd_derive_ode)

    p = sub.add_parser("series", help="series data of the bulk operator")
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--at", choices=("zero", "infinity"), required=True)
    p.add_argument("--exponent", help="Frobenius exponent, e.g. 2 or -7/3")
    p.add_argument("--terms", type=int, default=8)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("structure-coeff", help="moment coefficient factors")
    p.add_argument("--order", type=int, choices=(8, 10), required=True)
    p.add_argument("--beta", type=int)
    p.add_argument(
        "--check-zeros", dest="check_zeros", action="store_true",
        help="verify the factors' zeros lie on the unit circle and interlace",
    )
    p.set_defaults(func=_cmd_structure_coeff)

    p = sub.add_parser("sff", help="spectral form factor curve")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmax", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_sff)

    p = sub.add_parser("scaling", help="scaling-limit values and rate ladders")
    p.add_argument("--regime", choices=("global", "bulk", "soft"), required=True)
    p.add_argument("--tau", type=float)
    p.add_argument("--tau1", type=float)
    p.add_argument("--tau2", type=float)
    p.add_argument("--gamma", type=float)
    p.add_argument("--gamma2", type=float)
    p.add_argument("--ladder", help="comma-separated n values")
    p.set_defaults(func=_cmd_scaling)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        exit_code = args.func(args)
    except BetasfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit_manifest(args)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
