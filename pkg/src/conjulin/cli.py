"""Command-line front end.

Commands read dense Matrix Market files and write one JSON report. Exit
codes: 0 ok, 1 I/O or parse error, 3 irreducible, 4 infeasible,
5 not positive definite.
"""

import argparse
import json
import logging
import os
import sys

import numpy as np

from . import __version__
from .conjsys import ConjugateSystem
from .embedding import RealSystem, embed_solve, interlacing_report
from .errors import ConjulinError, NotPositiveDefinite
from .generate import KINDS, generate
from .mmio import atomic_write_text, read_matrix, write_matrix
from .numkernel import DEFAULT_TOL, Tolerance
from .reduction import is_reducible, reduce, reduction_matrices, solve

log = logging.getLogger("conjulin")

SCHEMA_VERSION = "1"
TOL_ENV = "CONJULIN_TOL"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_IRREDUCIBLE = 3
EXIT_INFEASIBLE = 4
EXIT_NOT_PD = 5

# residual_tol / rank_tol in the defaults; the single knob keeps this ratio
_RESIDUAL_RATIO = DEFAULT_TOL.residual_tol / DEFAULT_TOL.rank_tol


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def resolve_tolerance(flag_value=None, environ=None):
    """``--tol`` beats ``$CONJULIN_TOL`` beats the defaults.

    The knob sets ``rank_tol``; ``residual_tol`` follows at the default ratio.
    """
    environ = os.environ if environ is None else environ
    value = flag_value
    if value is None and environ.get(TOL_ENV):
        try:
            value = float(environ[TOL_ENV])
        except ValueError:
            raise UsageError(f"{TOL_ENV}={environ[TOL_ENV]!r} is not a number") from None
    if value is None:
        return DEFAULT_TOL
    try:
        return Tolerance(rank_tol=value, residual_tol=value * _RESIDUAL_RATIO, eig_tol=DEFAULT_TOL.eig_tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _num(x):
    return float(f"{float(x):.17g}")


def _cvec(v):
    return [[_num(c.real), _num(c.imag)] for c in np.asarray(v, dtype=np.complex128).reshape(-1)]


def _rvec(v):
    return [_num(c) for c in np.asarray(v, dtype=np.float64).reshape(-1)]


def _base_report(command, tol):
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "residual": 0.0,
        "tolerances": {
            "rank_tol": tol.rank_tol,
            "residual_tol": tol.residual_tol,
            "eig_tol": tol.eig_tol,
        },
    }


def _spectral_fields(rep):
    return {
        "eigenvalues": {"A": _rvec(rep.eig_A), "M": _rvec(rep.eig_M), "S": _rvec(rep.eig_S)},
        "condition_numbers": {"A": _num(rep.cond_A), "M": _num(rep.cond_M), "S": _num(rep.cond_S)},
        "interlacing": {
            "cauchy": rep.cauchy_ok,
            "schur": rep.schur_ok,
            "cond_M_le_A": rep.cond_M_le_A,
            "cond_S_le_A": rep.cond_S_le_A,
        },
        "padded": rep.padded,
    }


def _write_report(path, report):
    text = json.dumps(report, indent=2) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        atomic_write_text(path, text)


def _sibling(out, name):
    base = os.path.dirname(os.path.abspath(out)) if out not in (None, "-") else os.getcwd()
    return os.path.join(base, name)


def _load_system(args):
    return ConjugateSystem(read_matrix(args.M), read_matrix(args.N), read_matrix(args.p))


def _load_real(args):
    A = read_matrix(args.A)
    b = read_matrix(args.b) if getattr(args, "b", None) else np.zeros(A.shape[0])
    return RealSystem(A, b)


def cmd_reduce(args, tol):
    sys_ = _load_system(args)
    report = _base_report("reduce", tol)
    if not is_reducible(sys_.M, sys_.N, tol):
        report["reducible"] = False
        _write_report(args.out, report)
        return EXIT_IRREDUCIBLE
    cert = reduction_matrices(sys_.M, sys_.N, tol)
    red = reduce(sys_, cert)
    report["reducible"] = True
    report["row_set"] = list(cert.row_set)
    report["files"] = {k: f"{k}.mtx" for k in ("A", "b", "U", "V")}
    for name, arr in (("A", red.A), ("b", red.b), ("U", cert.U), ("V", cert.V)):
        write_matrix(_sibling(args.out, f"{name}.mtx"), arr, "complex")
    _write_report(args.out, report)
    return EXIT_OK


def cmd_solve(args, tol):
    sys_ = _load_system(args)
    res = solve(sys_, tol)
    sol = res.solutions
    report = _base_report("solve", tol)
    report.update(
        reducible=res.reducible,
        feasible=sol.feasible,
        particular=_cvec(sol.particular) if sol.feasible else None,
        kernel_basis=[_cvec(v) for v in sol.kernel_basis.T] if sol.feasible else [],
        span_field=sol.span_field.value,
        residual=_num(res.verification_residual),
    )
    _write_report(args.out, report)
    return EXIT_OK if sol.feasible else EXIT_INFEASIBLE


def cmd_embed(args, tol):
    real = _load_real(args)
    report = _base_report("embed", tol)
    try:
        sol = embed_solve(real, tol)
        spectral = interlacing_report(real, tol)
    except NotPositiveDefinite as exc:
        report["error"] = f"A is not positive definite: {exc}"
        _write_report(args.out, report)
        return EXIT_NOT_PD
    write_matrix(_sibling(args.out, "S.mtx"), sol.S, "complex")
    write_matrix(_sibling(args.out, "q.mtx"), sol.q, "complex")
    report.update(
        x=_rvec(sol.x),
        z=_cvec(sol.z),
        residual=_num(sol.residual),
        files={"S": "S.mtx", "q": "q.mtx"},
        **_spectral_fields(spectral),
    )
    _write_report(args.out, report)
    return EXIT_OK


def cmd_analyze(args, tol):
    real = _load_real(args)
    report = _base_report("analyze", tol)
    try:
        spectral = interlacing_report(real, tol)
    except NotPositiveDefinite as exc:
        report["error"] = f"A is not positive definite: {exc}"
        _write_report(args.out, report)
        return EXIT_NOT_PD
    report.update(_spectral_fields(spectral))
    _write_report(args.out, report)
    return EXIT_OK


def cmd_gen(args, tol):
    os.makedirs(args.out, exist_ok=True)
    for name, arr in generate(args.kind, args.n, args.seed, tol).items():
        path = os.path.join(args.out, f"{name}.mtx")
        write_matrix(path, arr)
        print(path)
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="conjulin", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--tol", type=float, default=None,
                       help=f"rank tolerance (residual tolerance scales with it); overrides ${TOL_ENV}")
        return p

    for name, func, help_ in (
        ("reduce", cmd_reduce, "reduce M z + N conj(z) = p to A z = b"),
        ("solve", cmd_solve, "solve M z + N conj(z) = p"),
    ):
        p = add(name, func, help_)
        p.add_argument("--M", required=True)
        p.add_argument("--N", required=True)
        p.add_argument("--p", required=True)
        p.add_argument("--out", required=True)

    p = add("embed", cmd_embed, "solve a real SPD system through the complex Schur system")
    p.add_argument("--A", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--out", required=True)

    p = add("analyze", cmd_analyze, "spectra, interlacing and condition numbers of a real SPD matrix")
    p.add_argument("--A", required=True)
    p.add_argument("--out", default=None, help="report path (stdout when omitted)")

    p = add("gen", cmd_gen, "write a deterministic random instance")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--out", required=True, help="output directory")
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        tol = resolve_tolerance(args.tol)
        return args.func(args, tol)
    except UsageError as exc:
        print(f"conjulin: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ConjulinError, ValueError) as exc:
        print(f"conjulin: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
