"""Command-line front end.

Exit status: 0 success / all checks passed, 1 a verification failed,
2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import genfun as gf
from . import spectra
from .family import MatrixKind, build, verify_companion_similarity, verify_structure
from .finite import GF
from .matrix import SingularMatrixError
from .numbers import DomainError, require_prime
from .report import SCHEMA_VERSION, CaseReport, RunReport
from .rings import QPHI, QQ

E_CAP = 64
EIGVEC_N_MAX = 10
DEFAULT_N_MAX = {"structure": 24, "spectrum": 20, "mod3": 48, "mod5": 48, "power": 12, "genfun": 10}
DEFAULT_PRIMES = (2, 3, 7, 13, 17, 23)
SUITES = ("structure", "spectrum", "mod3", "mod5", "power", "genfun")


class UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _ring(args, kind: MatrixKind | None = None):
    if args.mod is not None:
        if kind in (MatrixKind.D_DIAG, MatrixKind.V_VANDERMONDE):
            raise UsageError(f"--kind {kind.value} lives over Q(phi) and takes no --mod")
        return GF(require_prime(args.mod))
    if kind in (MatrixKind.D_DIAG, MatrixKind.V_VANDERMONDE):
        return QPHI
    return QQ


def cmd_gen(args) -> int:
    kind = MatrixKind(args.kind)
    m = build(kind, args.n, _ring(args, kind))
    if args.format == "json":
        _emit(_dump({"schema": SCHEMA_VERSION, "kind": kind.value, **m.to_json()}))
    else:
        _emit(m.render(args.format))
    return 0


def cmd_charpoly(args) -> int:
    kind = MatrixKind(args.kind)
    if args.format == "csv":
        raise UsageError("csv output is only available for matrices")
    m = build(kind, args.n, _ring(args, kind))
    cp = m.charpoly()
    if args.paper_sign:
        cp = cp.paper_sign()
    if args.format == "json":
        _emit(
            _dump(
                {
                    "schema": SCHEMA_VERSION,
                    "kind": kind.value,
                    "n": args.n,
                    "ring": m.ring.tag,
                    "convention": "det(A - xI)" if args.paper_sign else "det(xI - A)",
                    "coefficients": cp.to_json(),
                    "text": str(cp),
                }
            )
        )
    else:
        _emit(str(cp))
    return 0


def cmd_eigen(args) -> int:
    if args.format == "csv":
        raise UsageError("csv output is only available for matrices")
    spec = spectra.closed_form_eigenvalues(args.n)
    dec = spectra.eigvec_matrix(args.n) if args.vectors else None
    if args.format == "json":
        out = {
            "schema": SCHEMA_VERSION,
            "n": args.n,
            "ring": QPHI.tag,
            "eigenvalues": [{"label": lab, "value": str(v)} for lab, v in zip(spec.labels, spec.eigenvalues)],
        }
        if dec is not None:
            out["W"] = dec.W.to_json()
            out["E"] = dec.E.to_json()
        _emit(_dump(out))
        return 0
    lines = [f"{lab} = {v}" for lab, v in zip(spec.labels, spec.eigenvalues)]
    if dec is not None:
        lines.append("")
        lines.append("W (eigenvectors of R, one column per eigenvalue above):")
        lines.append(dec.W.render())
    _emit("\n".join(lines))
    return 0


def cmd_genfun(args) -> int:
    if args.e > E_CAP:
        raise UsageError(f"--e is capped at {E_CAP}")
    if args.format == "csv":
        raise UsageError("csv output is only available for matrices")
    if args.row is not None:
        p = gf.row_gf(args.n, args.e, args.row)
        coeffs, text, key, idx = p.to_json(), p.ascending(), "row", args.row
    else:
        terms = args.terms if args.terms is not None else args.n
        s = gf.col_gf(args.n, args.e, args.col, terms)
        coeffs, text, key, idx = s.to_json(), str(s), "col", args.col
    if args.format == "json":
        _emit(
            _dump(
                {
                    "schema": SCHEMA_VERSION,
                    "n": args.n,
                    "e": args.e,
                    key: idx,
                    "ring": QQ.tag,
                    "coefficients": coeffs,
                    "text": text,
                }
            )
        )
    else:
        _emit(text)
    return 0


def _merge(a: CaseReport, b: CaseReport) -> CaseReport:
    a.checks.extend(b.checks)
    a.notes.extend(b.notes)
    for k, v in b.params.items():
        a.params.setdefault(k, v)
    return a


def _timed(fn, *a) -> CaseReport:
    t0 = time.perf_counter()
    rep = fn(*a)
    rep.seconds = time.perf_counter() - t0
    return rep


def _structure_case(n: int) -> CaseReport:
    return _merge(verify_structure(n), verify_companion_similarity(n))


def _spectrum_case(n: int) -> CaseReport:
    rep = spectra.verify_spectrum(n)
    if n <= EIGVEC_N_MAX:
        _merge(rep, spectra.verify_eigenvectors(n))
    return rep


def run_suite(suite: str, n_max: int | None = None, primes=DEFAULT_PRIMES, e_max: int = 8) -> RunReport:
    n_max = n_max if n_max is not None else DEFAULT_N_MAX[suite]
    run = RunReport(suite)
    ns = range(1, n_max + 1)
    if suite == "structure":
        run.cases = [_timed(_structure_case, n) for n in ns]
    elif suite == "spectrum":
        run.cases = [_timed(_spectrum_case, n) for n in ns]
        if n_max >= 4:
            run.cases.append(_timed(spectra.verify_printed_w4))
    elif suite in ("mod3", "mod5"):
        p = int(suite[-1])
        run.cases = [_timed(spectra.verify_modular_charpoly, p, n) for n in ns]
    elif suite == "power":
        run.cases = [_timed(spectra.verify_power_identity, p, n) for p in sorted(primes) for n in ns]
    elif suite == "genfun":
        run.cases = [_timed(gf.verify_genfun, n, e) for n in ns for e in range(1, e_max + 1)]
    else:
        raise UsageError(f"unknown suite {suite!r}")
    return run


def cmd_verify(args) -> int:
    try:
        primes = tuple(require_prime(int(p)) for p in args.primes.split(",") if p.strip())
    except ValueError as exc:
        raise UsageError(f"--primes: {exc}") from exc
    if args.e_max > E_CAP:
        raise UsageError(f"--e-max is capped at {E_CAP}")
    if args.n_max is not None and args.n_max < 1:
        raise UsageError("--n-max must be >= 1")
    suites = SUITES if args.suite == "all" else (args.suite,)
    run = RunReport(args.suite)
    for s in suites:
        run.cases.extend(run_suite(s, args.n_max, primes, args.e_max).cases)
    timing = not args.no_timing
    if args.format == "json":
        _emit(_dump(run.to_json(timing)))
    else:
        lines = []
        for c in run.cases:
            params = " ".join(f"{k}={v}" for k, v in c.params.items() if not isinstance(v, (list, dict)))
            lines.append(f"{'PASS' if c.passed else 'FAIL'} {c.suite} {params}: {c.detail()}")
            lines.extend(f"    note [{nt.code}] {nt.message}" for nt in c.notes)
        summary = run.to_json(False)["summary"]
        lines.append(f"{summary['passed']}/{summary['total']} cases passed")
        _emit("\n".join(lines))
    return 0 if run.passed else 1


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _add_common(p: argparse.ArgumentParser, fmt_default: str = "pretty") -> None:
    # added per subparser: parents= would share Action objects, so one
    # subcommand's set_defaults would leak into the others
    p.add_argument("--format", choices=("pretty", "json", "csv"), default=fmt_default)
    p.add_argument("--mod", type=int, metavar="P", help="work over GF(P)")
    p.add_argument("--paper-sign", action="store_true", help="report det(A - xI) instead of det(xI - A)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="binomat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print a matrix of the family")
    _add_common(p)
    p.add_argument("--kind", required=True, choices=[k.value for k in MatrixKind])
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("charpoly", help="characteristic polynomial")
    _add_common(p)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--kind", default="R", choices=[k.value for k in MatrixKind])
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("eigen", help="closed-form eigenvalues of R_n")
    _add_common(p)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--vectors", action="store_true", help="also print the eigenvector matrix W")
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("genfun", help="row/column generating functions of R_n^e")
    _add_common(p)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--e", type=_positive, required=True)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--row", type=_positive)
    which.add_argument("--col", type=_positive)
    p.add_argument("--terms", type=_positive, help="series terms for --col (default n)")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("verify", help="run a verification suite")
    _add_common(p, "json")
    p.add_argument("--suite", required=True, choices=SUITES + ("all",))
    p.add_argument("--n-max", type=_positive)
    p.add_argument("--primes", default=",".join(map(str, DEFAULT_PRIMES)))
    p.add_argument("--e-max", type=_positive, default=8)
    p.add_argument("--no-timing", action="store_true", help="omit wall times from the report")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, SingularMatrixError) as exc:
        print(f"binomat {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
