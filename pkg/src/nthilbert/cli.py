"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 numeric failure (singular or
non-invertible where an inverse was required), 3 input validation failure.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .analysis import FIG1_ERRATUM, FigureId, emit_csv, emit_svg, find_peaks, preset
from .classic_dht import DhtWindowSpec, Signal, dht_forward, render
from .exactlin import NonInvertible, Singular, matrix_to_csv, rational_inverse
from .modmath import DomainError, PowerOfTwoModulus
from .ntdht import (
    PAPER16,
    NtMatrixSpec,
    Variant,
    build_nt_matrix,
    compare_printed_inverse,
    embedded_forward16,
)
from .pipeline import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    ReductionMode,
    nt_inverse_matrix,
    random_roundtrip_suite,
    run_transform,
    search_mod_inverse,
    search_report,
)

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_INPUT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def read_signal_csv(path: str | Path) -> Signal:
    """Read a signal from ``value`` lines or ``index,value`` lines.

    A non-numeric first line is treated as a header. Indices, when present,
    must be consecutive.
    """
    rows = []
    for lineno, line in enumerate(Path(path).read_text().splitlines()):
        if not line.strip():
            continue
        toks = [t.strip() for t in line.split(",")]
        try:
            rows.append([Fraction(t) for t in toks])
        except (ValueError, ZeroDivisionError):
            if lineno == 0 and not rows:
                continue
            raise DomainError(f"{path}: bad line {lineno + 1}: {line!r}")
    if not rows:
        raise DomainError(f"{path}: no samples")
    width = {len(r) for r in rows}
    if width == {1}:
        return Signal([r[0] for r in rows])
    if width == {2}:
        idx = [r[0] for r in rows]
        if any(i.denominator != 1 for i in idx) or any(b - a != 1 for a, b in zip(idx, idx[1:])):
            raise DomainError(f"{path}: indices must be consecutive integers")
        return Signal([r[1] for r in rows], origin=int(idx[0]))
    raise DomainError(f"{path}: expected one or two columns")


def _write(path: str | Path, data: bytes | str):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if isinstance(data, str):
        data = data.encode()
    path.write_bytes(data)


def _spec(args) -> NtMatrixSpec:
    return NtMatrixSpec.parse(args.spec) if args.spec else PAPER16


def _mod_range(text: str) -> range:
    try:
        lo, hi = (int(t) for t in text.split(".."))
    except ValueError:
        raise DomainError(f"--mod-exp expects lo..hi, got {text!r}")
    if lo < 1 or hi < lo:
        raise DomainError(f"bad exponent range {text!r}")
    return range(lo, hi + 1)


def cmd_build_matrix(args) -> int:
    spec = NtMatrixSpec(args.n, PowerOfTwoModulus.of(args.modulus), Variant(args.variant))
    _write(args.out, matrix_to_csv(build_nt_matrix(spec)))
    return EXIT_OK


def _figure_run(samples, spec, mode):
    run = run_transform(samples, spec, mode)
    return run, emit_csv(run.input, run.output, run.recovered)


def cmd_transform(args) -> int:
    spec = _spec(args)
    if args.preset:
        p = preset(args.preset)
        samples = list(p.samples)
        if p.id is FigureId.FIG1:
            print(f"note: {FIG1_ERRATUM}", file=sys.stderr)
    else:
        sig = read_signal_csv(args.input)
        if any(v.denominator != 1 for v in sig.samples):
            raise DomainError("transform inputs must be integers")
        samples = [int(v) for v in sig.samples]
    mode = ReductionMode.MOD_M if args.reduce_mod else ReductionMode.PLAIN
    run, data = _figure_run(samples, spec, mode)
    _write(args.out, data)
    print(find_peaks(run.output, source=run.input).to_text())
    print(f"residual={run.residual}")
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    suite = random_roundtrip_suite(args.trials, args.seed, _spec(args))
    print(f"trials={suite.trials} seed={suite.seed} failures={len(suite.failures)}")
    for x, r in suite.failures[:5]:
        print(f"  x={x} residual={r}")
    return EXIT_OK if suite.ok else EXIT_NUMERIC


def cmd_classic(args) -> int:
    sig = read_signal_csv(args.input)
    window = DhtWindowSpec(args.window)
    if args.k_range:
        lo, hi = (int(t) for t in args.k_range.split(".."))
    else:
        lo, hi = sig.indices[0], sig.indices[-1]
    g = dht_forward(sig, (lo, hi), window)
    _write(args.out, emit_csv(g.samples, render(g), names=["value", "value_scaled"], origin=g.origin))
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        ns = [int(t) for t in args.n_list.split(",")]
    except ValueError:
        raise DomainError(f"--n-list expects comma-separated integers, got {args.n_list!r}")
    variants = list(Variant) if args.variant == "both" else [Variant(args.variant)]
    specs = [NtMatrixSpec(n, PowerOfTwoModulus(t), v)
             for n in ns for t in _mod_range(args.mod_exp) for v in variants]
    results = search_mod_inverse(specs, args.trials, args.seed, args.workers)
    _write(args.out, search_report(results))
    found = [r for r in results if r.mod_inverse_matrix is not None]
    print(f"specs={len(results)} inverses_found={len(found)}")
    incoherent = [r for r in results if r.det_parity != r.exact_det_parity
                  or r.inverse_verified is False or r.roundtrip_ok_mod_m is False]
    return EXIT_NUMERIC if incoherent else EXIT_OK


def cmd_compare_printed(args) -> int:
    report = compare_printed_inverse(rational_inverse(embedded_forward16()))
    _write(args.out, report.to_text())
    print(f"compared={report.total_compared} matches={report.matches} "
          f"mismatches={len(report.mismatches)} erratum_rows={report.erratum_rows}")
    return EXIT_OK


def cmd_figures(args) -> int:
    out = Path(args.out_dir)
    spec = _spec(args)
    nt_inverse_matrix(spec)
    for fig in FigureId:
        p = preset(fig)
        run, data = _figure_run(list(p.samples), spec, ReductionMode.PLAIN)
        _write(out / f"{fig.value}.csv", data)
        report = find_peaks(run.output, source=run.input)
        print(f"{fig.value}: {report.to_text()}")
        if fig is FigureId.FIG1:
            print(f"  note: {FIG1_ERRATUM}")
        if args.svg:
            _write(out / f"{fig.value}.svg", emit_svg(
                run.input, run.output, run.recovered,
                names=["original", "transformed", "recovered"], title=f"{fig.value}: {p.caption}"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nthilbert", description="Number-theoretic discrete Hilbert transform tools.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    spec_help = "n,modulus,variant (default 16,16,paper)"

    s = sub.add_parser("build-matrix", help="write an NT-DHT matrix as CSV")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--modulus", type=int, required=True, help="power of two")
    s.add_argument("--variant", choices=[v.value for v in Variant], default="paper")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_build_matrix)

    s = sub.add_parser("transform", help="forward transform and exact recovery of one signal")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=[f.value for f in FigureId])
    src.add_argument("--input", help="CSV of values or index,value pairs")
    s.add_argument("--reduce-mod", action="store_true", help="reduce the product modulo M")
    s.add_argument("--spec", help=spec_help)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("roundtrip", help="exact round trip on seeded random signals")
    s.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"default {DEFAULT_SEED}")
    s.add_argument("--spec", help=spec_help)
    s.set_defaults(func=cmd_roundtrip)

    s = sub.add_parser("classic", help="classical DHT (pre-scale exact and scaled float)")
    s.add_argument("--input", required=True)
    s.add_argument("--window", type=int, default=None, help="half-width W, |n| <= W")
    s.add_argument("--k-range", help="lo..hi output indices, e.g. --k-range=-3..3 (default: input support)")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_classic)

    s = sub.add_parser("search", help="search for inverses modulo M")
    s.add_argument("--n-list", required=True)
    s.add_argument("--mod-exp", required=True, help="lo..hi exponent range")
    s.add_argument("--variant", choices=["both"] + [v.value for v in Variant], default="both")
    s.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"default {DEFAULT_SEED}")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("compare-printed", help="compare the published inverse to the exact one")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_compare_printed)

    s = sub.add_parser("figures", help="CSV (and SVG) for the four figure presets")
    s.add_argument("--out-dir", required=True)
    s.add_argument("--svg", action="store_true")
    s.add_argument("--spec", help=spec_help)
    s.set_defaults(func=cmd_figures)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Singular, NonInvertible) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
