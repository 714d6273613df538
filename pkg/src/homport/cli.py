"""``homport`` command line tool.

Subcommands: ``dft``, ``coincidence``, ``distribution``, ``sweep``, ``verify``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error,
4 non-unitary input matrix, 5 dimension cap exceeded.  Diagnostics go to
stderr; results to stdout (or ``--out``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

import numpy as np

from homport import __version__
from homport.errors import CapExceededError, NonUnitaryError
from homport.fock import (
    BOSON_COINCIDENCE_MAX_DIM,
    BOSON_DISTRIBUTION_MAX_DIM,
    ParticleStatistics,
    _CLAMP,
    full_distribution,
)
from homport.hom import CYCLIC_MAX_DIM, dip_report, parity_sweep, verify_cyclic_symmetry
from homport.matrixfn import default_workers
from homport.multiport import EPS_UNITARY, build_dft, random_unitary, read_matrix, write_matrix
from homport.oracle import expand_output_state, expansion_deviation

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NON_UNITARY = 4
EXIT_CAP = 5

DFT_MAX_N = 64
ORACLE_VERIFY_MAX_N = 5
VERIFY_SEED = 2005

TOLERANCES = {
    "eps_unitary": EPS_UNITARY,
    "vanishing_tolerance_per_dim": 1e-9,
    "probability_clamp": _CLAMP,
}


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    """Shortest round-trip decimal (at most 17 significant digits)."""
    return repr(float(x))


def manifest(command: str, params: dict, started: float) -> dict:
    return {
        "command": command,
        "parameters": params,
        "version": __version__,
        "duration_ms": round((time.perf_counter() - started) * 1000.0, 3),
        "tolerances": dict(TOLERANCES),
    }


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="ascii", newline="") as fh:
        fh.write(text)


def _positive_n(value: int, flag: str = "--n", upper: int | None = None) -> int:
    if value < 1:
        raise UsageError(f"{flag} must be >= 1, got {value}")
    if upper is not None and value > upper:
        raise UsageError(f"{flag} must be <= {upper}, got {value}")
    return value


def _load_matrix(args) -> np.ndarray:
    if args.matrix is not None:
        try:
            return read_matrix(args.matrix)
        except ValueError as exc:
            raise UsageError(f"{args.matrix}: {exc}") from None
    return build_dft(_positive_n(args.n))


def cmd_dft(args) -> int:
    n = _positive_n(args.n, upper=DFT_MAX_N)
    buf = io.StringIO()
    write_matrix(build_dft(n), buf)
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_coincidence(args) -> int:
    started = time.perf_counter()
    stats = ParticleStatistics.parse(args.stats)
    u = _load_matrix(args)
    n = u.shape[0]
    if stats is ParticleStatistics.BOSON and n > BOSON_COINCIDENCE_MAX_DIM and not args.force:
        raise CapExceededError("boson coincidence probability", n, BOSON_COINCIDENCE_MAX_DIM)
    report = dip_report(u, stats, max_dim=None if args.force else BOSON_COINCIDENCE_MAX_DIM)
    if args.json:
        params = {"n": args.n, "matrix": args.matrix, "stats": stats.value, "force": args.force}
        doc = {"report": report.as_dict(), "manifest": manifest("coincidence", params, started)}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        d = report.as_dict()
        lines = [
            f"n: {d['n']}",
            f"stats: {d['stats']}",
            f"coincidence_probability: {fmt(d['coincidence_probability'])}",
            f"value_re: {fmt(d['value_re'])}",
            f"value_im: {fmt(d['value_im'])}",
            f"is_dip: {str(d['is_dip']).lower()}",
        ]
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_distribution(args) -> int:
    started = time.perf_counter()
    stats = ParticleStatistics.parse(args.stats)
    u = _load_matrix(args)
    cap = None if args.force else BOSON_DISTRIBUTION_MAX_DIM
    dist = full_distribution(u, stats, max_dim=cap)
    rows = [
        (" ".join(map(str, cfg)), fmt(p), fmt(a.real), fmt(a.imag))
        for cfg, p, a in zip(dist.configs, dist.probabilities, dist.amplitudes)
    ]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["config", "probability", "amp_re", "amp_im"])
        w.writerows(rows)
        text = buf.getvalue()
    else:
        params = {"n": args.n, "matrix": args.matrix, "stats": stats.value, "force": args.force}
        doc = {
            "n": dist.n,
            "stats": stats.value,
            "rows": [
                {
                    "config": list(cfg),
                    "probability": float(p),
                    "amp_re": float(a.real),
                    "amp_im": float(a.imag),
                }
                for cfg, p, a in zip(dist.configs, dist.probabilities, dist.amplitudes)
            ],
            "manifest": manifest("distribution", params, started),
        }
        text = json.dumps(doc, indent=2) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    started = time.perf_counter()
    stats = ParticleStatistics.parse(args.stats)
    lo = _positive_n(args.min, "--min")
    hi = _positive_n(args.max, "--max")
    if lo > hi:
        raise UsageError(f"empty range: --min {lo} > --max {hi}")
    if hi > BOSON_COINCIDENCE_MAX_DIM:
        raise UsageError(f"--max must be <= {BOSON_COINCIDENCE_MAX_DIM}, got {hi}")
    reports = parity_sweep(lo, hi, stats)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "parity", "coincidence_probability", "abs_value", "is_dip"])
        for r in reports:
            w.writerow(
                [r.n, r.parity, fmt(r.coincidence_probability), fmt(abs(r.value)),
                 str(r.is_dip).lower()]
            )
        text = buf.getvalue()
    else:
        params = {"min": lo, "max": hi, "stats": stats.value}
        doc = {
            "reports": [r.as_dict() for r in reports],
            "manifest": manifest("sweep", params, started),
        }
        text = json.dumps(doc, indent=2) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _verify_checks(n_max: int):
    """Yield ``(name, passed, detail)`` for every verification check."""
    for n in range(1, min(n_max, CYCLIC_MAX_DIM) + 1):
        c = verify_cyclic_symmetry(n)
        yield (
            f"cyclic n={n}",
            c.passed,
            f"column_dev={c.column_cycle_deviation:.3e} "
            f"mult_dev={c.multiplicativity_deviation:.3e} "
            f"parity_dev={c.parity_deviation:.3e} perm_lambda={c.perm_lambda.real:+.0f}",
        )

    for r in parity_sweep(1, min(n_max, CYCLIC_MAX_DIM), ParticleStatistics.BOSON):
        expected = r.n % 2 == 0
        yield (
            f"boson-dip n={r.n}",
            r.is_dip == expected,
            f"P={r.coincidence_probability:.6e} is_dip={str(r.is_dip).lower()}",
        )

    if n_max >= 2:
        u = build_dft(2)
        boson = full_distribution(u, ParticleStatistics.BOSON)
        want = {(2, 0): 0.5, (1, 1): 0.0, (0, 2): 0.5}
        dev = max(abs(boson[c] - p) for c, p in want.items())
        yield ("two-particle boson n=2", dev <= 1e-12, f"max_dev={dev:.3e}")
        fermion = full_distribution(u, ParticleStatistics.FERMION)
        dev = abs(fermion[(1, 1)] - 1.0)
        ok = dev <= 1e-12 and len(fermion) == 1
        yield ("two-particle fermion n=2", ok, f"P(1,1)={fmt(fermion[(1, 1)])}")

    rng = np.random.default_rng(VERIFY_SEED)
    for n in range(1, min(n_max, ORACLE_VERIFY_MAX_N) + 1):
        mats = [("dft", build_dft(n))] + [(f"haar{k}", random_unitary(n, rng)) for k in range(3)]
        for label, u in mats:
            for stats in ParticleStatistics:
                dev = expansion_deviation(u, stats)
                total = expand_output_state(u, stats).total_probability()
                ok = dev <= 1e-10 and abs(total - 1.0) <= 1e-10
                yield (
                    f"oracle n={n} {label} {stats.value}",
                    ok,
                    f"amp_dev={dev:.3e} total={fmt(total)}",
                )


def cmd_verify(args) -> int:
    n_max = _positive_n(args.n_max, "--n-max")
    failed = 0
    count = 0
    for name, ok, detail in _verify_checks(n_max):
        count += 1
        failed += not ok
        sys.stdout.write(f"{'PASS' if ok else 'FAIL'} {name}: {detail}\n")
    sys.stdout.write(f"{count - failed}/{count} checks passed\n")
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=int, help="use the N-port DFT multiport")
    src.add_argument("--matrix", help="transition matrix file (text format)")
    p.add_argument("--stats", choices=["boson", "fermion"], default="boson")
    p.add_argument("--force", action="store_true", help="lift the default dimension cap")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homport",
        description="Exact boson/fermion scattering through N-port multiport beam splitters.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dft", help="write the N-port DFT transition matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.set_defaults(func=cmd_dft)

    p = sub.add_parser("coincidence", help="probability of one particle per output port")
    _add_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_coincidence)

    p = sub.add_parser("distribution", help="full output distribution")
    _add_source(p)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("sweep", help="coincidence probability for a range of N")
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--stats", choices=["boson", "fermion"], default="boson")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="cyclic-symmetry and oracle cross-checks")
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        default_workers()
        return args.func(args)
    except UsageError as exc:
        print(f"homport: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonUnitaryError as exc:
        print(f"homport: error: {exc}", file=sys.stderr)
        return EXIT_NON_UNITARY
    except CapExceededError as exc:
        print(f"homport: error: {exc} (use --force to override)", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"homport: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"homport: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
