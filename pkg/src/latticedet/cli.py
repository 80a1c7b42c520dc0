"""Command-line front end: determinant ratios, spectra, Lommel evaluations,
figure data and convergence tables, with text, CSV or JSON output.

Exit codes: 0 success, 1 numeric or domain failure, 2 usage error.  Reports
print 10 significant digits; CSV/JSON data carry shortest round-trip floats.
Grid sweeps are embarrassingly parallel; LATTICE_DET_THREADS caps the worker
count (default 1) and results are always emitted in grid order.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .errors import DomainError
from .lattice import BoundaryCondition, PotentialTable
from .lommel import (
    lommel_closed,
    lommel_recurrence,
    lommel_transitional_asymptotic,
    normalized_casoratian,
)
from .potentials import (
    LinearPotentialParams,
    RosenMorseParams,
    discdet_p3_closed_form,
    linear_lattice_potential,
    load_potential_csv,
    rosen_morse_lattice_potential,
)
from .specfun import continuum_linear_det_ratio, continuum_rosen_morse_det_ratio
from .spectral import (
    det_ratio,
    eigenvalues,
    reduced_determinant_zero_mode,
    zero_mode_eigenvalue_product,
)


class UsageError(ValueError):
    """Bad flags or flag combinations; maps to exit code 2."""


@dataclass
class RunConfig:
    """Parsed invocation: the leaf command, its numeric parameters, and the
    output destination and encoding."""

    command: str
    params: dict = field(default_factory=dict)
    out: str = "-"
    format: str = "text"


def _report_num(x: float) -> str:
    return format(x, ".10g")


def _data_num(x):
    # shortest round-trip representation for data files
    return repr(float(x)) if isinstance(x, float) else str(x)


def _thread_count() -> int:
    raw = os.environ.get("LATTICE_DET_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise UsageError("LATTICE_DET_THREADS must be a positive integer, got %r" % raw)
    if n < 1:
        raise UsageError("LATTICE_DET_THREADS must be a positive integer, got %r" % raw)
    return n


def _sweep(fn, items):
    workers = _thread_count()
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _grid(lo: float, hi: float, steps: int) -> list[float]:
    if not lo < hi:
        raise UsageError("range needs min < max, got [%r, %r]" % (lo, hi))
    if steps < 2:
        raise UsageError("range needs steps >= 2, got %d" % steps)
    span = hi - lo
    return [lo + i * span / (steps - 1) for i in range(steps)]


def _parse_bc(text: str) -> BoundaryCondition:
    if text == "dirichlet":
        return BoundaryCondition.dirichlet()
    if text == "neumann":
        return BoundaryCondition.neumann()
    if text.startswith("robin:"):
        body = text[len("robin:"):]
        parts = body.split(",")
        if len(parts) != 2:
            raise UsageError("robin condition must be robin:<alpha>,<beta>, got %r" % text)
        try:
            alpha, beta = float(parts[0]), float(parts[1])
        except ValueError:
            raise UsageError("robin parameters must be numbers, got %r" % text)
        return BoundaryCondition.robin(alpha, beta)
    raise UsageError(
        "boundary condition must be dirichlet, neumann or robin:<alpha>,<beta>, got %r"
        % text
    )


def _parse_potential(spec: str, p: int | None) -> tuple[PotentialTable, str]:
    if spec == "free":
        if p is None:
            raise UsageError("builtin potential %r needs --p" % spec)
        return PotentialTable.zeros(p), "free"
    if spec.startswith("linear:b="):
        if p is None:
            raise UsageError("builtin potential %r needs --p" % spec)
        b = float(spec[len("linear:b="):])
        return linear_lattice_potential(LinearPotentialParams(b, p)), spec
    if spec.startswith("rosen-morse:l="):
        if p is None:
            raise UsageError("builtin potential %r needs --p" % spec)
        l = float(spec[len("rosen-morse:l="):])
        return rosen_morse_lattice_potential(RosenMorseParams(l, p)), spec
    table = load_potential_csv(spec)
    if p is not None and p != table.p:
        raise UsageError(
            "--p %d does not match the %d rows of %s" % (p, table.p, spec)
        )
    return table, spec


def _emit(cfg: RunConfig, rows: list[dict], report_lines: list[str]) -> None:
    if cfg.out == "-":
        _write(sys.stdout, cfg, rows, report_lines)
    else:
        with open(cfg.out, "w", encoding="utf-8", newline="") as handle:
            _write(handle, cfg, rows, report_lines)


def _write(stream, cfg: RunConfig, rows: list[dict], report_lines: list[str]) -> None:
    if cfg.format == "text":
        for line in report_lines:
            stream.write(line + "\n")
    elif cfg.format == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        if rows:
            header = list(rows[0].keys())
            writer.writerow(header)
            for row in rows:
                writer.writerow([_data_num(row[key]) for key in header])
    else:
        payload = {
            "meta": {
                "command": cfg.command,
                "parameters": cfg.params,
                "version": __version__,
            },
            "data": rows,
        }
        json.dump(payload, stream, indent=2)
        stream.write("\n")


def _cmd_detratio(args) -> int:
    model = args.model
    if model == "linear":
        table = linear_lattice_potential(LinearPotentialParams(args.b, args.p))
        discrete = det_ratio(table)
        continuum = continuum_linear_det_ratio(args.b) if args.continuum else None
        params = {"model": model, "b": args.b, "p": args.p}
    else:
        table = rosen_morse_lattice_potential(RosenMorseParams(args.l, args.p))
        if args.p == 3:
            discrete = discdet_p3_closed_form(table)
        else:
            discrete = det_ratio(table)
        continuum = continuum_rosen_morse_det_ratio(args.l) if args.continuum else None
        params = {"model": model, "l": args.l, "p": args.p}

    row = dict(params)
    row["discrete_ratio"] = discrete
    lines = ["discrete_ratio = %s" % _report_num(discrete)]
    if continuum is not None:
        rel = abs(discrete - continuum) / abs(continuum)
        row["continuum_ratio"] = continuum
        row["rel_error"] = rel
        lines.append("continuum_ratio = %s" % _report_num(continuum))
        lines.append("rel_error = %s" % _report_num(rel))
    cfg = RunConfig("detratio " + model, params, args.out, args.format)
    _emit(cfg, [row], lines)
    return 0


def _cmd_spectrum(args) -> int:
    table, label = _parse_potential(args.potential, args.p)
    bc = _parse_bc(args.bc)
    spectrum = eigenvalues(table, bc)
    rows = []
    lines = []
    for n, lam in enumerate(spectrum.eigenvalues, start=1):
        row = {"n": n, "eigenvalue": lam}
        if args.vectors:
            for j, component in enumerate(spectrum.eigenvectors[n - 1], start=1):
                row["y%d" % j] = component
        rows.append(row)
        if args.vectors:
            vec = " ".join(_report_num(c) for c in spectrum.eigenvectors[n - 1])
            lines.append("%s %s" % (_report_num(lam), vec))
        else:
            lines.append(_report_num(lam))
    params = {"potential": label, "p": table.p, "bc": args.bc, "vectors": args.vectors}
    cfg = RunConfig("spectrum", params, args.out, args.format)
    _emit(cfg, rows, lines)
    return 0


def _cmd_figure(args) -> int:
    if args.which == "fig1":
        grid = _grid(args.bmin, args.bmax, args.steps)
        p = args.p

        def point(b: float) -> dict:
            table = linear_lattice_potential(LinearPotentialParams(b, p))
            return {
                "b": b,
                "discrete_ratio": det_ratio(table),
                "continuum_ratio": continuum_linear_det_ratio(b),
            }

        params = {"bmin": args.bmin, "bmax": args.bmax, "steps": args.steps, "p": p}
    else:
        grid = _grid(args.lmin, args.lmax, args.steps)

        def point(l: float) -> dict:
            p3 = discdet_p3_closed_form(
                rosen_morse_lattice_potential(RosenMorseParams(l, 3))
            )
            p5 = det_ratio(rosen_morse_lattice_potential(RosenMorseParams(l, 5)))
            return {
                "l": l,
                "p3_ratio": p3,
                "p5_ratio": p5,
                "continuum_ratio": continuum_rosen_morse_det_ratio(l),
            }

        params = {"lmin": args.lmin, "lmax": args.lmax, "steps": args.steps}

    rows = _sweep(point, grid)
    cfg = RunConfig("figure " + args.which, params, args.out, args.format)
    _emit(cfg, rows, [])
    return 0


def _lommel_methods(args) -> list[tuple[str, float, str]]:
    """(method, value, note) for each applicable route."""
    nu, p, z = args.nu, args.p, args.z
    requested = args.method
    out = []

    def want(name: str) -> bool:
        return requested in (name, "all")

    if want("closed"):
        out.append(("closed", lommel_closed(nu, p, z), ""))
    if want("recurrence"):
        out.append(("recurrence", lommel_recurrence(nu, p, z)[p], ""))
    if want("bessel"):
        try:
            result = normalized_casoratian(nu, p, z)
        except DomainError:
            # outside the Bessel series window; not an error under `all`
            if requested == "bessel":
                raise
            result = None
        if result is not None:
            if result.route == "bessel":
                out.append(("bessel", result.value, ""))
            elif requested == "bessel":
                out.append(("bessel", result.value, "(closed-form fallback)"))
            # under --method all the fallback is skipped: it is not independent
    if want("asymptotic"):
        scale = max(1.0, abs(z))
        if abs(nu - z) > 1e-9 * scale:
            if requested == "asymptotic":
                raise DomainError(
                    "asymptotic method applies on the transitional line nu = z "
                    "(lam = 0); got nu=%r, z=%r" % (nu, z)
                )
        else:
            b = (p + 1) * (2.0 / z) ** (1.0 / 3.0)
            try:
                out.append(("asymptotic", lommel_transitional_asymptotic(p, b), ""))
            except DomainError:
                if requested == "asymptotic":
                    raise
    return out


def _cmd_lommel(args) -> int:
    if args.p < 0:
        raise UsageError("lommel eval needs degree --p >= 0, got %d" % args.p)
    values = _lommel_methods(args)
    rows = []
    lines = []
    for method, value, note in values:
        rows.append({"method": method, "value": value})
        suffix = " %s" % note if note else ""
        lines.append("%s = %s%s" % (method, _report_num(value), suffix))
    if args.method == "all" and len(values) > 1:
        nums = [value for _, value, _ in values]
        deviation = max(abs(a - b) for a in nums for b in nums)
        rows.append({"method": "max_pairwise_deviation", "value": deviation})
        lines.append("max_pairwise_deviation = %s" % _report_num(deviation))
    params = {"nu": args.nu, "p": args.p, "z": args.z, "method": args.method}
    cfg = RunConfig("lommel eval", params, args.out, args.format)
    _emit(cfg, rows, lines)
    return 0


def _convergence_schedule(pmax: int) -> list[int]:
    # the usual 1, 3, 10, 30, ... ladder capped at pmax, with pmax appended
    schedule = []
    decade = 1
    while decade <= pmax:
        schedule.append(decade)
        if 3 * decade <= pmax:
            schedule.append(3 * decade)
        decade *= 10
    if pmax not in schedule:
        schedule.append(pmax)
    return sorted(schedule)


def _cmd_convergence(args) -> int:
    if args.pmax < 1:
        raise UsageError("--pmax must be >= 1, got %d" % args.pmax)
    schedule = _convergence_schedule(args.pmax)
    continuum = continuum_linear_det_ratio(args.b)

    def point(p: int) -> dict:
        table = linear_lattice_potential(LinearPotentialParams(args.b, p))
        discrete = det_ratio(table)
        return {
            "p": p,
            "discrete_ratio": discrete,
            "continuum_ratio": continuum,
            "abs_error": abs(discrete - continuum),
        }

    rows = _sweep(point, schedule)
    params = {"b": args.b, "pmax": args.pmax}
    cfg = RunConfig("convergence linear", params, args.out, args.format)
    _emit(cfg, rows, [])
    return 0


def _cmd_zeromode(args) -> int:
    table, label = _parse_potential(args.potential, args.p)
    reduced = reduced_determinant_zero_mode(table)
    product = zero_mode_eigenvalue_product(table)
    difference = abs(reduced.value - product)
    row = {
        "reduced_determinant": reduced.value,
        "inner": reduced.inner,
        "delta_terminal": reduced.delta_terminal,
        "eigenvalue_product": product,
        "cross_check_difference": difference,
    }
    for j, component in enumerate(reduced.zero_mode, start=1):
        row["y%d" % j] = component
    lines = [
        "zero_mode = %s" % " ".join(_report_num(c) for c in reduced.zero_mode),
        "inner = %s" % _report_num(reduced.inner),
        "delta_terminal = %s" % _report_num(reduced.delta_terminal),
        "reduced_determinant = %s" % _report_num(reduced.value),
        "eigenvalue_product = %s" % _report_num(product),
        "cross_check_difference = %s" % _report_num(difference),
    ]
    params = {"potential": label, "p": table.p}
    cfg = RunConfig("zeromode", params, args.out, args.format)
    _emit(cfg, [row], lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticedet",
        description="Determinant ratios, spectra and Lommel polynomials for "
        "discrete interval eigenproblems.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, formats=("text", "csv", "json"), default="text"):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", default="-", help="output path, or - for stdout")

    det = sub.add_parser("detratio", help="determinant ratio for a builtin potential")
    det_sub = det.add_subparsers(dest="model", required=True)
    det_lin = det_sub.add_parser("linear")
    det_lin.add_argument("--b", type=float, required=True)
    det_lin.add_argument("--p", type=int, required=True)
    det_lin.add_argument("--continuum", action="store_true")
    add_io(det_lin)
    det_rm = det_sub.add_parser("rosen-morse")
    det_rm.add_argument("--l", type=float, required=True)
    det_rm.add_argument("--p", type=int, required=True)
    det_rm.add_argument("--continuum", action="store_true")
    add_io(det_rm)

    spec = sub.add_parser("spectrum", help="eigenvalues (and eigenvectors)")
    spec.add_argument(
        "--potential",
        required=True,
        help="CSV path, or builtin free | linear:b=<r> | rosen-morse:l=<r>",
    )
    spec.add_argument("--p", type=int)
    spec.add_argument("--bc", default="dirichlet")
    spec.add_argument("--vectors", action="store_true")
    add_io(spec)

    fig = sub.add_parser("figure", help="grid data for the two standard figures")
    fig_sub = fig.add_subparsers(dest="which", required=True)
    fig1 = fig_sub.add_parser("fig1")
    fig1.add_argument("--bmin", type=float, default=-6.0)
    fig1.add_argument("--bmax", type=float, default=3.0)
    fig1.add_argument("--steps", type=int, default=91)
    fig1.add_argument("--p", type=int, default=300)
    add_io(fig1, formats=("csv", "json"), default="csv")
    fig2 = fig_sub.add_parser("fig2")
    fig2.add_argument("--lmin", type=float, default=-6.0)
    fig2.add_argument("--lmax", type=float, default=5.0)
    fig2.add_argument("--steps", type=int, default=111)
    add_io(fig2, formats=("csv", "json"), default="csv")

    lom = sub.add_parser("lommel", help="Lommel polynomial evaluation")
    lom_sub = lom.add_subparsers(dest="action", required=True)
    lom_eval = lom_sub.add_parser("eval")
    lom_eval.add_argument("--nu", type=float, required=True)
    lom_eval.add_argument("--p", type=int, required=True)
    lom_eval.add_argument("--z", type=float, required=True)
    lom_eval.add_argument(
        "--method",
        choices=("closed", "recurrence", "bessel", "asymptotic", "all"),
        default="closed",
    )
    add_io(lom_eval)

    conv = sub.add_parser("convergence", help="discrete-to-continuum error table")
    conv_sub = conv.add_subparsers(dest="model", required=True)
    conv_lin = conv_sub.add_parser("linear")
    conv_lin.add_argument("--b", type=float, required=True)
    conv_lin.add_argument("--pmax", type=int, required=True)
    add_io(conv_lin, formats=("csv", "json"), default="csv")

    zero = sub.add_parser("zeromode", help="reduced determinant from the zero mode")
    zero.add_argument("--potential", required=True, help="CSV path of lattice values")
    zero.add_argument("--p", type=int)
    add_io(zero)
    return parser


_HANDLERS = {
    "detratio": _cmd_detratio,
    "spectrum": _cmd_spectrum,
    "figure": _cmd_figure,
    "lommel": _cmd_lommel,
    "convergence": _cmd_convergence,
    "zeromode": _cmd_zeromode,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
