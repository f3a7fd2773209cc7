"""Command-line front end.

Subcommands: eigen (one eigenvalue), table (the three built-in reference
tables), scan (method-comparison grid as CSV), wavefunction (sampled radial
wavefunction).  Output is either aligned text or CSV with a single header
row, LF line endings and plain decimal points.

Exit codes: 0 success, 1 computation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys

import numpy as np

from . import closed_forms, series, spectrum
from .eigensolve import (SearchError, coulomb_eigenvalue, sho_eigenvalue,
                         solve_shooting)

METHODS = ("formula", "expanded", "wkb", "shooting", "sho", "cornell-fit", "coulomb")


class UsageError(Exception):
    pass


def _eigenvalue(method: str, a: float, n: int, l: int) -> float:
    if method == "formula":
        return closed_forms.lambda_linear(n, l)
    if method == "expanded":
        return closed_forms.lambda_linear_expanded(n, l)
    if method == "wkb":
        return closed_forms.wkb_linear(n, l)
    if method == "shooting":
        return solve_shooting(a, n, l).lam
    if method == "sho":
        return sho_eigenvalue(a, n, l).lam
    if method == "cornell-fit":
        return closed_forms.cornell_eigenvalue(a, n, l)
    if method == "coulomb":
        return coulomb_eigenvalue(a, n, l)
    raise UsageError(f"unknown method {method!r}")


def _read_config(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            key, val = line.split("=", 1)
            values[key.strip()] = val.strip()
    return values


_POTENTIAL_KEYS = ("mu", "b", "alpha", "C", "quark_mass")


def _resolve_potential(args, config: dict[str, str]) -> spectrum.PotentialParams | None:
    name = args.potential or config.get("potential")
    if name:
        if name in spectrum.PRESETS:
            return spectrum.PRESETS[name]
        if name != "config":
            raise UsageError(f"unknown potential preset {name!r}")
    has_params = all(k in config for k in _POTENTIAL_KEYS)
    if name == "config" and not has_params:
        raise UsageError("potential 'config' needs mu, b, alpha, C and quark_mass")
    if has_params and (name == "config" or name is None and args.potential is None
                       and any(k in config for k in _POTENTIAL_KEYS)):
        return spectrum.PotentialParams(
            mu=float(config["mu"]), b=float(config["b"]),
            alpha=float(config["alpha"]), C=float(config["C"]),
            quark_mass=float(config["quark_mass"]))
    return None


def _emit(rows: list[list[str]], header: list[str], fmt: str, out: io.TextIOBase) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    out.write("  ".join(h.rjust(w) for h, w in zip(header, widths)) + "\n")
    for row in rows:
        out.write("  ".join(c.rjust(w) for c, w in zip(row, widths)) + "\n")


def _fmt(value: float, precision: int) -> str:
    return f"{value:.{precision}g}"


def cmd_eigen(args, config) -> tuple[list[str], list[list[str]]]:
    potential = _resolve_potential(args, config)
    a, n, l = args.a, args.n, args.l
    if potential is not None:
        if args.a not in (None, 0.0):
            raise UsageError("give either --a or a potential, not both")
        scaled = spectrum.scale_to_dimensionless(potential)
        a = scaled.a
    a = a or 0.0
    if args.method == "coulomb" and a <= 0.0:
        raise UsageError("the coulomb method requires a > 0")
    lam = _eigenvalue(args.method, a, n, l)
    header = ["method", "a", "n", "l", "lambda"]
    row = [args.method, _fmt(a, args.precision), str(n), str(l),
           _fmt(lam, args.precision)]
    if potential is not None:
        scaled = spectrum.scale_to_dimensionless(potential)
        energy = spectrum.eigenvalue_to_energy(lam, scaled, potential)
        header += ["E", "mass"]
        row += [_fmt(energy, args.precision),
                _fmt(spectrum.meson_mass(energy, potential), args.precision)]
    return header, [row]


def _table_tab1(precision: int) -> tuple[list[str], list[list[str]], bool]:
    header = ["block", "a", "n", "l", "this_work", "wkb", "numerical"]
    rows, failed = [], False
    for l in range(11):
        cells = ["linear_l", "0", "0", str(l)]
        cells += _cells(precision,
                        lambda: closed_forms.lambda_linear(0, l),
                        lambda: closed_forms.wkb_linear(0, l),
                        lambda: solve_shooting(0.0, 0, l).lam)
        failed |= "ERR" in cells
        rows.append(cells)
    for l in range(11):
        cells = ["coulomb_l", "1", "0", str(l)]
        cells += _cells(precision,
                        lambda: closed_forms.cornell_eigenvalue(1.0, 0, l),
                        None,
                        lambda: solve_shooting(1.0, 0, l).lam)
        failed |= "ERR" in cells
        rows.append(cells)
    for n in range(11):
        cells = ["coulomb_n", "1", str(n), "0"]
        cells += _cells(precision,
                        lambda: closed_forms.cornell_eigenvalue(1.0, n, 0),
                        None,
                        lambda: solve_shooting(1.0, n, 0).lam)
        failed |= "ERR" in cells
        rows.append(cells)
    return header, rows, failed


def _table_tab2(precision: int) -> tuple[list[str], list[list[str]], bool]:
    header = ["n", "l", "this_work", "wkb", "numerical"]
    rows, failed = [], False
    for l in (1, 8, 14):
        for n in range(1, 15):
            cells = [str(n), str(l)]
            cells += _cells(precision,
                            lambda: closed_forms.lambda_linear(n, l),
                            lambda: closed_forms.wkb_linear(n, l),
                            lambda: solve_shooting(0.0, n, l).lam)
            failed |= "ERR" in cells
            rows.append(cells)
    return header, rows, failed


def _table_tab3(precision: int) -> tuple[list[str], list[list[str]], bool]:
    header = ["state", "this_work", "numerical", "experiment"]
    rows, failed = [], False
    try:
        table = spectrum.bottomonium_table()
    except (SearchError, ArithmeticError):
        return header, [["ERR"] * 4], True
    for row in table:
        rows.append([row.label, f"{row.formula_mass:.4f}",
                     f"{row.numerical_mass:.4f}", f"{row.experimental_mass:.4f}"])
    return header, rows, failed


def _cells(precision: int, *calls) -> list[str]:
    out = []
    for call in calls:
        if call is None:
            out.append("")
            continue
        try:
            out.append(_fmt(call(), precision))
        except (SearchError, ArithmeticError, ValueError):
            out.append("ERR")
    return out


def cmd_table(args, config) -> tuple[list[str], list[list[str]], bool]:
    if args.which == "tab1":
        return _table_tab1(args.precision)
    if args.which == "tab2":
        return _table_tab2(args.precision)
    return _table_tab3(args.precision)


def _parse_float_list(text: str, what: str) -> list[float]:
    items = [s for s in (part.strip() for part in text.split(",")) if s]
    if not items:
        raise UsageError(f"empty {what} list")
    try:
        return [float(s) for s in items]
    except ValueError as exc:
        raise UsageError(f"bad {what} value: {exc}") from None


def cmd_scan(args, config) -> tuple[list[str], list[list[str]], bool]:
    a_values = _parse_float_list(args.a, "a")
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    if not methods:
        raise UsageError("empty methods list")
    for m in methods:
        if m not in METHODS:
            raise UsageError(f"unknown method {m!r}")
    if args.n_max < 0 or args.l_max < 0:
        raise UsageError("n-max and l-max must be >= 0")

    header = ["a", "n", "l"] + methods
    pairs = [(i, j) for i in range(len(methods)) for j in range(i + 1, len(methods))]
    header += [f"relerr_{methods[i]}_vs_{methods[j]}" for i, j in pairs]
    rows, failed = [], False
    for a in a_values:
        for n in range(args.n_max + 1):
            for l in range(args.l_max + 1):
                values = []
                cells = [_fmt(a, args.precision), str(n), str(l)]
                for m in methods:
                    try:
                        values.append(_eigenvalue(m, a, n, l))
                        cells.append(_fmt(values[-1], args.precision))
                    except (SearchError, ArithmeticError, ValueError):
                        values.append(math.nan)
                        cells.append("ERR")
                        failed = True
                for i, j in pairs:
                    if math.isnan(values[i]) or math.isnan(values[j]) or values[j] == 0.0:
                        cells.append("")
                    else:
                        cells.append(_fmt(abs(values[i] - values[j]) / abs(values[j]),
                                          args.precision))
                rows.append(cells)
    return header, rows, failed


def cmd_wavefunction(args, config) -> tuple[list[str], list[list[str]], bool]:
    if args.samples < 2:
        raise UsageError("samples must be >= 2")
    if args.xi_max <= 0.0:
        raise UsageError("xi-max must be positive")
    result = solve_shooting(args.a, args.n, args.l)
    count = max(series.DEFAULT_COUNT, int(12 * args.xi_max))
    params = series.SeriesParams(a=args.a, l=args.l, lam=result.lam)
    coeffs = series.coefficients_by_recurrence(params, count)
    while series.truncation_ratio(coeffs, args.xi_max) > 1e-10 and count < 800:
        count = int(1.5 * count)
        coeffs = series.coefficients_by_recurrence(params, count)

    grid = np.linspace(args.xi_max / args.samples, args.xi_max, args.samples)
    values = np.array([series.radial_wavefunction(coeffs, x).value for x in grid])
    peak = np.max(np.abs(values))
    if peak == 0.0 or not np.isfinite(peak):
        raise SearchError("wavefunction evaluation degenerated")
    values /= peak
    residuals = np.array([series.ode_residual(coeffs, x) for x in grid]) / peak

    header = ["xi", "R", "residual"]
    rows = [[_fmt(x, args.precision), _fmt(v, args.precision), _fmt(r, 3)]
            for x, v, r in zip(grid, values, residuals)]
    return header, rows, False


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "table"), default=None)
    common.add_argument("--output", default=None, metavar="PATH")
    common.add_argument("--config", default=None, metavar="PATH")
    common.add_argument("--precision", type=int, default=None, metavar="N")

    parser = argparse.ArgumentParser(
        prog="cornellspec",
        description="Eigenvalues of linear and Coulomb-plus-linear confining "
                    "potentials, and quarkonium mass tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eigen = sub.add_parser("eigen", parents=[common],
                             help="compute a single eigenvalue")
    p_eigen.add_argument("--method", choices=METHODS, default=None)
    p_eigen.add_argument("--a", type=float, default=None)
    p_eigen.add_argument("--n", type=int, default=0)
    p_eigen.add_argument("--l", type=int, default=0)
    p_eigen.add_argument("--potential", default=None, metavar="PRESET")

    p_table = sub.add_parser("table", parents=[common],
                             help="reproduce a built-in reference table")
    p_table.add_argument("which", choices=("tab1", "tab2", "tab3"))

    p_scan = sub.add_parser("scan", parents=[common],
                            help="method-comparison grid")
    p_scan.add_argument("--a", default="0", metavar="LIST")
    p_scan.add_argument("--n-max", type=int, default=0)
    p_scan.add_argument("--l-max", type=int, default=0)
    p_scan.add_argument("--methods", default="formula,shooting", metavar="LIST")

    p_wf = sub.add_parser("wavefunction", parents=[common],
                          help="sampled radial wavefunction (CSV of xi, R)")
    p_wf.add_argument("--a", type=float, default=0.0)
    p_wf.add_argument("--n", type=int, default=0)
    p_wf.add_argument("--l", type=int, default=0)
    p_wf.add_argument("--xi-max", type=float, default=8.0)
    p_wf.add_argument("--samples", type=int, default=200)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        config = _read_config(args.config) if args.config else {}
    except OSError as exc:
        print(f"cornellspec: cannot read config: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"cornellspec: {exc}", file=sys.stderr)
        return 2

    # config supplies defaults; explicit flags win
    if args.format is None:
        args.format = config.get("format", "table")
    if args.precision is None:
        args.precision = int(config.get("precision", "6"))
    if args.command == "eigen":
        if args.method is None:
            args.method = config.get("method")
        if args.method not in METHODS:
            print(f"cornellspec: missing or unknown --method", file=sys.stderr)
            return 2
    if args.precision < 1:
        print("cornellspec: --precision must be >= 1", file=sys.stderr)
        return 2

    failed = False
    try:
        if args.command == "eigen":
            header, rows = cmd_eigen(args, config)
        elif args.command == "table":
            header, rows, failed = cmd_table(args, config)
        elif args.command == "scan":
            header, rows, failed = cmd_scan(args, config)
        else:
            header, rows, failed = cmd_wavefunction(args, config)
    except UsageError as exc:
        print(f"cornellspec: {exc}", file=sys.stderr)
        return 2
    except (SearchError, ArithmeticError, ValueError, OverflowError) as exc:
        print(f"cornellspec: computation failed: {exc}", file=sys.stderr)
        return 1

    text = io.StringIO()
    _emit(rows, header, args.format, text)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text.getvalue())
    else:
        sys.stdout.write(text.getvalue())
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
