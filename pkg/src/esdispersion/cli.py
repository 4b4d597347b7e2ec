"""Command-line surface emitting tables, figure data, and point values.

Commands
--------
eval      boundary values on a mu grid, or the dispersion function at z = N i
zero      exact and asymptotic zero with residuals and the modulus error
critical  critical frequency and its argmax for one parameter set
table     critical frequencies for a = 0, 0.1, ..., 1 with reference values
figure    data series behind the numbered figures (1..7)
sweep     zero comparison over a frequency grid

All output is UTF-8 with LF line endings, a mandatory header row, and
``#``-prefixed metadata lines (CSV) or a ``meta`` object (JSON).  Floats
are printed with 12 significant digits; identical flags produce
byte-identical output.

Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 empty
discrete spectrum (``zero`` with index 0).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Callable, Sequence

from .dispersion import FlowParams, lambda_at, lambda_boundary, theta_profile
from .errors import EsDispersionError, NoDiscreteSpectrumError
from .specfun import QuadratureSpec
from .spectrum import critical_frequency, critical_point
from .zeros import eta0_asymptotic, eta0_exact, zero_sweep

# Published reference values for the critical-frequency table, keyed by a.
REFERENCE_OMEGA_STAR = {
    0.0: 0.733,
    0.1: 0.717,
    0.2: 0.717,
    0.3: 0.691,
    0.4: 0.681,
    0.5: 0.672,
    0.6: 0.662,
    0.7: 0.654,
    0.8: 0.648,
    0.9: 0.642,
    1.0: 0.637,
}

_OMEGA_BOX = (0.0, 2.0)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: D102 (argparse hook)
        raise _UsageError(message)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    return f"{float(value):.12g}"


def _json_value(value):
    if value is None or isinstance(value, (str, bool, int)):
        return value
    return float(f"{float(value):.12g}")


def _emit(args, meta: dict, columns: list[str], rows: list[list]) -> None:
    if args.format == "json":
        payload = {
            "meta": {k: _json_value(v) for k, v in meta.items()},
            "columns": columns,
            "rows": [
                {col: _json_value(v) for col, v in zip(columns, row)} for row in rows
            ],
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [f"# {k}={_fmt(v)}" for k, v in meta.items()]
        lines.append(",".join(columns))
        lines.extend(",".join(_fmt(v) for v in row) for row in rows)
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _grid_values(start: float, stop: float, step: float) -> list[float]:
    if step <= 0:
        raise _UsageError("grid step must be positive")
    if stop < start:
        raise _UsageError("grid stop must not precede start")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + k * step, 12) for k in range(count)]


def _parse_grid(text: str) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise _UsageError(f"--grid expects start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(s) for s in parts)
    except ValueError as exc:
        raise _UsageError(f"--grid expects numbers, got {text!r}") from exc
    return _grid_values(start, stop, step)


def _check_omega(value: float) -> float:
    if not (_OMEGA_BOX[0] <= value <= _OMEGA_BOX[1]):
        raise _UsageError(
            f"--omega must lie in [{_OMEGA_BOX[0]}, {_OMEGA_BOX[1]}], got {value}"
        )
    return value


def _resolve_params(args, omega: float) -> FlowParams:
    try:
        if args.prandtl is not None:
            return FlowParams.from_prandtl(omega, args.prandtl)
        return FlowParams(omega, args.a)
    except EsDispersionError as exc:
        raise _UsageError(str(exc)) from exc


def _resolve_spec(args) -> QuadratureSpec:
    try:
        return QuadratureSpec(rel_tol=args.rel_tol, tau_max=args.tau_max)
    except EsDispersionError as exc:
        raise _UsageError(str(exc)) from exc


def _base_meta(command: str, args, p: FlowParams | None = None) -> dict:
    meta: dict = {"command": command}
    if p is not None:
        meta["omega"] = p.omega
        meta["a"] = p.a
        meta["prandtl"] = p.prandtl
    meta["tau_max"] = args.tau_max
    meta["rel_tol"] = args.rel_tol
    return meta


def _cmd_eval(args) -> int:
    spec = _resolve_spec(args)
    if args.omega is None:
        raise _UsageError("eval requires --omega")
    p = _resolve_params(args, _check_omega(args.omega))
    if args.grid is not None:
        meta = _base_meta("eval", args, p)
        meta["series"] = "boundary values on the real axis"
        columns = ["mu", "re_plus", "im_plus", "re_minus", "im_minus"]
        rows = []
        for mu in _parse_grid(args.grid):
            bv = lambda_boundary(p, mu)
            rows.append([mu, bv.plus.real, bv.plus.imag, bv.minus.real, bv.minus.imag])
        _emit(args, meta, columns, rows)
        return 0
    n = args.eval_point
    if n < 1:
        raise _UsageError("--eval-point must be a positive integer")
    lam = lambda_at(p, complex(0.0, float(n)), spec)
    meta = _base_meta("eval", args, p)
    meta["eval_point"] = n
    _emit(args, meta, ["n", "re_lambda", "im_lambda"], [[n, lam.real, lam.imag]])
    return 0


def _cmd_zero(args) -> int:
    spec = _resolve_spec(args)
    if args.omega is None:
        raise _UsageError("zero requires --omega")
    p = _resolve_params(args, _check_omega(args.omega))
    n = args.eval_point
    if n < 1:
        raise _UsageError("--eval-point must be a positive integer")
    try:
        exact = eta0_exact(p, N=n, spec=spec)
    except NoDiscreteSpectrumError:
        sys.stderr.write("no discrete spectrum (kappa=0)\n")
        return 3
    approx = eta0_asymptotic(p, spec)
    o_signed = (abs(exact.eta0) - abs(approx.eta0)) / abs(exact.eta0) * 100.0
    omega_star = critical_frequency(p.a)
    meta = _base_meta("zero", args, p)
    meta["eval_point"] = n
    columns = [
        "omega",
        "a",
        "kappa",
        "omega_star",
        "re_eta0",
        "im_eta0",
        "abs_eta0",
        "residual",
        "re_eta0_as",
        "im_eta0_as",
        "abs_eta0_as",
        "residual_as",
        "o_signed",
        "o_abs",
    ]
    rows = [
        [
            p.omega,
            p.a,
            1,
            omega_star,
            exact.eta0.real,
            exact.eta0.imag,
            abs(exact.eta0),
            exact.residual,
            approx.eta0.real,
            approx.eta0.imag,
            abs(approx.eta0),
            approx.residual,
            o_signed,
            abs(o_signed),
        ]
    ]
    _emit(args, meta, columns, rows)
    return 0


def _cmd_critical(args) -> int:
    p = _resolve_params(args, 0.0)
    cp = critical_point(p.a)
    meta = _base_meta("critical", args, p)
    del meta["omega"]
    columns = ["prandtl", "a", "omega_star", "argmax_tau"]
    _emit(args, meta, columns, [[p.prandtl, p.a, cp.omega_star, cp.tau_star]])
    return 0


def _cmd_table(args) -> int:
    meta = {"command": "table", "tau_max": args.tau_max, "rel_tol": args.rel_tol}
    columns = ["prandtl", "a", "omega_star", "argmax_tau", "paper_value"]
    rows = []
    for k in range(11):
        a = round(0.1 * k, 1)
        try:
            cp = critical_point(a)
        except EsDispersionError as exc:
            sys.stderr.write(f"row a={a} failed: {exc}\n")
            return 2
        rows.append([2.0 / (2.0 + a), a, cp.omega_star, cp.tau_star, REFERENCE_OMEGA_STAR[a]])
    _emit(args, meta, columns, rows)
    return 0


def _boundary_series(
    combos: Sequence[tuple[float, float]],
    xs: Sequence[float],
    pick: Callable,
) -> list[list[float]]:
    params = [FlowParams(om, a) for a, om in combos]
    rows = []
    for x in xs:
        row = [x]
        for p in params:
            row.append(pick(lambda_boundary(p, x)))
        rows.append(row)
    return rows


def _cmd_figure(args) -> int:
    spec = _resolve_spec(args)
    fig = args.figure
    if fig is None:
        raise _UsageError("figure requires --figure N with N in 1..7")
    if fig not in range(1, 8):
        raise _UsageError(f"--figure must be in 1..7, got {fig}")
    meta = {"command": "figure", "figure": fig, "tau_max": args.tau_max, "rel_tol": args.rel_tol}
    xs = _grid_values(-4.0, 4.0, 0.02)
    if fig in (1, 2):
        combos = [(1.0, 0.637), (0.0, 0.637)]
        part = (lambda bv: bv.plus.real) if fig == 1 else (lambda bv: bv.minus.real)
        side = "plus" if fig == 1 else "minus"
        meta["series"] = f"re lambda_{side}(x)"
        meta["curve1"] = "prandtl=2/3 omega=0.637"
        meta["curve2"] = "prandtl=1 omega=0.637"
        rows = _boundary_series(combos, xs, part)
        _emit(args, meta, ["x", "curve1", "curve2"], rows)
        return 0
    if fig in (3, 4):
        combos = [(1.0, 0.1), (1.0, 1.0), (0.0, 0.637)]
        part = (lambda bv: bv.plus.imag) if fig == 3 else (lambda bv: bv.minus.imag)
        side = "plus" if fig == 3 else "minus"
        meta["series"] = f"im lambda_{side}(x)"
        meta["curve1"] = "prandtl=2/3 omega=0.1"
        meta["curve2"] = "prandtl=2/3 omega=1"
        meta["curve3"] = "prandtl=1 omega=0.637"
        rows = _boundary_series(combos, xs, part)
        _emit(args, meta, ["x", "curve1", "curve2", "curve3"], rows)
        return 0
    if fig == 5:
        meta["series"] = "continuous argument theta(x), odd in x"
        meta["curve1"] = "prandtl=2/3 omega=0.1"
        meta["curve2"] = "prandtl=2/3 omega=0.5"
        grid = _grid_values(0.0, args.tau_max, 0.02)
        curves = []
        for om in (0.1, 0.5):
            prof = theta_profile(FlowParams(om, 1.0), grid, spec)
            theta = prof.on_grid()
            lookup = dict(zip(grid, theta))
            curves.append(lookup)
        rows = []
        for x in xs:
            ax = round(abs(x), 12)
            sign = -1.0 if x < 0 else 1.0
            rows.append([x] + [sign * c[ax] for c in curves])
        _emit(args, meta, ["x", "curve1", "curve2"], rows)
        return 0
    # figures 6 and 7: zero-modulus comparison sweep at prandtl = 2/3
    a = 1.0
    omega_star = critical_frequency(a)
    if args.grid is not None:
        grid = _parse_grid(args.grid)
    else:
        grid = _grid_values(0.005, omega_star - 1e-9, 0.005)
    meta["series"] = (
        "zero modulus comparison" if fig == 6 else "relative modulus error of the asymptotic zero"
    )
    meta["a"] = a
    meta["prandtl"] = 2.0 / 3.0
    meta["omega_star"] = omega_star
    rows = [
        [r.omega, r.abs_eta0, r.abs_eta0_as, r.o_signed, r.o_abs, r.status]
        for r in zero_sweep(a, grid, spec)
    ]
    _emit(args, meta, ["omega", "abs_eta0", "abs_eta0_as", "o_signed", "o_abs", "status"], rows)
    return 0


def _cmd_sweep(args) -> int:
    spec = _resolve_spec(args)
    p = _resolve_params(args, 0.0)
    if args.grid is not None:
        grid = _parse_grid(args.grid)
    else:
        omega_star = critical_frequency(p.a)
        grid = _grid_values(0.005, omega_star - 1e-9, 0.005)
    for om in grid:
        if not (_OMEGA_BOX[0] <= om <= _OMEGA_BOX[1]):
            raise _UsageError(f"grid value {om} outside the omega box {_OMEGA_BOX}")
    meta = _base_meta("sweep", args, p)
    del meta["omega"]
    rows = [
        [r.omega, r.abs_eta0, r.abs_eta0_as, r.o_signed, r.o_abs, r.status]
        for r in zero_sweep(p.a, grid, spec)
    ]
    _emit(args, meta, ["omega", "abs_eta0", "abs_eta0_as", "o_signed", "o_abs", "status"], rows)
    return 0


_DISPATCH = {
    "eval": _cmd_eval,
    "zero": _cmd_zero,
    "critical": _cmd_critical,
    "table": _cmd_table,
    "figure": _cmd_figure,
    "sweep": _cmd_sweep,
}


def _add_common(parser: _Parser, with_params: bool) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", default=None, help="output path (default: stdout)")
    parser.add_argument("--tau-max", type=float, default=8.0, dest="tau_max")
    parser.add_argument("--rel-tol", type=float, default=1e-10, dest="rel_tol")
    parser.add_argument("--grid", default=None, help="start:stop:step")
    if with_params:
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument("--a", type=float, default=None)
        group.add_argument("--prandtl", type=float, default=None)
        parser.add_argument("--omega", type=float, default=None)
        parser.add_argument("--eval-point", type=int, default=1, dest="eval_point")


def _build_parser() -> _Parser:
    parser = _Parser(prog="esdispersion", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name, with_params in (
        ("eval", True),
        ("zero", True),
        ("critical", True),
        ("table", False),
        ("figure", False),
        ("sweep", True),
    ):
        cmd = sub.add_parser(name)
        _add_common(cmd, with_params)
        if name == "figure":
            cmd.add_argument("--figure", type=int, default=None)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise _UsageError("a command is required (eval, zero, critical, table, figure, sweep)")
        return _DISPATCH[args.command](args)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        sys.stderr.write(parser.format_usage())
        return 1
    except EsDispersionError as exc:
        sys.stderr.write(f"numerical failure: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
