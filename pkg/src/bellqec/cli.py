"""Command-line front end: parameter sweeps and closed-form verification.

``bellqec sweep`` runs the full simulation over an error-probability grid
and emits one row per (p, case, qec, quantity) with the simulated value,
the analytic reference value and their absolute difference, as CSV or
JSON.  ``bellqec verify`` runs the whole comparison grid and fails (exit
status 1) if any deviation exceeds the tolerance, making it usable as a
CI gate.  Exit status 2 signals a usage error.

Everything is deterministic: the same invocation yields byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import closed_form, metrics, protocols
from .channels import noisy_bell
from .qec import corrected_pair

CASES = ("I", "II")
QUANTITIES = ("concurrence", "bmax", "mutual_info", "fidelity")

CSV_HEADER = "p,case,qec,quantity,simulated,closed_form,abs_error"


@dataclass(frozen=True)
class SweepConfig:
    cases: tuple[str, ...]
    quantities: tuple[str, ...]
    p_min: float
    p_max: float
    steps: int
    qec_flags: tuple[bool, ...]


@dataclass(frozen=True)
class SweepRow:
    p: float
    case: str
    qec: bool
    quantity: str
    simulated: float
    closed_form: float

    @property
    def abs_error(self) -> float:
        return abs(self.simulated - self.closed_form)


def _simulated_value(quantity: str, case: str, p: float, qec: bool) -> float:
    if quantity == "concurrence":
        rho = corrected_pair(case, p) if qec else noisy_bell(case, p)
        return metrics.concurrence(rho)
    if quantity == "bmax":
        rho = corrected_pair(case, p) if qec else noisy_bell(case, p)
        return metrics.chsh_max(rho)
    if quantity == "mutual_info":
        return protocols.dense_coding(case, p, with_qec=qec).mutual_information
    if quantity == "fidelity":
        return protocols.avg_teleport_fidelity(case, p, with_qec=qec)
    raise ValueError(f"unknown quantity {quantity!r}")


def _closed_form_value(quantity: str, case: str, p: float, qec: bool) -> float:
    if quantity == "concurrence":
        return closed_form.concurrence(case, p, with_qec=qec)
    if quantity == "bmax":
        return closed_form.chsh_max(case, p, with_qec=qec)
    if quantity == "mutual_info":
        return closed_form.mutual_information(case, p, with_qec=qec)
    if quantity == "fidelity":
        return closed_form.avg_fidelity(case, p, with_qec=qec)
    raise ValueError(f"unknown quantity {quantity!r}")


def generate_rows(config: SweepConfig) -> list[SweepRow]:
    """All sweep rows, sorted by p ascending with a fixed inner order."""
    rows = []
    for p in np.linspace(config.p_min, config.p_max, config.steps):
        p = float(p)
        for case in config.cases:
            for qec in config.qec_flags:
                for quantity in config.quantities:
                    rows.append(SweepRow(
                        p=p, case=case, qec=qec, quantity=quantity,
                        simulated=_simulated_value(quantity, case, p, qec),
                        closed_form=_closed_form_value(quantity, case, p, qec),
                    ))
    return rows


def _fmt(x: float) -> str:
    return format(x, ".15g")


def render_csv(rows: list[SweepRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(",".join((
            _fmt(r.p), r.case, "on" if r.qec else "off", r.quantity,
            _fmt(r.simulated), _fmt(r.closed_form), _fmt(r.abs_error),
        )))
    return "\n".join(lines) + "\n"


def render_json(rows: list[SweepRow]) -> str:
    payload = [
        {
            "p": r.p,
            "case": r.case,
            "qec": "on" if r.qec else "off",
            "quantity": r.quantity,
            "simulated": r.simulated,
            "closed_form": r.closed_form,
            "abs_error": r.abs_error,
        }
        for r in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def _write_output(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _expand(value: str, options: tuple[str, ...]) -> tuple[str, ...]:
    return options if value == "both" else (value,)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellqec",
        description="Noisy Bell-pair simulation with three-qubit error correction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="simulate metric curves over an error-probability grid")
    sweep.add_argument("--case", choices=("I", "II", "both"), default="both")
    sweep.add_argument("--quantity", choices=QUANTITIES + ("all",), default="all",
                       help="bmax is the maximal CHSH expectation value")
    sweep.add_argument("--p-min", type=float, default=0.0)
    sweep.add_argument("--p-max", type=float, default=1.0)
    sweep.add_argument("--steps", type=int, default=101)
    sweep.add_argument("--qec", choices=("on", "off", "both"), default="both")
    sweep.add_argument("--output-format", choices=("csv", "json"), default="csv")
    sweep.add_argument("--output-path", default="-", help="file path, or - for stdout")

    verify = sub.add_parser("verify", help="compare every simulated curve to its closed form")
    verify.add_argument("--steps", type=int, default=101)
    verify.add_argument("--tolerance", type=float, default=1e-9)
    return parser


def _sweep_config(parser: argparse.ArgumentParser, args: argparse.Namespace) -> SweepConfig:
    if not (0.0 <= args.p_min <= args.p_max <= 1.0):
        parser.error(f"need 0 <= p-min <= p-max <= 1, got {args.p_min}, {args.p_max}")
    if args.steps < 1:
        parser.error(f"steps must be >= 1, got {args.steps}")
    qec_flags = {"off": (False,), "on": (True,), "both": (False, True)}[args.qec]
    return SweepConfig(
        cases=_expand(args.case, CASES),
        quantities=QUANTITIES if args.quantity == "all" else (args.quantity,),
        p_min=args.p_min,
        p_max=args.p_max,
        steps=args.steps,
        qec_flags=qec_flags,
    )


def _cmd_sweep(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    rows = generate_rows(_sweep_config(parser, args))
    text = render_csv(rows) if args.output_format == "csv" else render_json(rows)
    try:
        _write_output(text, args.output_path)
    except OSError as exc:
        print(f"error: cannot write {args.output_path}: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.steps < 1:
        parser.error(f"steps must be >= 1, got {args.steps}")
    config = SweepConfig(
        cases=CASES, quantities=QUANTITIES,
        p_min=0.0, p_max=1.0, steps=args.steps, qec_flags=(False, True),
    )
    rows = generate_rows(config)

    print(f"closed-form verification, {args.steps} grid points, tolerance {args.tolerance:g}")
    print(f"{'case':<5}{'qec':<5}{'quantity':<13}{'max_abs_error':>14}")
    offenders = [r for r in rows if r.abs_error > args.tolerance]
    for case in config.cases:
        for qec in config.qec_flags:
            for quantity in config.quantities:
                group = [r.abs_error for r in rows
                         if r.case == case and r.qec == qec and r.quantity == quantity]
                flag = "on" if qec else "off"
                print(f"{case:<5}{flag:<5}{quantity:<13}{max(group):>14.3e}")

    if offenders:
        print(f"\nFAIL: {len(offenders)} grid points above tolerance:")
        for r in offenders:
            print(f"  case {r.case}, qec {'on' if r.qec else 'off'}, "
                  f"{r.quantity}, p={_fmt(r.p)}: |{_fmt(r.simulated)} - "
                  f"{_fmt(r.closed_form)}| = {r.abs_error:.3e}")
        return 1
    print("\nPASS: every simulated value matches its closed form")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "sweep":
        return _cmd_sweep(parser, args)
    return _cmd_verify(parser, args)


if __name__ == "__main__":
    sys.exit(main())
