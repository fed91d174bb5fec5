"""Command-line front end.

Subcommands: solve (full pipeline), scan (mismatch table over the energy
window), potential (potential curve dump), oracle (finite-difference
eigenvalues only), compare (joint solver/oracle/analytic table).

Exit codes: 0 success with the full requested spectrum, 1 solver error,
2 usage error, 3 partial spectrum, 4 unwritable output. Errors print a
single machine-readable JSON line on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import replace
from pathlib import Path

from .errors import (NoTurningPointError, NumshootError, PartialSpectrumWarning,
                     TurningPointAtBoundaryError, UnscalableTrialError)
from .potentials import evaluate
from .presets import PRESET_NAMES, load_preset, parse_config_file
from .report import (MC_SAMPLES, run_solve, write_compare_table,
                     write_eigenfunction_tables, write_potential_table,
                     write_report, write_scan_table)
from .shooting import shoot

EXIT_OK = 0
EXIT_SOLVER = 1
EXIT_USAGE = 2
EXIT_PARTIAL = 3
EXIT_IO = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numshoot",
        description="Bound-state eigensolver: two-sided shooting with "
                    "fourth-order propagation and independent cross-checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--preset", choices=PRESET_NAMES,
                         help="bundled problem setup")
        src.add_argument("--config", type=Path,
                         help="flat key=value config file")
        p.add_argument("--out", type=Path, default=None,
                       help="output directory (default: runs/<name>)")
        p.add_argument("--seed", type=int, default=12345,
                       help="seed for the Monte Carlo re-checks")
        p.add_argument("--mode", choices=["auto", "paper-steps"], default=None,
                       help="energy search: automatic bracketing (default) or "
                            "the preset's fixed increment schedule")
        p.add_argument("--kernel", choices=["standard", "generalized"],
                       default=None,
                       help="propagation recurrence (generalized keeps the "
                            "first-derivative term of the radial equation)")
        p.add_argument("--paper-literal", action="store_true",
                       help="quantum dot: use the literal linear confinement "
                            "term (exponent 1) instead of the quadratic form")
        p.add_argument("--nmax", type=int, default=None,
                       help="override the number of states to find")
        p.add_argument("--symmetric-seeds", action="store_true",
                       help="use equal left/right boundary seed amplitudes")
        p.add_argument("--no-timing", action="store_true",
                       help="omit timing from the report (byte-stable output)")
        p.add_argument("--no-plot", action="store_true",
                       help="skip figure rendering")
        p.add_argument("--mc-samples", type=int, default=MC_SAMPLES,
                       help="hit-or-miss sample count per state")

    for name, help_text in (
            ("solve", "find the spectrum, normalize, cross-check, export"),
            ("scan", "dump the mismatch f(E) over the scan window"),
            ("potential", "dump the effective potential curve"),
            ("oracle", "run only the finite-difference eigensolver"),
            ("compare", "joint solver/oracle/analytic energy table")):
        add_common(sub.add_parser(name, help=help_text))
    return parser


def _load(args):
    if args.preset is not None:
        exponent = 1 if args.paper_literal else 2
        grid, potential, config = load_preset(args.preset, qdot_exponent=exponent)
        name = args.preset
    else:
        grid, potential, config = parse_config_file(args.config)
        name = args.config.stem
        if args.paper_literal and potential.kind == "quantum_dot":
            potential = replace(potential, exponent=1)
    if args.mode is not None:
        config = replace(config, scan_mode="paper_steps" if args.mode == "paper-steps"
                         else "auto_bracket")
    if args.kernel is not None:
        config = replace(config, kernel=args.kernel)
    if args.nmax is not None:
        config = replace(config, nmax=args.nmax)
    if args.symmetric_seeds:
        config = replace(config, delta_right=config.delta_left)
    out_dir = args.out if args.out is not None else Path("runs") / name
    return name, grid, potential, config, out_dir


def _fail(code: int, kind: str, message: str) -> int:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)
    return code


def cmd_solve(args) -> int:
    name, grid, potential, config, out_dir = _load(args)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", PartialSpectrumWarning)
        report = run_solve(grid, potential, config, preset=name, seed=args.seed,
                           mc_samples=args.mc_samples,
                           with_timing=not args.no_timing)
    write_report(report, out_dir)
    write_eigenfunction_tables(report, grid, out_dir)
    write_potential_table(grid, potential, out_dir)
    if not args.no_plot:
        from .plots import render_solve_figure
        render_solve_figure(report, grid, potential, out_dir)

    for row in report["states"]:
        line = (f"state {row['index']}: E = {row['energy']:.6f}"
                f"  nodes = {row['node_count']}")
        if row["oracle_energy"] is not None:
            line += f"  oracle = {row['oracle_energy']:.6f}"
        if row["analytic_energy"] is not None:
            line += f"  analytic = {row['analytic_energy']:.6f}"
        print(line)
    print(f"report written to {out_dir}")
    if not report["complete"]:
        print(json.dumps({"error": "PartialSpectrum",
                          "message": f"found {report['found_states']} of "
                                     f"{report['requested_states']} states"}),
              file=sys.stderr)
        return EXIT_PARTIAL
    return EXIT_OK


def cmd_scan(args) -> int:
    name, grid, potential, config, out_dir = _load(args)
    vv = evaluate(potential, grid.points())
    rows = []
    n_steps = int((config.v_max - config.e_in) / config.dE) + 1
    for j in range(n_steps):
        energy = config.e_in + j * config.dE
        if energy > config.v_max:
            break
        try:
            out = shoot(grid, potential, energy, config, v_samples=vv)
            rows.append((energy, out.mismatch if not out.diverged else None,
                         "ok" if not out.diverged else "diverged"))
        except NoTurningPointError:
            rows.append((energy, None, "no-turning-point"))
        except TurningPointAtBoundaryError:
            rows.append((energy, None, "turning-point-at-boundary"))
        except UnscalableTrialError:
            rows.append((energy, None, "unscalable"))
    write_scan_table(rows, out_dir)
    if not args.no_plot:
        from .plots import render_scan_figure
        render_scan_figure(rows, out_dir)
    print(f"{len(rows)} scan points written to {out_dir}")
    return EXIT_OK


def cmd_potential(args) -> int:
    name, grid, potential, config, out_dir = _load(args)
    write_potential_table(grid, potential, out_dir)
    if not args.no_plot:
        from .plots import render_potential_figure
        render_potential_figure(grid, potential, out_dir)
    print(f"potential table written to {out_dir}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    from .oracle import oracle_spectrum

    name, grid, potential, config, out_dir = _load(args)
    energies = oracle_spectrum(potential, grid, config.nmax)
    out_dir.mkdir(parents=True, exist_ok=True)
    payload = {"provenance": "oracle",
               "method": "tridiagonal finite difference, Sturm bisection",
               "energies": energies}
    (out_dir / "oracle.json").write_text(json.dumps(payload, indent=2,
                                                    sort_keys=True) + "\n")
    for idx, energy in enumerate(energies):
        print(f"oracle state {idx}: E = {energy:.10f}")
    return EXIT_OK


def cmd_compare(args) -> int:
    name, grid, potential, config, out_dir = _load(args)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", PartialSpectrumWarning)
        report = run_solve(grid, potential, config, preset=name, seed=args.seed,
                           mc_samples=args.mc_samples,
                           with_timing=not args.no_timing)
    write_compare_table(report, out_dir)
    print("state  numerov        oracle         analytic")
    for row in report["states"]:
        orc = "-" if row["oracle_energy"] is None else f"{row['oracle_energy']:.8f}"
        ana = "-" if row["analytic_energy"] is None else f"{row['analytic_energy']:.8f}"
        print(f"{row['index']:>5}  {row['energy']:<13.8f}  {orc:<13}  {ana}")
    return EXIT_PARTIAL if not report["complete"] else EXIT_OK


COMMANDS = {"solve": cmd_solve, "scan": cmd_scan, "potential": cmd_potential,
            "oracle": cmd_oracle, "compare": cmd_compare}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except OSError as exc:
        return _fail(EXIT_IO, type(exc).__name__, str(exc))
    except NumshootError as exc:
        return _fail(EXIT_SOLVER, type(exc).__name__, str(exc))


if __name__ == "__main__":
    sys.exit(main())
