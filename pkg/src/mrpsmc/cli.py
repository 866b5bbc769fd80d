"""Command-line front end: simulate, verify, and sweep subcommands."""

import argparse
import sys

from .plots import emit_plots
from .scenario import ScenarioError, load_scenario, reference_scenario
from .sweep import format_table, run_sweep, write_sweep_csv
from .telemetry import run_simulation, write_csv
from .verify import run_checks


def _load(config: str):
    """Load a scenario path; the name 'reference' selects the bundled case."""
    if config == "reference":
        return reference_scenario()
    return load_scenario(config)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="mrpsmc",
        description="Rigid-body attitude simulation with a linear continuous "
                    "sliding-mode MRP controller.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="run a scenario and write telemetry")
    p_sim.add_argument("--config", required=True,
                       help="scenario JSON file, or 'reference'")
    p_sim.add_argument("--out", required=True, help="output telemetry CSV path")
    p_sim.add_argument("--plots", help="directory for the six SVG charts")

    p_ver = sub.add_parser("verify", help="run the invariant suite on a scenario")
    p_ver.add_argument("--config", required=True,
                       help="scenario JSON file, or 'reference'")

    p_swp = sub.add_parser("sweep", help="Monte Carlo sweep over initial conditions")
    p_swp.add_argument("--config", required=True,
                       help="scenario JSON file, or 'reference'")
    p_swp.add_argument("--samples", type=int, required=True, help="number of runs")
    p_swp.add_argument("--seed", type=int, required=True, help="RNG seed")
    p_swp.add_argument("--omega-range", type=float, required=True,
                       help="half-width of the angular-velocity box (rad/s)")
    p_swp.add_argument("--sigma-range", type=float, required=True,
                       help="half-width of the initial-attitude box")
    p_swp.add_argument("--out", required=True, help="output summary CSV path")

    args = parser.parse_args(argv)

    try:
        scenario = _load(args.config)
    except (ScenarioError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.command == "simulate":
        records = run_simulation(scenario)
        write_csv(records, args.out)
        print(f"wrote {len(records)} records to {args.out}")
        if args.plots:
            emit_plots(records, args.plots)
            print(f"wrote plots to {args.plots}")
        return 0

    if args.command == "verify":
        report = run_checks(scenario)
        print(report.format())
        return 0 if report.passed else 1

    rows = run_sweep(scenario, args.samples, args.seed,
                     args.omega_range, args.sigma_range)
    write_sweep_csv(rows, args.out)
    print(format_table(rows))
    print(f"wrote summary to {args.out}")
    return 0 if all(r.status == "ok" for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
