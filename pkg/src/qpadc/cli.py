"""Command-line interface.

Subcommands: simulate (write a probability trace), verify (recheck
solution records), search (run the genetic algorithm), speed (peak drift
rate of a rule), oracle (cross-check the fast kernel against the dense
one). Exit status is 0 on success, 1 when a verification criterion
fails, 2 on usage or input errors.

The search command layers its settings as flags > config file > the
QPADC_SEED environment variable (seed only) > built-in defaults. Config
files are plain text key=value lines; '#' starts a comment.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .evolution import basis_state, evolve, probabilities
from .ga import GAConfig, GenerationRecord, run_ga
from .heatmap import write_heatmap_csv, write_heatmap_pgm
from .oracle import dense_evolve, measure_speed
from .solutions import (ALL_RUNS, SolutionRecord, dataset_passes,
                        format_record, load_records, verify_records)
from .unitary import UnitaryParams

SEED_ENV_VAR = "QPADC_SEED"

# Config file keys for the search command, with their parsers.
_SEARCH_KEYS = {
    "pop_size": int,
    "max_gen": int,
    "crossover_rate": float,
    "mutation_rate": float,
    "theta_std": float,
    "phase_std": float,
    "z_std": float,
    "code": str,
    "max_steps": int,
    "n_digits": int,
    "seed": int,
}


def _add_angle_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--theta", type=float, required=True,
                        help="mixing angle in degrees, 0 (swap) to 90 (hold)")
    parser.add_argument("--alpha", type=float, default=0.0,
                        help="phase angle in degrees (default 0)")
    parser.add_argument("--beta", type=float, default=0.0,
                        help="phase angle in degrees (default 0)")
    parser.add_argument("--gamma", type=float, default=0.0,
                        help="phase angle in degrees (default 0)")


def _params(args: argparse.Namespace) -> UnitaryParams:
    return UnitaryParams.from_angles(args.theta, args.alpha, args.beta,
                                     args.gamma)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpadc",
        description="Particle automaton simulation and rule search for "
                    "density classification.")
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="evolve a basis state and write "
                                          "the probability trace")
    _add_angle_args(sim)
    sim.add_argument("--cells", type=int, default=32)
    sim.add_argument("--start", type=int, default=0,
                     help="cell carrying the particle at step 0")
    sim.add_argument("--steps", type=int, default=2048)
    sim.add_argument("--output", required=True)
    sim.add_argument("--format", choices=("csv", "pgm"), default="csv")
    sim.add_argument("--compat6", action="store_true",
                     help="write CSV values with 6 decimal places instead "
                          "of full precision")
    sim.add_argument("--pgm-binary", action="store_true",
                     help="write raw (P5) instead of ASCII (P2) PGM")

    ver = sub.add_parser("verify", help="recheck solution records against "
                                        "a fresh evolution")
    ver.add_argument("--dataset",
                     help="solution-record CSV (default: the built-in "
                          "reference set)")
    ver.add_argument("--max-steps", type=int, default=2048)

    sea = sub.add_parser("search", help="genetic search for a rule")
    sea.add_argument("--config", help="key=value settings file")
    sea.add_argument("--pop-size", type=int)
    sea.add_argument("--max-gen", type=int)
    sea.add_argument("--crossover-rate", type=float)
    sea.add_argument("--mutation-rate", type=float)
    sea.add_argument("--theta-std", type=float)
    sea.add_argument("--phase-std", type=float)
    sea.add_argument("--z-std", type=float)
    sea.add_argument("--code", choices=("binary", "gray"))
    sea.add_argument("--max-steps", type=int)
    sea.add_argument("--n-digits", type=int)
    sea.add_argument("--seed", type=int,
                     help=f"master seed (also read from ${SEED_ENV_VAR})")
    sea.add_argument("--solutions",
                     help="append the best individual to this record CSV")
    sea.add_argument("--history",
                     help="write per-generation statistics to this CSV")
    sea.add_argument("--run-id", type=int, default=1,
                     help="run identifier used in the appended record")
    sea.add_argument("--progress", action="store_true",
                     help="print one line per generation")

    spd = sub.add_parser("speed", help="least-squares drift rate of the "
                                       "probability peak")
    _add_angle_args(spd)
    spd.add_argument("--cells", type=int, default=256,
                     help="lattice size; the default keeps the packet off "
                          "the wrap inside the default window")
    spd.add_argument("--start", type=int, default=0)
    spd.add_argument("--window-start", type=int, default=1)
    spd.add_argument("--window-end", type=int, default=64)

    orc = sub.add_parser("oracle", help="compare the pairwise kernel with "
                                        "the dense reference evolution")
    _add_angle_args(orc)
    orc.add_argument("--cells", type=int, default=32)
    orc.add_argument("--start", type=int, default=0)
    orc.add_argument("--steps", type=int, default=64)
    orc.add_argument("--tolerance", type=float, default=1e-12)

    return parser


def cmd_simulate(args: argparse.Namespace) -> int:
    trace = evolve(basis_state(args.cells, args.start), _params(args),
                   args.steps)
    probs = probabilities(trace)
    if args.format == "csv":
        write_heatmap_csv(probs, args.output, compat6=args.compat6)
    else:
        write_heatmap_pgm(probs, args.output, binary=args.pgm_binary)
    print(f"wrote {probs.shape[0]} steps x {probs.shape[1]} cells "
          f"to {args.output}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    records = load_records(args.dataset) if args.dataset else list(ALL_RUNS)
    results = verify_records(records, max_steps=args.max_steps)
    for result in results:
        record = result.record
        report = result.report
        status = "ok" if result.passed else "FAIL"
        print(f"{record.code:>6} run {record.run_id:>2}: "
              f"fitness {report.fitness}/32 at step {report.best_step} "
              f"(recorded {record.m_steps}, delta {result.step_delta:+d}) "
              f"{status}")
    solved = sum(1 for result in results if result.solved)
    passed = dataset_passes(results)
    print(f"{solved}/{len(results)} records solved; "
          f"{'PASS' if passed else 'FAIL'}")
    return 0 if passed else 1


def _load_config_file(path: str) -> dict:
    values = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(
                    f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _SEARCH_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown setting {key!r}")
            try:
                values[key] = _SEARCH_KEYS[key](value.strip())
            except ValueError:
                raise ValueError(
                    f"{path}:{lineno}: bad value for {key}: "
                    f"{value.strip()!r}") from None
    return values


def _resolve_search_settings(args: argparse.Namespace) -> dict:
    config = _load_config_file(args.config) if args.config else {}
    settings = {}
    for key in _SEARCH_KEYS:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            settings[key] = flag_value
        elif key in config:
            settings[key] = config[key]
    if "seed" not in settings and os.environ.get(SEED_ENV_VAR):
        raw = os.environ[SEED_ENV_VAR]
        try:
            settings["seed"] = int(raw)
        except ValueError:
            raise ValueError(
                f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from None
    return settings


def _z_bits_string(z: int, num_cells: int = 32) -> str:
    return "".join(str((z >> j) & 1) for j in range(num_cells))


def _history_line(record: GenerationRecord) -> str:
    best = record.best
    return (f"{record.generation},{record.best_fitness},"
            f"{record.mean_fitness:.17g},"
            f"{best.theta:.17g},{best.alpha:.17g},{best.beta:.17g},"
            f"{best.gamma:.17g},{best.z}")


def cmd_search(args: argparse.Namespace) -> int:
    settings = _resolve_search_settings(args)
    seed = settings.pop("seed", 0)
    cfg = GAConfig(master_seed=seed, **settings)

    history_handle = open(args.history, "w", encoding="utf-8") \
        if args.history else None

    def on_generation(record: GenerationRecord) -> None:
        if history_handle is not None:
            history_handle.write(_history_line(record) + "\n")
        if args.progress:
            print(f"generation {record.generation}: "
                  f"best {record.best_fitness}, "
                  f"mean {record.mean_fitness:.3f}")

    try:
        if history_handle is not None:
            history_handle.write(
                "# generation,best_f,mean_f,theta,alpha,beta,gamma,z\n")
        result = run_ga(cfg, on_generation=on_generation)
    finally:
        if history_handle is not None:
            history_handle.close()

    best = result.best
    print(f"best fitness {best.fitness}/{cfg.full_score} "
          f"at step {best.best_step} after "
          f"{result.history[-1].generation} generations")
    print(f"theta={best.theta:.6f} alpha={best.alpha:.6f} "
          f"beta={best.beta:.6f} gamma={best.gamma:.6f} z={best.z}")

    if args.solutions:
        if cfg.n_digits != 5:
            print("solution records are 32-cell only; skipping record write")
        else:
            z_bits = _z_bits_string(best.z)
            record = SolutionRecord(
                run_id=args.run_id, code=cfg.code, theta=best.theta,
                alpha=best.alpha, beta=best.beta, gamma=best.gamma,
                z_bits=z_bits, m_steps=best.best_step,
                zero_bit_count=z_bits.count("0"))
            is_new = not os.path.exists(args.solutions) \
                or os.path.getsize(args.solutions) == 0
            with open(args.solutions, "a", encoding="utf-8") as handle:
                if is_new:
                    handle.write("# " + ",".join(
                        ("run_id", "code", "theta", "alpha", "beta", "gamma",
                         "z_bits", "m_steps", "zero_bit_count")) + "\n")
                handle.write(format_record(record) + "\n")
            print(f"appended record to {args.solutions}")
    return 0


def cmd_speed(args: argparse.Namespace) -> int:
    trace = evolve(basis_state(args.cells, args.start), _params(args),
                   args.window_end)
    estimate = measure_speed(trace,
                             window=(args.window_start, args.window_end))
    print(f"speed {estimate.speed:.6f} cells/step over steps "
          f"[{estimate.window[0]}, {estimate.window[1]}] "
          f"on {args.cells} cells")
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    state = basis_state(args.cells, args.start)
    params = _params(args)
    fast = evolve(state, params, args.steps)
    slow = dense_evolve(state, params, args.steps)
    deviation = float(np.abs(fast - slow).max())
    print(f"max deviation {deviation:.3e} over {args.steps} steps "
          f"on {args.cells} cells (tolerance {args.tolerance:.3e})")
    if deviation < args.tolerance:
        print("kernels agree")
        return 0
    print("kernels disagree")
    return 1


_COMMANDS = {
    "simulate": cmd_simulate,
    "verify": cmd_verify,
    "search": cmd_search,
    "speed": cmd_speed,
    "oracle": cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
