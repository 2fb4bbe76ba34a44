"""Command-line driver and benchmark grid.

Exit codes: 0 success, 1 configuration error (bad flag or value), 2 data
error (missing/malformed input, zero-norm rows, infeasible data). One
summary CSV line is printed per seeded run; timing columns are the only
non-deterministic output.
"""

import argparse
import statistics
import sys
import time
from pathlib import Path

from . import corpus_io, engine, validation
from .errors import ConfigError, InfeasibleError, ParseError, ZeroNormError
from .seeding import METHODS, SeedConfig

SUMMARY_HEADER = "seed,variant,k,iterations,total_sims,total_cc_sims,objective,wall_ns"


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgumentError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="spkmeans", description=__doc__)
    p.add_argument("--input", required=True, help="SVMlight/libsvm corpus")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--variant", default="standard", choices=engine.VARIANTS)
    p.add_argument("--init", default="uniform", choices=METHODS)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--chain-length", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("--tfidf", action="store_true")
    p.add_argument("--tfidf-smooth", action="store_true")
    p.add_argument("--out-assignments", default=None)
    p.add_argument("--out-stats", default=None)
    p.add_argument("--audit", action="store_true",
                   help="recompute exact similarities at every pruning "
                        "decision and report worst bound violations")
    return p


def _per_seed_path(base: str, seed: int, repeats: int) -> Path:
    path = Path(base)
    if repeats == 1:
        return path
    return path.with_name(f"{path.stem}.seed{seed}{path.suffix}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.k < 1:
            raise ConfigError("--k must be >= 1")
        if args.repeats < 1:
            raise ConfigError("--repeats must be >= 1")
        if args.max_iter < 1:
            raise ConfigError("--max-iter must be >= 1")
        if not 1.0 <= args.alpha <= 2.0:
            raise ConfigError("--alpha must be in [1, 2]")
        if args.chain_length < 1:
            raise ConfigError("--chain-length must be >= 1")
    except (_ArgumentError, ConfigError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1

    try:
        data = corpus_io.load_dataset(
            args.input, tfidf=args.tfidf, smooth=args.tfidf_smooth
        )
        if args.k > data.n:
            raise InfeasibleError(
                f"--k {args.k} exceeds the {data.n} rows of {args.input}"
            )
    except (OSError, ParseError, ZeroNormError, InfeasibleError, ValueError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2

    print(SUMMARY_HEADER, flush=True)
    for r in range(args.repeats):
        seed = args.seed + r
        cfg = SeedConfig(method=args.init, alpha=args.alpha,
                         chain_length=args.chain_length, seed=seed)
        hook = validation._BoundAuditor(data) if args.audit else None
        t0 = time.monotonic_ns()
        result = engine.run(data, args.k, args.variant, cfg,
                            max_iter=args.max_iter, debug_hook=hook)
        wall_ns = time.monotonic_ns() - t0
        if args.out_assignments:
            corpus_io.write_assignments(
                result, _per_seed_path(args.out_assignments, seed, args.repeats)
            )
        if args.out_stats:
            corpus_io.write_stats_csv(
                result, _per_seed_path(args.out_stats, seed, args.repeats)
            )
        print(
            f"{seed},{args.variant},{args.k},{len(result.iterations)},"
            f"{result.total_sims},{result.total_cc_sims},"
            f"{result.objective:.17g},{wall_ns}",
            flush=True,
        )
        if hook is not None:
            report = validation.AuditReport.from_violations(
                hook.max_lower, hook.max_upper, hook.count
            )
            print(
                f"# audit seed={seed} decisions={report.decisions_audited} "
                f"max_lower_violation={report.max_lower_violation:.3e} "
                f"max_upper_violation={report.max_upper_violation:.3e} "
                f"pass={report.passed}",
                flush=True,
            )
    return 0


BENCH_HEADER = [
    "variant", "k", "repeats",
    "mean_wall_ns", "stddev_wall_ns",
    "mean_iterations", "stddev_iterations",
    "mean_total_sims", "stddev_total_sims",
    "mean_total_cc_sims", "mean_objective",
]


def bench_compare(data, variants, ks, *, init="uniform", alpha=1.0,
                  chain_length=200, seed=0, repeats=3, max_iter=100):
    """Run a variants x k grid, ``repeats`` seeded runs per cell.

    Returns one dict per (variant, k) with mean and population standard
    deviation of wall time, iterations, and total similarity computations.
    Counters are deterministic per seed; only timings vary between runs.
    """
    rows = []
    for k in ks:
        for variant in variants:
            walls, iters, sims, ccs, objs = [], [], [], [], []
            for r in range(repeats):
                cfg = SeedConfig(method=init, alpha=alpha,
                                 chain_length=chain_length, seed=seed + r)
                t0 = time.monotonic_ns()
                result = engine.run(data, k, variant, cfg, max_iter=max_iter)
                walls.append(time.monotonic_ns() - t0)
                iters.append(len(result.iterations))
                sims.append(result.total_sims)
                ccs.append(result.total_cc_sims)
                objs.append(result.objective)
            rows.append({
                "variant": variant,
                "k": k,
                "repeats": repeats,
                "mean_wall_ns": statistics.fmean(walls),
                "stddev_wall_ns": statistics.pstdev(walls),
                "mean_iterations": statistics.fmean(iters),
                "stddev_iterations": statistics.pstdev(iters),
                "mean_total_sims": statistics.fmean(sims),
                "stddev_total_sims": statistics.pstdev(sims),
                "mean_total_cc_sims": statistics.fmean(ccs),
                "mean_objective": statistics.fmean(objs),
            })
    return rows


def write_bench_csv(rows, path):
    import csv

    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=BENCH_HEADER)
        writer.writeheader()
        writer.writerows(rows)


def console_main():
    sys.exit(main())
