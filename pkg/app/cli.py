"""
Command-line interface for antiplex.

Registered on the Flask app (``flask antiplex ...``) and runnable on its own
through ``python -m app ...``. Results go to standard output or ``--output``;
run statistics and log records go to standard error.
"""
import functools
import json
import os
import sys
import time

import click

from app.antiplex import __version__
from app.antiplex.bench import BenchPlan, parse_int_range, run_bench, write_csv
from app.antiplex.core.config import get_config
from app.antiplex.core.exceptions import PlexError
from app.antiplex.core.logger import configure_logging, get_logger
from app.antiplex.enumeration import format_plex
from app.antiplex.generator import generate_planted, write_edge_list
from app.antiplex.graph import load_signed_edge_file
from app.antiplex.models import Algorithm, GenSpec, OutputMode, Params
from app.antiplex.runner import run_enumeration, run_oracle

logger = get_logger("cli")

ALGO_CHOICE = click.Choice([a.value for a in Algorithm])
MODE_CHOICE = click.Choice([m.value for m in OutputMode])
INPUT_PATH = click.Path(exists=True, dir_okay=False, readable=True)


def handle_errors(func):
    """Turn PlexError into a one-line message on standard error and exit status 1."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except PlexError as e:
            logger.debug(f"{func.__name__} failed", exc_info=True)
            raise click.ClickException(str(e)) from e
    return wrapper


def _load(path: str):
    started = time.perf_counter()
    g, report = load_signed_edge_file(path)
    return g, report, round((time.perf_counter() - started) * 1000.0, 3)


def _write_lines(lines, output):
    with click.open_file(output or "-", "w") as out:
        for line in lines:
            out.write(line + "\n")


@click.group(name="antiplex")
@click.version_option(__version__, prog_name="antiplex")
@click.option("--log-level", default=None, help="Overrides ANTIPLEX_LOG_LEVEL.")
@click.option("--log-file", default=None, type=click.Path(dir_okay=False), help="Overrides ANTIPLEX_LOG_FILE.")
@click.pass_context
@handle_errors
def cli(ctx, log_level, log_file):
    """Enumerate maximal antagonistic k-plexes in signed graphs."""
    config = get_config()
    configure_logging(log_level or config.log_level, log_file or config.log_file)
    ctx.obj = config


@cli.command("enumerate")
@click.option("--input", "input_path", required=True, type=INPUT_PATH, help="Signed edge list.")
@click.option("--k", type=int, required=True)
@click.option("--t", type=int, required=True)
@click.option("--algo", type=ALGO_CHOICE, default=Algorithm.SAPE.value, show_default=True)
@click.option("--output", type=click.Path(dir_okay=False, writable=True), default=None)
@click.option("--mode", type=MODE_CHOICE, default=OutputMode.LIST.value, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Defaults to ANTIPLEX_WORKERS.")
@click.option("--timeout", type=click.FloatRange(min=0, min_open=True), default=None, help="Seconds.")
@click.pass_obj
@handle_errors
def cmd_enumerate(config, input_path, k, t, algo, output, mode, workers, timeout):
    """List (or count) every qualified maximal antagonistic k-plex."""
    params = Params.of(k, t)
    g, _, load_ms = _load(input_path)
    algo = Algorithm(algo)
    mode = OutputMode(mode)
    with click.open_file(output or "-", "w") as out:
        outcome = run_enumeration(
            g,
            params,
            algo,
            mode=mode,
            workers=workers,
            timeout=timeout,
            stream=out if mode is OutputMode.STREAM else None,
            config=config,
            load_ms=load_ms,
        )
        if mode is OutputMode.COUNT:
            out.write(f"{outcome.stats.results}\n")
        elif mode is OutputMode.LIST:
            for line in outcome.lines(g.labels):
                out.write(line + "\n")
    click.echo(outcome.stats.to_json(), err=True)


@cli.command("oracle")
@click.option("--input", "input_path", required=True, type=INPUT_PATH)
@click.option("--k", type=int, required=True)
@click.option("--t", type=int, required=True)
@click.option("--output", type=click.Path(dir_okay=False, writable=True), default=None)
@click.pass_obj
@handle_errors
def cmd_oracle(config, input_path, k, t, output):
    """Brute-force results in the same format as ``enumerate`` (at most 20 vertices)."""
    params = Params.of(k, t)
    g, _, _ = _load(input_path)
    results = run_oracle(g, params, config)
    _write_lines(sorted(format_plex(p, g.labels) for p in results), output)


@cli.command("gen")
@click.option("--n", type=int, required=True)
@click.option("--planted", type=int, default=0, show_default=True)
@click.option("--side", type=int, default=0, show_default=True)
@click.option("--p-pos-in", type=float, default=1.0, show_default=True)
@click.option("--p-neg-cross", type=float, default=1.0, show_default=True)
@click.option("--p-noise", type=float, default=0.0, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--output", type=click.Path(dir_okay=False, writable=True), default=None)
@handle_errors
def cmd_gen(n, planted, side, p_pos_in, p_neg_cross, p_noise, seed, output):
    """Write a seeded synthetic signed graph with planted antagonistic communities."""
    spec = GenSpec.build(
        n=n, planted=planted, side=side, p_pos_in=p_pos_in, p_neg_cross=p_neg_cross, p_noise=p_noise, seed=seed
    )
    g = generate_planted(spec)
    with click.open_file(output or "-", "w") as out:
        write_edge_list(g, out)


@cli.command("bench")
@click.option("--input", "inputs", required=True, multiple=True, type=INPUT_PATH, help="Repeatable.")
@click.option("--k", "k_range", required=True, help='e.g. "2", "1-3" or "1,3".')
@click.option("--t", "t_range", required=True, help='e.g. "4-8".')
@click.option("--algo", "algos", multiple=True, type=ALGO_CHOICE, help="Repeatable; defaults to all.")
@click.option("--repetitions", type=click.IntRange(min=1), default=None, help="Defaults to ANTIPLEX_BENCH_REPS.")
@click.option("--sample", "samples", multiple=True, type=click.FloatRange(0, 1, min_open=True), help="Vertex fraction; repeatable.")
@click.option("--sample-seed", type=int, default=0, show_default=True)
@click.option("--timeout", type=click.FloatRange(min=0, min_open=True), default=None)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--no-warmup", is_flag=True, default=False)
@click.option("--output", type=click.Path(dir_okay=False, writable=True), default=None)
@click.pass_obj
@handle_errors
def cmd_bench(config, inputs, k_range, t_range, algos, repetitions, samples, sample_seed, timeout, workers, no_warmup, output):
    """Time algorithms over a (k, t) grid and write CSV."""
    datasets = []
    for path in inputs:
        g, _, _ = _load(path)
        datasets.append((os.path.splitext(os.path.basename(path))[0], g))
    plan = BenchPlan(
        ks=parse_int_range(k_range),
        ts=parse_int_range(t_range),
        algos=[Algorithm(a) for a in algos] or list(Algorithm),
        repetitions=repetitions or config.bench.repetitions,
        warmup=config.bench.warmup and not no_warmup,
        timeout=timeout if timeout is not None else config.timeout,
        workers=workers,
        samples=samples or (1.0,),
        sample_seed=sample_seed,
        config=config,
    )
    frame = run_bench(datasets, plan)
    with click.open_file(output or "-", "w") as out:
        write_csv(frame, out)


@cli.command("info")
@click.option("--input", "input_path", required=True, type=INPUT_PATH)
@handle_errors
def cmd_info(input_path):
    """Print the dataset summary (n, m+, m-, max degree, load counts) as JSON."""
    g, report, load_ms = _load(input_path)
    summary = {
        "dataset": os.path.splitext(os.path.basename(input_path))[0],
        "n": g.n,
        "m_pos": g.m_pos,
        "m_neg": g.m_neg,
        "max_degree": g.max_degree,
        "load": report.model_dump(),
        "load_ms": load_ms,
    }
    click.echo(json.dumps(summary))


def main(argv=None):
    """Entry point for ``python -m app``."""
    return cli.main(args=argv, prog_name="antiplex")


if __name__ == "__main__":
    sys.exit(main())
