"""Command line interface: rank, filter, sweep, score, compare, serve, generate."""

from __future__ import annotations

import csv
import json
import os
import sys
from pathlib import Path

import click

from .datasets import DATASET_SHAPES, generate_all, ingest, save_dataset
from .errors import PlanRankError
from .evaluation import aggregate_scores, compare_methods, effective_decisions, read_decisions
from .pipeline import (
    METHOD_NAMES,
    PipelineConfig,
    method_params_from_json,
    run_pipeline,
    score_decisions,
    write_ranking_csv,
)
from .planfilter import DEFAULT_FILTER_WEIGHTS, sweep_grid, threshold_sweep

_method_option = click.option("--method", default="fuzzy_vikor", show_default=True,
                              type=click.Choice(METHOD_NAMES))
_profile_option = click.option("--profile", default="Balanced", show_default=True)


def _load_datasets(data_dir: str):
    from .datasets import load_dataset_dir

    datasets = load_dataset_dir(data_dir)
    if not datasets:
        raise PlanRankError(f"no dataset files found in {data_dir}")
    return datasets


@click.group()
def main():
    """Mission plan ranking and filtering decision support."""


@main.command()
@click.option("--dataset", required=True, type=click.Path(exists=True))
@_method_option
@_profile_option
@click.option("--v", "v_param", default=0.5, show_default=True)
@click.option("--lambda", "lam", default=0.5, show_default=True)
@click.option("--params", default=None, type=click.Path(exists=True),
              help="JSON method parameter block; overrides --method/--v/--lambda")
@click.option("--output", required=True, type=click.Path())
def rank(dataset, method, profile, v_param, lam, params, output):
    """Rank a dataset's plans and write the ranking CSV."""
    ds = ingest(dataset)
    if params:
        block = method_params_from_json(json.loads(Path(params).read_text(encoding="utf-8")))
        cfg = PipelineConfig.from_method_params(block, profile=profile)
    else:
        cfg = PipelineConfig(method=method, profile=profile, v=v_param, lam=lam)
    result = run_pipeline(ds, cfg)
    write_ranking_csv(result.ranking, output)
    click.echo(f"ranked {len(ds.plans)} plans of {ds.id} with {cfg.method} -> {output}")


@main.command("filter")
@click.option("--dataset", required=True, type=click.Path(exists=True))
@_method_option
@_profile_option
@click.option("--threshold", default=1.0, show_default=True)
@click.option("--output", required=True, type=click.Path())
def filter_cmd(dataset, method, profile, threshold, output):
    """Rank then filter near-duplicate plans; write surviving plan ids."""
    ds = ingest(dataset)
    cfg = PipelineConfig(method=method, profile=profile, threshold=threshold)
    result = run_pipeline(ds, cfg)
    doc = {"dataset": ds.id, "method": method, "profile": profile,
           "threshold": threshold, "kept": [p.id for p in result.filtered]}
    Path(output).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    click.echo(f"kept {len(result.filtered)} of {len(ds.plans)} plans -> {output}")


@main.command("sweep-threshold")
@click.option("--dataset", required=True, type=click.Path(exists=True))
@_method_option
@_profile_option
@click.option("--grid", default="0:5:0.1", show_default=True,
              help="start:stop:step threshold grid")
@click.option("--output", required=True, type=click.Path())
@click.option("--plot-json", type=click.Path(), default=None,
              help="also write chart-ready JSON")
def sweep_threshold(dataset, method, profile, grid, output, plot_json):
    """Filter at every threshold on the grid and record size and hypervolume."""
    ds = ingest(dataset)
    try:
        start, stop, step = (float(x) for x in grid.split(":"))
    except ValueError:
        raise click.BadParameter(f"grid must be start:stop:step, got {grid!r}")
    cfg = PipelineConfig(method=method, profile=profile)
    ranked = run_pipeline(ds, cfg).ranking
    by_id = {p.id: p for p in ds.plans}
    plans = [by_id[e.alternative] for e in ranked.entries]
    result = threshold_sweep(plans, DEFAULT_FILTER_WEIGHTS, sweep_grid(start, stop, step))
    with open(output, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["threshold", "kept", "hypervolume"])
        for row in result.rows:
            writer.writerow([row.threshold, row.kept, repr(row.hypervolume)])
    if plot_json:
        doc = {"mission": ds.id, "method": method, "profile": profile,
               "metadata": dict(result.metadata),
               "thresholds": [r.threshold for r in result.rows],
               "kept": [r.kept for r in result.rows],
               "hypervolume": [r.hypervolume for r in result.rows]}
        Path(plot_json).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n",
                                   encoding="utf-8")
    click.echo(f"swept {len(result.rows)} thresholds on {ds.id} -> {output}")


@main.command()
@click.option("--data-dir", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--decisions", required=True, type=click.Path(exists=True))
@click.option("--group-by", default="method", show_default=True)
@click.option("--method", default=None, type=click.Choice(METHOD_NAMES))
@click.option("--output", required=True, type=click.Path())
def score(data_dir, decisions, group_by, method, output):
    """Score recorded decisions against method rankings; write aggregate CSV."""
    datasets = _load_datasets(data_dir)
    log = effective_decisions(read_decisions(decisions))
    if not log:
        raise PlanRankError(f"no decisions found in {decisions}")
    methods = METHOD_NAMES if method is None else (method,)
    records = score_decisions(datasets, log, methods)
    fields = tuple(g.strip() for g in group_by.split(",") if g.strip())
    rows = aggregate_scores(records, fields)
    with open(output, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([*fields, "count", "mean", "median", "sd"])
        for row in rows:
            writer.writerow([*(row[f] for f in fields), row["count"],
                             repr(row["mean"]), repr(row["median"]), repr(row["sd"])])
    click.echo(f"scored {len(log)} decisions x {len(methods)} methods -> {output}")


@main.command()
@click.option("--data-dir", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--decisions", required=True, type=click.Path(exists=True))
@click.option("--a", "method_a", required=True, type=click.Choice(METHOD_NAMES))
@click.option("--b", "method_b", required=True, type=click.Choice(METHOD_NAMES))
def compare(data_dir, decisions, method_a, method_b):
    """Paired Wilcoxon comparison of two methods over the decision log."""
    datasets = _load_datasets(data_dir)
    log = effective_decisions(read_decisions(decisions))
    if not log:
        raise PlanRankError(f"no decisions found in {decisions}")
    records = score_decisions(datasets, log, (method_a, method_b))
    cmp = compare_methods(records, method_a, method_b)
    click.echo(f"{method_a} vs {method_b}: mean_diff={cmp.mean_diff:+.6f} "
               f"p={cmp.p_value:.6g} n={cmp.n_pairs}"
               f"{' (significant at 0.05)' if cmp.significant() else ''}")


@main.command("gen-synthetic")
@click.option("--output-dir", required=True, type=click.Path(file_okay=False))
@click.option("--seed", default=0, show_default=True, type=int)
def gen_synthetic(output_dir, seed):
    """Emit the bundled mission-shaped synthetic datasets."""
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    for ds in generate_all(seed):
        save_dataset(ds, out / f"{ds.id}.json")
    click.echo(f"wrote {len(DATASET_SHAPES)} datasets to {out}")


@main.command()
@click.option("--data-dir", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--decisions", default=None, type=click.Path())
@click.option("--profiles", default=None, type=click.Path(exists=True),
              help="JSON file of operator profiles replacing the bundled six")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=None, type=int, help="defaults to $PORT or 8000")
@click.option("--static-dir", default=None, type=click.Path(file_okay=False),
              help="built UI assets to serve at /")
@click.option("--config", default=None, type=click.Path(exists=True),
              help="JSON config file overriding the other flags")
def serve(data_dir, decisions, profiles, host, port, static_dir, config):
    """Run the HTTP API (and UI, when static assets are provided)."""
    import uvicorn

    from .defaults import profiles_from_json
    from .service import create_app

    if config:
        cfg = json.loads(Path(config).read_text(encoding="utf-8"))
        data_dir = cfg.get("data_dir", data_dir)
        decisions = cfg.get("decisions", decisions)
        profiles = cfg.get("profiles", profiles)
        host = cfg.get("host", host)
        port = cfg.get("port", port)
        static_dir = cfg.get("static_dir", static_dir)
    if port is None:
        port = int(os.environ.get("PORT", "8000"))
    profile_table = None
    if profiles:
        profile_table = profiles_from_json(
            json.loads(Path(profiles).read_text(encoding="utf-8")))
    app = create_app(data_dir, decisions_path=decisions, profiles=profile_table,
                     static_dir=static_dir)
    uvicorn.run(app, host=host, port=port)


def run():
    try:
        main(standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        sys.exit(exc.exit_code)
    except click.Abort:
        sys.exit(130)
    except PlanRankError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    run()
