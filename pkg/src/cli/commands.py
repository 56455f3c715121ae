"""
Command-line interface for FilterLab
"""

import functools
import math
from pathlib import Path

import click
import numpy as np
from loguru import logger
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from src.core.config.settings import settings
from src.core.constants import (
    AUDIT_FILENAME,
    DEFAULT_LEAKY_ALPHA,
    DEFAULT_PROBE_AMPLITUDE,
    DEFAULT_PROBE_LENGTH,
    DEFAULT_PROBE_OFFSET,
    DEFAULT_TEST_SIZE,
    DEFAULT_TRAIN_SIZE,
    EQUIVALENCE_THRESHOLD,
    SUMMARY_FILENAME,
)
from src.core.exceptions import (
    FilterLabError,
    NoBandEdgeError,
    NoCrossingError,
    NoSideLobeError,
    ShapeError,
)
from src.core.logger import setup_logger
from src.core.report_manager import ReportManager
from src.nnet.activations import Activation
from src.nnet.model import build
from src.nnet.serialization import load_model, save_model
from src.probe.audit import audit_pairs, equivalence_audit
from src.probe.regions import Box, enumerate_regions, region_fidelity, write_regions_json
from src.probe.response import ProbeSignal, empirical_frequency_response, write_empirical_csv
from src.signals.fir import moving_average
from src.signals.spectrum import (
    cutoff_frequency,
    digital_to_analog,
    magnitude_response,
    narrowest_moving_average,
    nominal_cutoff,
    response_grid,
    side_lobe_peak,
    write_response_csv,
)
from src.train.dataset import SeedPlan, generate_dataset, read_dataset_csv, write_dataset_csv
from src.train.suite import replicate_reference_suite
from src.train.trainer import TrainConfig, cross_validate, fit
from src.version import __version__


def handle_errors(func):
    """Turn domain and I/O failures into a nonzero exit with a message"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except FilterLabError as e:
            logger.error(f"{func.__name__}: {e}")
            raise click.ClickException(str(e))
        except ValidationError as e:
            raise click.ClickException(f"Invalid parameters: {e}")
        except OSError as e:
            logger.error(f"{func.__name__}: I/O error: {e}")
            raise click.ClickException(f"I/O error: {e}")

    return wrapper


def _parse_widths(text: str) -> list[int]:
    try:
        return [int(part) for part in text.replace("-", ",").split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"Widths must be integers separated by commas, got '{text}'")


@click.group()
@click.version_option(__version__, prog_name="filterlab")
@click.option("--log-level", default=None, help="Console log level (default from FILTERLAB_LOG_LEVEL)")
def cli(log_level):
    """Train tiny networks to mimic FIR low-pass filters and probe what they learned."""
    setup_logger(level=log_level)


@cli.command()
@click.option("--order", "-M", type=int, default=2, show_default=True, help="Moving-average order M")
@click.option("--points", type=int, default=settings.response_points, show_default=True)
@click.option("--fs", "sampling_rate", type=float, default=settings.sampling_rate_hz, show_default=True, help="Sampling rate in Hz")
@click.option("--threshold", type=float, default=settings.gain_threshold, show_default=True)
@click.option("--cutoff-hz", type=float, default=None, help="Report the moving average whose pass band keeps this frequency")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Response CSV path")
@handle_errors
def response(order, points, sampling_rate, threshold, cutoff_hz, out):
    """Magnitude response, cutoff and side lobe of a moving-average filter."""
    fir = moving_average(order)
    curve = magnitude_response(fir, response_grid(points))

    table = Table(title=f"Moving average M={order}")
    table.add_column("quantity")
    table.add_column("value")
    table.add_row("taps", ", ".join(f"{w:.6g}" for w in fir.coeffs))
    table.add_row("DC gain", f"{fir.dc_gain:.6f}")
    try:
        omega_c = cutoff_frequency(fir, threshold)
        table.add_row(f"cutoff (gain {threshold:g})", f"{omega_c:.5f} rad = {digital_to_analog(omega_c, sampling_rate):.1f} Hz")
        try:
            nominal = nominal_cutoff(fir, threshold)
            table.add_row("nominal band edge", f"{round(16 * nominal / math.pi)}pi/16 = {digital_to_analog(nominal, sampling_rate):.0f} Hz")
        except NoBandEdgeError:
            table.add_row("nominal band edge", "no kpi/16 band edge")
    except NoCrossingError:
        table.add_row("cutoff", "all-pass, no cutoff")
    try:
        lobe = side_lobe_peak(fir)
        table.add_row("side lobe peak", f"{lobe.magnitude:.5f} at {lobe.omega:.5f} rad")
    except NoSideLobeError:
        table.add_row("side lobe peak", "none in (0, pi)")
    if cutoff_hz is not None:
        target = 2.0 * math.pi * cutoff_hz / sampling_rate
        table.add_row(f"order for {cutoff_hz:g} Hz", str(narrowest_moving_average(target, threshold).order))

    out = out or Path(settings.output_dir) / f"response_M{order}.csv"
    reports = ReportManager(out.parent)
    reports.write_artifact(write_response_csv, curve, out.name)
    Console().print(table)
    reports.write_manifest(
        "response",
        {"order": order, "points": points, "fs": sampling_rate, "threshold": threshold, "cutoff_hz": cutoff_hz},
    )


@cli.command()
@click.option("--order", "-M", type=int, default=2, show_default=True)
@click.option("--size", type=int, default=DEFAULT_TRAIN_SIZE, show_default=True, help="Number of windows T")
@click.option("--lo", type=float, default=0.0, show_default=True)
@click.option("--hi", type=float, default=1.0, show_default=True)
@click.option("--seed", type=int, default=settings.seed, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), required=True, help="Dataset CSV path")
@handle_errors
def dataset(order, size, lo, hi, seed, out):
    """Generate a filter-labelled dataset CSV."""
    seeds = SeedPlan.from_seed(seed)
    data = generate_dataset(moving_average(order), size, (lo, hi), seed=seeds.data)
    reports = ReportManager(out.parent)
    reports.write_artifact(write_dataset_csv, data, out.name)
    reports.write_manifest("dataset", {"order": order, "size": size, "lo": lo, "hi": hi}, seeds.as_dict())
    click.echo(f"{data.size} rows written to {out}")


@cli.command()
@click.option("--order", "-M", type=int, default=2, show_default=True)
@click.option("--widths", default="2,2,1", show_default=True, help="Layer widths, input first")
@click.option("--activation", type=click.Choice(["sigmoid", "relu", "leaky_relu", "identity"]), default="relu", show_default=True)
@click.option("--alpha", type=float, default=DEFAULT_LEAKY_ALPHA, show_default=True, help="leaky_relu slope")
@click.option("--epsilon", type=float, default=TrainConfig.model_fields["epsilon"].default, show_default=True)
@click.option("--learning-rate", type=float, default=TrainConfig.model_fields["learning_rate"].default, show_default=True)
@click.option("--max-steps", type=int, default=TrainConfig.model_fields["max_steps"].default, show_default=True)
@click.option("--restarts", type=int, default=TrainConfig.model_fields["restarts"].default, show_default=True)
@click.option("--train-size", type=int, default=DEFAULT_TRAIN_SIZE, show_default=True)
@click.option("--test-size", type=int, default=DEFAULT_TEST_SIZE, show_default=True)
@click.option("--seed", type=int, default=settings.seed, show_default=True)
@click.option("--data", "data_path", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Train on a dataset CSV instead of drawing one")
@click.option("--out", type=click.Path(file_okay=False, path_type=Path), required=True, help="Output directory")
@handle_errors
def train(order, widths, activation, alpha, epsilon, learning_rate, max_steps, restarts, train_size, test_size, seed, data_path, out):
    """Train one network on a moving-average filter."""
    fir = moving_average(order)
    seeds = SeedPlan.from_seed(seed)
    if data_path is None:
        data = generate_dataset(fir, train_size, seed=seeds.data)
    else:
        data = read_dataset_csv(data_path)
        if data.order != order:
            raise ShapeError(f"Dataset {data_path} has order {data.order} but --order is {order}")
    model = build(_parse_widths(widths), Activation(activation, alpha), seed=seeds.init)
    config = TrainConfig(
        epsilon=epsilon, learning_rate=learning_rate, max_steps=max_steps, restarts=restarts, seed=seeds.init
    )
    trained, report = fit(model, data, config)
    report = report.model_copy(update={"final_test_mse": cross_validate(trained, fir, test_size, seed=seeds.data)})

    reports = ReportManager(out)
    reports.write_artifact(save_model, trained, "model.json")
    reports.write_json(report.model_dump(), "report.json")
    reports.write_manifest(
        "train",
        {"order": order, "widths": widths, "activation": activation, "alpha": alpha, **config.model_dump(),
         "train_size": data.size, "test_size": test_size, "data": str(data_path) if data_path else None},
        seeds.as_dict(),
    )
    status = "converged" if report.converged else "NOT converged"
    click.echo(
        f"{status}: train mse {report.final_train_mse:.3e}, test mse {report.final_test_mse:.3e}, "
        f"{report.steps_used} steps, {report.restarts_used} restarts"
    )


@cli.command()
@click.option("--seed", type=int, default=settings.seed, show_default=True)
@click.option("--out", type=click.Path(file_okay=False, path_type=Path), required=True, help="Output directory")
@handle_errors
def suite(seed, out):
    """Train the four reference networks and write models plus a summary table."""
    reports = ReportManager(out)
    result = replicate_reference_suite(seed)
    for entry in result.entries:
        reports.write_artifact(save_model, entry.model, f"{entry.spec.name}.json")
        reports.write_json(entry.report.model_dump(), f"{entry.spec.name}.report.json")
    summary = result.summary()
    reports.write_csv(summary, SUMMARY_FILENAME)
    models = {entry.spec.name: entry.model for entry in result.entries}
    audit = audit_pairs(models, Box.cube(2), settings.audit_grid_density)
    reports.write_csv(audit, AUDIT_FILENAME)
    reports.write_manifest(
        "suite",
        {"seed": seed, "threads": settings.threads, "audit_density": settings.audit_grid_density},
        SeedPlan.from_seed(seed).as_dict(),
    )

    table = Table(title=f"Suite (seed {seed})")
    for column in ("model", "L", "train_mse", "test_mse", "steps", "converged"):
        table.add_column(column)
    for row in summary.to_dict("records"):
        table.add_row(
            row["model"], str(row["L"]), f"{row['train_mse']:.2e}", f"{row['test_mse']:.2e}",
            str(row["steps"]), "yes" if row["converged"] else "NO",
        )
    console = Console()
    console.print(table)
    within = int(audit["equivalent"].sum())
    console.print(f"{within}/{len(audit)} pairs agree within {EQUIVALENCE_THRESHOLD:g} on the unit square")


@cli.command()
@click.argument("model_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--mode", type=click.Choice(["regions", "sweep", "audit"]), required=True)
@click.option("--reference-order", type=int, default=None, help="Moving-average order to compare taps with (default: model input size)")
@click.option("--density", type=int, default=None, help="Lattice points per axis")
@click.option("--lo", type=float, default=0.0, show_default=True, help="Lower bound of the domain / input range")
@click.option("--hi", type=float, default=1.0, show_default=True, help="Upper bound of the domain / input range")
@click.option("--points", type=int, default=16, show_default=True, help="Sweep frequencies k*pi/points, k=1..points")
@click.option("--offset", type=float, default=DEFAULT_PROBE_OFFSET, show_default=True)
@click.option("--amplitude", type=float, default=DEFAULT_PROBE_AMPLITUDE, show_default=True)
@click.option("--length", type=int, default=DEFAULT_PROBE_LENGTH, show_default=True)
@click.option("--other", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Second model for audit mode")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), required=True, help="Report file path")
@handle_errors
def probe(model_path, mode, reference_order, density, lo, hi, points, offset, amplitude, length, other, out):
    """Open a trained model: linear regions, sinusoid sweep or equivalence audit."""
    model = load_model(model_path)
    domain = Box.cube(model.input_dim, lo, hi)
    reports = ReportManager(out.parent)
    parameters = {"model": str(model_path), "mode": mode, "lo": lo, "hi": hi}

    if mode == "regions":
        density = density or settings.region_grid_density
        reference = moving_average(reference_order or model.input_dim)
        regions = enumerate_regions(model, domain, density)
        fidelity = region_fidelity(regions, reference)
        reports.write_artifact(functools.partial(write_regions_json, reference=reference), regions, out.name)
        parameters.update(density=density, reference_order=reference.order)
        click.echo(f"{len(regions)} region(s); sample-weighted tap error vs M={reference.order}: {fidelity.weighted_error:.5f}")
        for region in regions[:8]:
            click.echo(f"  {region.pattern}: taps {np.array2string(region.taps, precision=5)} ({region.sample_count} samples)")
    elif mode == "sweep":
        grid = np.arange(1, points + 1) * math.pi / points
        probe_signal = ProbeSignal(offset, amplitude, length)
        result = empirical_frequency_response(model, grid, probe_signal, (lo, hi))
        reports.write_artifact(write_empirical_csv, result, out.name)
        parameters.update(points=points, offset=offset, amplitude=amplitude, length=length)
        click.echo(f"Gain at {len(grid)} frequencies written to {out}")
    else:
        if other is None:
            raise click.UsageError("--other is required in audit mode")
        density = density or settings.audit_grid_density
        result = equivalence_audit(model, load_model(other), domain, density)
        reports.write_json(result.to_dict(), out.name)
        parameters.update(other=str(other), density=density)
        verdict = "equivalent" if result.equivalent else "not equivalent"
        click.echo(
            f"sup_output_diff {result.sup_output_diff:.6f}, weight_distance {result.to_dict()['weight_distance']} ({verdict})"
        )

    reports.write_manifest("probe", parameters)
