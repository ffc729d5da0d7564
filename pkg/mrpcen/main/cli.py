"""
Command line interface.

    mrpcen featurize --manifest data/manifest.json --out features/
    mrpcen augment   --manifest data/manifest.json --config simreverb --seed 3
    mrpcen detect    --manifest data/manifest.json --features features/
    mrpcen evaluate  --manifest data/manifest.json --predictions preds/
    mrpcen inspect   features/clip-000.npy
    mrpcen logs

`--config` takes a JSON file or the name of a bundled example config.
Exit codes: 0 on success, 1 when some clips failed, 2 on a fatal error.
"""

import json
import logging
import sys
from typing import Optional, Sequence

import fire

from mrpcen.core import FeatureSummary, Manifest, MRPCENException, RunSummary

from .assembly.builder import MRPCENAppBuilder
from .assembly.config import MRPCENConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARTIAL = 1
EXIT_FATAL = 2


class PartialFailure(MRPCENException):
    """Some clips of a dataset operation failed; the others completed."""

    ...


def _reseed_impulse_responses(config: MRPCENConfig, seed: int) -> None:
    """The k-th synthetic impulse response of the plan draws with seed+k."""
    plan = config.augmentation
    synthetic = 0
    impulse_responses = []
    for ir in plan.impulse_responses:
        if ir.synthetic:
            ir = ir.model_copy(update={"seed": seed + synthetic})
            synthetic += 1
        impulse_responses.append(ir)
    config.augmentation = plan.model_copy(
        update={"impulse_responses": impulse_responses}
    )


def _build_app(
    config: Optional[str] = None,
    jobs: Optional[int] = None,
    seed: Optional[int] = None,
):
    if config is None or config in MRPCENAppBuilder.CONFIG_OPTIONS:
        mrpcen_config = MRPCENAppBuilder.get_config(config)
    else:
        mrpcen_config = MRPCENConfig.from_json(config)
    if jobs is not None:
        mrpcen_config.app["jobs"] = int(jobs)
    if seed is not None:
        _reseed_impulse_responses(mrpcen_config, int(seed))
    return MRPCENAppBuilder(config=mrpcen_config).build()


def _load_manifest(path: str) -> Manifest:
    manifest = Manifest.from_json(path)
    missing = manifest.missing_files()
    if missing:
        logger.warning(
            f"{len(missing)} files referenced by {path} are missing, "
            f"e.g. {missing[0]}"
        )
    return manifest


def _report(summary: RunSummary) -> None:
    print(
        f"{summary.operation}: {summary.n_ok} ok, {summary.n_skipped} "
        f"skipped, {summary.n_failed} failed"
    )
    if summary.failures:
        for failure in summary.failures:
            print(f"  {failure.clip_id}: {failure.error}")
        raise PartialFailure(
            f"{summary.n_failed} of {len(summary.clips)} clips failed."
        )


def format_summary(summary: FeatureSummary, as_csv: bool = False) -> str:
    if as_csv:
        rows = ["layer,rate,min,mean,max"]
        for layer in summary.layers:
            rate = "" if layer.rate is None else repr(layer.rate)
            rows.append(
                f"{layer.layer},{rate},{layer.min!r},{layer.mean!r},"
                f"{layer.max!r}"
            )
        return "\n".join(rows)
    lines = [
        f"file:        {summary.path}",
        f"clip_id:     {summary.clip_id}",
        f"shape:       {tuple(summary.shape)}",
        f"dtype:       {summary.dtype}",
        f"config_hash: {summary.config_hash}",
    ]
    for layer in summary.layers:
        rate = "-" if layer.rate is None else f"T={layer.rate:g}"
        lines.append(
            f"  layer {layer.layer:>2} {rate:>8}  min={layer.min:.6g}  "
            f"mean={layer.mean:.6g}  max={layer.max:.6g}"
        )
    return "\n".join(lines)


def featurize(
    manifest: str,
    config: Optional[str] = None,
    out: Optional[str] = None,
    force: bool = False,
    jobs: Optional[int] = None,
):
    """Write one feature tensor and sidecar per clip of the manifest."""
    app = _build_app(config, jobs)
    summary = app.featurize(_load_manifest(manifest), out_dir=out, force=force)
    _report(summary)


def augment(
    manifest: str,
    config: Optional[str] = None,
    out: Optional[str] = None,
    jobs: Optional[int] = None,
    seed: Optional[int] = None,
):
    """
    Write reverberant and pitch-shifted duplicates plus a new manifest.

    `seed` replaces the seeds of the synthetic impulse responses.
    """
    app = _build_app(config, jobs, seed)
    augmented, summary = app.augment(_load_manifest(manifest), out_dir=out)
    print(f"manifest: {len(augmented)} entries")
    _report(summary)


def detect(
    manifest: str,
    features: Optional[str] = None,
    config: Optional[str] = None,
    out: Optional[str] = None,
    jobs: Optional[int] = None,
):
    """Run the threshold detector over stored features."""
    app = _build_app(config, jobs)
    summary = app.detect(
        _load_manifest(manifest), features_dir=features, out_dir=out
    )
    _report(summary)


def evaluate(
    manifest: str,
    predictions: str,
    config: Optional[str] = None,
    out: Optional[str] = None,
    seed: Optional[int] = None,
):
    """Score prediction CSVs against the manifest's annotations."""
    app = _build_app(config)
    run = app.evaluate(
        _load_manifest(manifest),
        predictions_dir=predictions,
        out_dir=out,
        seed=seed,
    )
    if run.result is not None:
        overall = run.result.overall
        print(
            f"precision={overall.precision:.4f} recall={overall.recall:.4f} "
            f"f1={overall.f1:.4f} error_rate={overall.error_rate}"
        )
        for label, metrics in overall.class_wise.items():
            print(f"  {label}: f1={metrics.f1:.4f} support={metrics.support}")
    _report(RunSummary(operation="evaluate", clips=run.clips))


def inspect(feature_file: str, csv: bool = False):
    """Print the shape, dtype, hash and per-layer stats of a feature file."""
    app = _build_app()
    print(format_summary(app.inspect(feature_file), as_csv=csv))


def logs(
    config: Optional[str] = None,
    log_type_filter: Optional[str] = None,
    max_runs: int = 10,
):
    """Print the most recent runs and their log entries."""
    app = _build_app(config)
    runs = app.logs(
        log_type_filter=log_type_filter, max_runs_requested=max_runs
    )
    print(json.dumps(runs, indent=2, default=str))


COMMANDS = {
    "featurize": featurize,
    "augment": augment,
    "detect": detect,
    "evaluate": evaluate,
    "inspect": inspect,
    "logs": logs,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        fire.Fire(
            COMMANDS,
            command=list(argv) if argv is not None else None,
            name="mrpcen",
        )
    except PartialFailure as e:
        logger.warning(str(e))
        return EXIT_PARTIAL
    except fire.core.FireExit as e:
        return EXIT_OK if not e.code else EXIT_FATAL
    except (MRPCENException, ValueError, OSError) as e:
        logger.error(f"mrpcen: {e}")
        return EXIT_FATAL
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
