import csv
import json
import logging
import os
import time
from typing import Any, Optional

from mrpcen.core import (
    ClipStatus,
    FeatureSummary,
    KVLoggingSingleton,
    Manifest,
    RunManager,
    RunSummary,
    inspect_features,
    to_async_generator,
    write_replicates_csv,
)

from ...pipes.augmentation_pipe import ANNOTATION_DIR, AUDIO_DIR
from ...pipes.eval_pipe import EvalPipe
from ..abstractions import MRPCENPipelines, MRPCENProviders
from ..assembly.config import MRPCENConfig
from .base import Service

logger = logging.getLogger(__name__)

RUN_MANIFEST = "run_manifest.json"
MANIFEST = "manifest.json"
METRICS = "metrics.json"
CLASS_METRICS = "class_metrics.csv"
BOOTSTRAP_REPLICATES = "bootstrap_replicates.csv"
BOOTSTRAP_SUMMARY = "bootstrap_summary.json"
CLASS_METRICS_HEADER = [
    "label",
    "precision",
    "recall",
    "f1",
    "support",
    "tp",
    "fp",
    "fn",
]


def _dump_json(path: str, data: Any) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, sort_keys=True)
        f.write("\n")


class DatasetService(Service):
    """
    Dataset-level operations over a manifest.

    A clip that cannot be read or processed is logged and counted in the
    run summary; an output directory that cannot be created or written
    aborts the operation.
    """

    def __init__(
        self,
        config: MRPCENConfig,
        providers: MRPCENProviders,
        pipelines: MRPCENPipelines,
        run_manager: RunManager,
        logging_connection: KVLoggingSingleton,
    ):
        super().__init__(
            config, providers, pipelines, run_manager, logging_connection
        )

    async def featurize_dataset(
        self,
        manifest: Manifest,
        out_dir: Optional[str] = None,
        force: bool = False,
        jobs: Optional[int] = None,
        *args: Any,
        **kwargs: Any,
    ) -> RunSummary:
        out_dir = self.resolve_out_dir(out_dir)
        os.makedirs(out_dir, exist_ok=True)
        config_hash = self.config.config_hash()

        t0 = time.time()
        results = await self.pipelines.featurization_pipeline.run(
            input=to_async_generator(manifest.resolved()),
            run_manager=self.run_manager,
            out_dir=out_dir,
            config_hash=config_hash,
            force=force,
            jobs=jobs,
        )
        summary = RunSummary(
            operation="featurize", config_hash=config_hash, clips=results
        )
        summary.to_json(os.path.join(out_dir, RUN_MANIFEST))
        logger.info(
            f"Featurized {summary.n_ok} clips ({summary.n_skipped} current, "
            f"{summary.n_failed} failed) into {out_dir} in "
            f"t={time.time() - t0:.2f} seconds."
        )
        return summary

    async def augment_dataset(
        self,
        manifest: Manifest,
        out_dir: Optional[str] = None,
        jobs: Optional[int] = None,
        *args: Any,
        **kwargs: Any,
    ) -> tuple[Manifest, RunSummary]:
        out_dir = self.resolve_out_dir(out_dir)
        os.makedirs(out_dir, exist_ok=True)
        config_hash = self.config.config_hash(("audio", "augmentation"))

        provider = self.providers.augmentation
        pipeline = self.pipelines.augmentation_pipeline
        if provider is None or pipeline is None or not provider.variants:
            logger.info("No augmentations configured; manifest unchanged.")
            summary = RunSummary(operation="augment", config_hash=config_hash)
            manifest.to_json(os.path.join(out_dir, MANIFEST))
            summary.to_json(os.path.join(out_dir, RUN_MANIFEST))
            return manifest, summary

        os.makedirs(os.path.join(out_dir, AUDIO_DIR), exist_ok=True)
        os.makedirs(os.path.join(out_dir, ANNOTATION_DIR), exist_ok=True)
        results = await pipeline.run(
            input=to_async_generator(manifest.resolved()),
            run_manager=self.run_manager,
            out_dir=out_dir,
            keep_originals=self.config.augmentation.keep_originals,
            jobs=jobs,
        )
        augmented = Manifest(
            vocabulary=manifest.vocabulary,
            entries=[
                result.entry
                for result in results
                if result.status == ClipStatus.OK and result.entry
            ],
            root=os.path.abspath(out_dir),
        )
        summary = RunSummary(
            operation="augment", config_hash=config_hash, clips=results
        )
        augmented.to_json(os.path.join(out_dir, MANIFEST))
        summary.to_json(os.path.join(out_dir, RUN_MANIFEST))
        logger.info(
            f"Augmented {len(manifest)} clips into {len(augmented)} "
            f"entries ({summary.n_failed} failed) in {out_dir}."
        )
        return augmented, summary

    async def detect_dataset(
        self,
        manifest: Manifest,
        features_dir: Optional[str] = None,
        out_dir: Optional[str] = None,
        jobs: Optional[int] = None,
        *args: Any,
        **kwargs: Any,
    ) -> RunSummary:
        features_dir = self.resolve_out_dir(features_dir)
        out_dir = out_dir or os.path.join(features_dir, "predictions")
        os.makedirs(out_dir, exist_ok=True)

        results = await self.pipelines.detection_pipeline.run(
            input=to_async_generator(manifest.resolved()),
            run_manager=self.run_manager,
            features_dir=features_dir,
            out_dir=out_dir,
            vocabulary=manifest.vocabulary,
            jobs=jobs,
        )
        summary = RunSummary(
            operation="detect",
            config_hash=self.config.config_hash(
                ("audio", "features", "evaluation")
            ),
            clips=results,
        )
        summary.to_json(os.path.join(out_dir, RUN_MANIFEST))
        return summary

    async def evaluate_run(
        self,
        manifest: Manifest,
        predictions_dir: str,
        out_dir: Optional[str] = None,
        seed: Optional[int] = None,
        *args: Any,
        **kwargs: Any,
    ) -> EvalPipe.EvalRun:
        out_dir = out_dir or predictions_dir
        os.makedirs(out_dir, exist_ok=True)

        runs = await self.pipelines.eval_pipeline.run(
            input=to_async_generator(manifest.resolved()),
            run_manager=self.run_manager,
            predictions_dir=predictions_dir,
            vocabulary=manifest.vocabulary,
            seed=seed,
        )
        run = runs[0]
        summary = RunSummary(operation="evaluate", clips=run.clips)
        summary.to_json(os.path.join(out_dir, RUN_MANIFEST))
        if run.result is None:
            logger.warning("No clip could be scored; no report written.")
            return run

        result = run.result
        _dump_json(
            os.path.join(out_dir, METRICS),
            {
                "overall": result.overall.model_dump(mode="json"),
                "missing_predictions": run.missing_predictions,
            },
        )
        self._write_class_metrics(os.path.join(out_dir, CLASS_METRICS), run)
        write_replicates_csv(
            os.path.join(out_dir, BOOTSTRAP_REPLICATES), result.replicates
        )
        _dump_json(
            os.path.join(out_dir, BOOTSTRAP_SUMMARY),
            result.summary.model_dump(mode="json"),
        )
        logger.info(
            f"Evaluated {summary.n_ok} clips: F1={result.overall.f1:.3f}, "
            f"ER={result.overall.error_rate}"
        )
        return run

    @staticmethod
    def _write_class_metrics(path: str, run: EvalPipe.EvalRun) -> None:
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(CLASS_METRICS_HEADER)
            for label, m in run.result.overall.class_wise.items():
                writer.writerow(
                    [
                        label,
                        repr(m.precision),
                        repr(m.recall),
                        repr(m.f1),
                        m.support,
                        m.tp,
                        m.fp,
                        m.fn,
                    ]
                )

    async def inspect(
        self, feature_file: str, *args: Any, **kwargs: Any
    ) -> FeatureSummary:
        return inspect_features(feature_file)
