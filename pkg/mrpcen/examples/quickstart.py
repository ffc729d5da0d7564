import logging
import os
import time
from typing import Optional

import fire

from mrpcen import Manifest, MRPCENAppBuilder, MRPCENConfig
from mrpcen.examples.miniature import build_miniature_dataset

logger = logging.getLogger(__name__)
logger.setLevel(logging.DEBUG)


class MRPCENQuickstart:
    """A demo of the mrpcen pipeline on the miniature dataset."""

    def __init__(
        self,
        config_name: Optional[str] = "miniature",
        config_path: Optional[str] = None,
        work_dir: str = "mrpcen_quickstart",
    ):
        if config_path and config_name != "miniature":
            raise ValueError("Cannot specify both config and config_name")

        if config_path:
            config = MRPCENConfig.from_json(config_path)
        else:
            config = MRPCENConfig.from_json(
                MRPCENAppBuilder.CONFIG_OPTIONS[config_name]
            )
        self.app = MRPCENAppBuilder(config).build()
        self.work_dir = work_dir
        self.data_dir = os.path.join(work_dir, "data")
        self.features_dir = os.path.join(work_dir, "features")
        self.predictions_dir = os.path.join(work_dir, "predictions")
        self.manifest_path = os.path.join(self.data_dir, "manifest.json")

    def _manifest(self) -> Manifest:
        if not os.path.exists(self.manifest_path):
            self.build_dataset()
        return Manifest.from_json(self.manifest_path)

    def build_dataset(self, n_clips: int = 10, seed: int = 0):
        t0 = time.time()
        manifest = build_miniature_dataset(
            self.data_dir, n_clips=n_clips, seed=seed
        )
        print(f"Time taken to build dataset: {time.time() - t0:.2f} seconds")
        print(f"{len(manifest)} clips, classes {manifest.vocabulary}")

    def featurize(self, force: bool = False):
        t0 = time.time()
        summary = self.app.featurize(
            self._manifest(), out_dir=self.features_dir, force=force
        )
        print(f"Time taken to featurize: {time.time() - t0:.2f} seconds")
        print(summary.model_dump_json(indent=2, exclude={"clips"}))

    def detect(self):
        summary = self.app.detect(
            self._manifest(),
            features_dir=self.features_dir,
            out_dir=self.predictions_dir,
        )
        print(f"Detected events for {summary.n_ok} clips")

    def evaluate(self, seed: Optional[int] = None):
        t0 = time.time()
        run = self.app.evaluate(
            self._manifest(),
            predictions_dir=self.predictions_dir,
            seed=seed,
        )
        print(f"Time taken to evaluate: {time.time() - t0:.2f} seconds")
        if run.result is not None:
            for name, metric in run.result.summary.metrics.items():
                print(
                    f"{name:>18}: {metric.mean:.3f} "
                    f"[{metric.lower:.3f}, {metric.upper:.3f}]"
                )

    def augment(self, out_dir: Optional[str] = None):
        out_dir = out_dir or os.path.join(self.work_dir, "augmented")
        augmented, summary = self.app.augment(
            self._manifest(), out_dir=out_dir
        )
        print(f"{len(augmented)} entries, {summary.n_failed} failed")

    def inspect(self, clip_id: str = "clip-000"):
        summary = self.app.inspect(
            os.path.join(self.features_dir, f"{clip_id}.npy")
        )
        print(summary.model_dump_json(indent=2))

    def run_all(self):
        self.build_dataset()
        self.featurize()
        self.detect()
        self.evaluate()

    def logs(self, log_type_filter: Optional[str] = None):
        print(self.app.logs(log_type_filter=log_type_filter))


if __name__ == "__main__":
    fire.Fire(MRPCENQuickstart)
