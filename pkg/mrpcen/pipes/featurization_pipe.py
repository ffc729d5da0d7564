"""
This module contains the `FeaturizationPipe`, which turns each clip of a
manifest into a feature file plus sidecar.
"""

import logging
import os
import time
from typing import Any, Optional

from mrpcen.core import (
    ClipPipe,
    ClipResult,
    ClipStatus,
    FeatureProvider,
    KVLoggingSingleton,
    ManifestEntry,
    PipeType,
    is_current,
    load_wav,
    write_features,
)

logger = logging.getLogger(__name__)


class FeaturizationPipe(ClipPipe):
    def __init__(
        self,
        feature_provider: FeatureProvider,
        pipe_logger: Optional[KVLoggingSingleton] = None,
        type: PipeType = PipeType.FEATURIZER,
        config: Optional[ClipPipe.PipeConfig] = None,
        *args,
        **kwargs,
    ):
        self.feature_provider = feature_provider
        super().__init__(
            pipe_logger=pipe_logger,
            type=type,
            config=config
            or ClipPipe.PipeConfig(name="default_featurization_pipe"),
            *args,
            **kwargs,
        )

    def _process(
        self,
        entry: ManifestEntry,
        out_dir: str,
        config_hash: str,
        force: bool = False,
        **kwargs: Any,
    ) -> list[ClipResult]:
        if not force and is_current(out_dir, entry.clip_id, config_hash):
            logger.debug(f"Features of '{entry.clip_id}' are current")
            return [
                ClipResult(clip_id=entry.clip_id, status=ClipStatus.SKIPPED)
            ]
        t0 = time.time()
        clip = load_wav(entry.audio_path)
        tensor = self.feature_provider.featurize(clip)
        paths = write_features(out_dir, entry.clip_id, tensor, config_hash)
        logger.debug(
            f"Featurized '{entry.clip_id}' into {tensor.shape} in "
            f"t={time.time() - t0:.2f} seconds."
        )
        return [
            ClipResult(
                clip_id=entry.clip_id,
                status=ClipStatus.OK,
                shape=list(tensor.shape),
                outputs=[os.path.basename(path) for path in paths],
            )
        ]
