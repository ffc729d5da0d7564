import logging
import os
from typing import Any, Optional

from mrpcen.core import (
    ClipPipe,
    ClipResult,
    ClipStatus,
    EvalProvider,
    KVLoggingSingleton,
    ManifestEntry,
    PipeType,
    read_features,
    write_event_csv,
)

logger = logging.getLogger(__name__)


class DetectionPipe(ClipPipe):
    """Runs the threshold detector on stored features, one CSV per clip."""

    def __init__(
        self,
        eval_provider: EvalProvider,
        pipe_logger: Optional[KVLoggingSingleton] = None,
        type: PipeType = PipeType.DETECTOR,
        config: Optional[ClipPipe.PipeConfig] = None,
        *args,
        **kwargs,
    ):
        self.eval_provider = eval_provider
        super().__init__(
            pipe_logger=pipe_logger,
            type=type,
            config=config
            or ClipPipe.PipeConfig(name="default_detection_pipe"),
            *args,
            **kwargs,
        )

    def _process(
        self,
        entry: ManifestEntry,
        features_dir: str,
        out_dir: str,
        vocabulary: list[str],
        **kwargs: Any,
    ) -> list[ClipResult]:
        tensor = read_features(features_dir, entry.clip_id)
        events = self.eval_provider.detect(tensor, vocabulary)
        name = f"{entry.clip_id}.csv"
        write_event_csv(os.path.join(out_dir, name), events)
        logger.debug(f"Detected {len(events)} events in '{entry.clip_id}'")
        return [
            ClipResult(
                clip_id=entry.clip_id,
                status=ClipStatus.OK,
                outputs=[name],
            )
        ]
