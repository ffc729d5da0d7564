import asyncio
import logging
import os
import uuid
from typing import Any, AsyncGenerator, Optional

from pydantic import BaseModel

from mrpcen.core import (
    CLIP_ERRORS,
    AsyncState,
    ClipResult,
    ClipStatus,
    EvalProvider,
    EvaluationResult,
    EventList,
    LoggableAsyncPipe,
    ManifestEntry,
    PipeType,
    RunManager,
    SegmentCounts,
    read_event_csv,
    wav_duration,
)

logger = logging.getLogger(__name__)


class EvalPipe(LoggableAsyncPipe):
    """
    Scores the prediction CSV of each clip against its annotation, then
    pools and bootstraps the per-clip counts.

    A missing prediction file counts as an empty prediction.
    """

    class EvalRun(BaseModel):
        result: Optional[EvaluationResult] = None
        clips: list[ClipResult] = []
        missing_predictions: list[str] = []

    class Input(LoggableAsyncPipe.Input):
        message: AsyncGenerator[ManifestEntry, None]

    def __init__(
        self,
        eval_provider: EvalProvider,
        type: PipeType = PipeType.EVAL,
        config: Optional[LoggableAsyncPipe.PipeConfig] = None,
        *args,
        **kwargs,
    ):
        self.eval_provider = eval_provider
        super().__init__(
            type=type,
            config=config
            or LoggableAsyncPipe.PipeConfig(name="default_eval_pipe"),
            *args,
            **kwargs,
        )

    def _score_clip(
        self,
        entry: ManifestEntry,
        predictions_dir: str,
        vocabulary: list[str],
    ) -> tuple[SegmentCounts, bool]:
        if entry.annotation_path is None:
            raise ValueError(f"Clip '{entry.clip_id}' has no annotation.")
        duration = wav_duration(entry.audio_path)
        ref = read_event_csv(entry.annotation_path, vocabulary, duration)
        prediction_path = os.path.join(predictions_dir, f"{entry.clip_id}.csv")
        found = os.path.isfile(prediction_path)
        if found:
            est = read_event_csv(prediction_path, vocabulary, duration)
        else:
            est = EventList(duration=duration, vocabulary=vocabulary)
        return self.eval_provider.score(ref, est), found

    async def _run_logic(
        self,
        input: Input,
        state: AsyncState,
        run_id: uuid.UUID,
        predictions_dir: str,
        vocabulary: list[str],
        seed: Optional[int] = None,
        run_manager: Optional[RunManager] = None,
        *args: Any,
        **kwargs: Any,
    ) -> AsyncGenerator["EvalPipe.EvalRun", None]:
        run = self.EvalRun()
        per_clip_counts = []
        async for entry in input.message:
            try:
                counts, found = await asyncio.to_thread(
                    self._score_clip, entry, predictions_dir, vocabulary
                )
            except (*CLIP_ERRORS, ValueError) as e:
                logger.warning(f"Clip '{entry.clip_id}' not scored: {e}")
                run.clips.append(
                    ClipResult(
                        clip_id=entry.clip_id,
                        status=ClipStatus.FAILED,
                        error=str(e),
                    )
                )
                if run_manager is not None:
                    await run_manager.record_clip(ClipStatus.FAILED.value)
                continue
            if not found:
                logger.warning(
                    f"No prediction for '{entry.clip_id}' in "
                    f"{predictions_dir}; scoring it as empty."
                )
                run.missing_predictions.append(entry.clip_id)
            per_clip_counts.append(counts)
            run.clips.append(
                ClipResult(clip_id=entry.clip_id, status=ClipStatus.OK)
            )
            if run_manager is not None:
                await run_manager.record_clip(ClipStatus.OK.value)
            await self.enqueue_log(
                run_id,
                "clip_counts",
                {
                    "clip_id": entry.clip_id,
                    "tp": int(counts.tp.sum()),
                    "fp": int(counts.fp.sum()),
                    "fn": int(counts.fn.sum()),
                },
            )
        if per_clip_counts:
            run.result = await asyncio.to_thread(
                self.eval_provider.evaluate, per_clip_counts, seed
            )
            await self.enqueue_log(run_id, "f1", str(run.result.overall.f1))
        await state.update(self.config.name, {"output": run})
        yield run
