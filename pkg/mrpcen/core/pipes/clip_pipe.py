import asyncio
import logging
import uuid
from abc import abstractmethod
from typing import Any, AsyncGenerator, Optional

from pydantic import ValidationError

from ..abstractions.manifest import ManifestEntry
from ..abstractions.run import ClipResult, ClipStatus
from ..exc import MRPCENException
from ..logging.run_manager import RunManager
from .base_pipe import AsyncState
from .loggable_pipe import LoggableAsyncPipe

logger = logging.getLogger(__name__)

# Raised for one bad clip; anything else (e.g. OSError) aborts the run.
CLIP_ERRORS = (MRPCENException, ValidationError)


class ClipPipe(LoggableAsyncPipe):
    """
    Runs a blocking job per manifest entry on at most `jobs` worker threads.

    Results come out in input order however the jobs interleave.
    """

    class PipeConfig(LoggableAsyncPipe.PipeConfig):
        name: str = "default_clip_pipe"
        jobs: int = 1

    class Input(LoggableAsyncPipe.Input):
        message: AsyncGenerator[ManifestEntry, None]

    async def _run_logic(
        self,
        input: Input,
        state: AsyncState,
        run_id: uuid.UUID,
        jobs: Optional[int] = None,
        run_manager: Optional[RunManager] = None,
        *args: Any,
        **kwargs: Any,
    ) -> AsyncGenerator[ClipResult, None]:
        semaphore = asyncio.Semaphore(max(1, jobs or self.config.jobs))

        async def handle(entry: ManifestEntry) -> list[ClipResult]:
            async with semaphore:
                try:
                    results = await asyncio.to_thread(
                        self._process, entry, **kwargs
                    )
                except CLIP_ERRORS as e:
                    logger.warning(f"Clip '{entry.clip_id}' failed: {e}")
                    results = [
                        ClipResult(
                            clip_id=entry.clip_id,
                            status=ClipStatus.FAILED,
                            error=str(e),
                        )
                    ]
            for result in results:
                if run_manager is not None:
                    await run_manager.record_clip(result.status.value)
                await self.enqueue_log(
                    run_id,
                    "clip",
                    result.model_dump(mode="json", exclude={"entry"}),
                )
            return results

        tasks = [
            asyncio.create_task(handle(entry)) async for entry in input.message
        ]
        batches = await asyncio.gather(*tasks)
        results = [result for batch in batches for result in batch]
        await state.update(self.config.name, {"output": results})
        for result in results:
            yield result

    @abstractmethod
    def _process(
        self, entry: ManifestEntry, **kwargs: Any
    ) -> list[ClipResult]:
        """Handle one clip; runs on a worker thread."""
        pass
