import asyncio
import json
import logging
import uuid
from abc import abstractmethod
from typing import Any, AsyncGenerator, Optional

from pydantic import BaseModel

from ..logging.kv_logger import KVLoggingSingleton
from ..logging.run_manager import RunManager, manage_run
from .base_pipe import AsyncPipe, AsyncState, PipeType

logger = logging.getLogger(__name__)


class LoggableAsyncPipe(AsyncPipe):
    """
    A pipe whose entries are written to the run log.

    Entries go through a bounded queue drained by a background worker;
    entries beyond `max_log_queue_size` are dropped, never awaited.
    """

    class PipeConfig(AsyncPipe.PipeConfig):
        name: str = "default_loggable_pipe"
        max_log_queue_size: int = 100

    def __init__(
        self,
        pipe_logger: Optional[KVLoggingSingleton] = None,
        type: PipeType = PipeType.OTHER,
        config: Optional[AsyncPipe.PipeConfig] = None,
        run_manager: Optional[RunManager] = None,
    ):
        self.pipe_logger = pipe_logger or KVLoggingSingleton()
        self.log_queue: Optional[asyncio.Queue] = None
        self.log_worker_task = None
        self._run_manager = run_manager or RunManager(self.pipe_logger)
        super().__init__(type=type, config=config)

    async def log_worker(self):
        while True:
            run_id, key, value = await self.log_queue.get()
            try:
                await self.pipe_logger.log(run_id, key, value)
            finally:
                self.log_queue.task_done()

    async def enqueue_log(self, run_id: uuid.UUID, key: str, value: Any):
        if isinstance(value, BaseModel):
            value = value.model_dump_json()
        elif not isinstance(value, str):
            value = json.dumps(value, sort_keys=True)
        if self.log_queue is None:
            return
        if self.log_queue.qsize() < self.config.max_log_queue_size:
            await self.log_queue.put((run_id, key, value))
        else:
            logger.debug(f"{self.config.name}: log queue full, dropped {key}")

    async def run(
        self,
        input: AsyncPipe.Input,
        state: AsyncState,
        run_manager: Optional[RunManager] = None,
        *args: Any,
        **kwargs: Any,
    ) -> AsyncGenerator[Any, None]:
        run_manager = run_manager or self._run_manager

        async def wrapped_run() -> AsyncGenerator[Any, None]:
            async with manage_run(run_manager, self.config.name) as run_id:
                # the queue lives on the loop that runs the pipe
                self.log_queue = asyncio.Queue()
                self.log_worker_task = asyncio.create_task(
                    self.log_worker(), name=f"log-worker-{self.config.name}"
                )
                try:
                    async for result in self._run_logic(
                        input,
                        state,
                        run_id=run_id,
                        run_manager=run_manager,
                        *args,
                        **kwargs,
                    ):
                        yield result
                finally:
                    await self.log_queue.join()
                    self.log_worker_task.cancel()
                    self.log_queue = None

        return wrapped_run()

    @abstractmethod
    async def _run_logic(
        self,
        input: AsyncPipe.Input,
        state: AsyncState,
        run_id: uuid.UUID,
        *args: Any,
        **kwargs: Any,
    ) -> AsyncGenerator[Any, None]:
        pass
