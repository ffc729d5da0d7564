import contextvars
import json
import logging
import uuid
from collections import Counter
from contextlib import asynccontextmanager
from typing import Any, Optional

from .kv_logger import KVLoggingSingleton

logger = logging.getLogger(__name__)

run_id_var = contextvars.ContextVar("run_id", default=None)


class RunManager:
    """
    Tracks the active run and tallies clip outcomes while it lasts.

    Nested pipes share the run id of the pipeline that opened the run, so
    a whole featurization is one run with one tally.
    """

    def __init__(self, logger: KVLoggingSingleton):
        self.logger = logger
        self.run_info: dict[uuid.UUID, dict[str, Any]] = {}

    def generate_run_id(self) -> uuid.UUID:
        return uuid.uuid4()

    async def set_run_info(
        self, pipeline_type: str
    ) -> tuple[uuid.UUID, contextvars.Token, bool]:
        run_id = run_id_var.get()
        created = run_id is None
        if created:
            run_id = self.generate_run_id()
            self.run_info[run_id] = {
                "pipeline_type": pipeline_type,
                "counts": Counter(),
            }
        token = run_id_var.set(run_id)
        return run_id, token, created

    async def get_run_info(self) -> Optional[dict[str, Any]]:
        return self.run_info.get(run_id_var.get())

    async def record_clip(self, status: str) -> None:
        info = await self.get_run_info()
        if info is not None:
            info["counts"][status] += 1

    async def log_run_info(
        self, key: str, value: Any, is_info_log: bool = False
    ):
        run_id = run_id_var.get()
        if run_id:
            await self.logger.log(
                log_id=run_id, key=key, value=value, is_info_log=is_info_log
            )

    async def clear_run_info(self, token: contextvars.Token):
        run_id = run_id_var.get()
        run_id_var.reset(token)
        info = self.run_info.pop(run_id, None)
        if info and info["counts"]:
            counts = dict(sorted(info["counts"].items()))
            logger.info(f"{info['pipeline_type']} run {run_id}: {counts}")
            await self.logger.log(
                log_id=run_id, key="clip_status", value=json.dumps(counts)
            )


@asynccontextmanager
async def manage_run(run_manager: RunManager, pipeline_type: str):
    run_id, token, created = await run_manager.set_run_info(pipeline_type)
    try:
        yield run_id
    finally:
        if created:
            await run_manager.clear_run_info(token)
        else:
            run_id_var.reset(token)
