import logging
from typing import Any, Optional

from mrpcen.core import KVLoggingSingleton, RunManager

from ..abstractions import MRPCENPipelines, MRPCENProviders
from ..assembly.config import MRPCENConfig
from .base import Service

logger = logging.getLogger(__name__)


class ManagementService(Service):
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

    async def alogs(
        self,
        log_type_filter: Optional[str] = None,
        max_runs_requested: int = 100,
        *args: Any,
        **kwargs: Any,
    ) -> list[dict]:
        """Recent runs, newest first, each with its entries oldest first."""
        if not self.logging_connection.is_enabled():
            logger.warning("Run logging is disabled; no logs to show.")
            return []
        limit = self.config.app.get("max_logs_per_request", 100)
        if max_runs_requested > limit:
            raise ValueError(
                f"Max runs requested ({max_runs_requested}) exceeds the "
                f"limit of {limit}."
            )

        run_info = await self.logging_connection.get_run_info(
            limit=max_runs_requested,
            log_type_filter=log_type_filter,
        )
        run_ids = [run.run_id for run in run_info]
        if len(run_ids) == 0:
            return []
        logs = await self.logging_connection.get_logs(
            run_ids, limit_per_run=limit
        )
        aggregated_logs = []
        for run in run_info:
            run_logs = [log for log in logs if log["log_id"] == run.run_id]
            # Stored newest first
            entries = [
                {"key": log["key"], "value": log["value"]} for log in run_logs
            ][::-1]
            aggregated_logs.append(
                {
                    "run_id": run.run_id,
                    "run_type": run.log_type,
                    "entries": entries,
                }
            )

        return aggregated_logs
