from typing import Optional

from mrpcen.core import AsyncSyncMeta, KVLoggingSingleton, RunManager, syncable

from .abstractions import MRPCENPipelines, MRPCENProviders
from .assembly.config import MRPCENConfig
from .services.dataset_service import DatasetService
from .services.management_service import ManagementService


class MRPCENApp(metaclass=AsyncSyncMeta):
    """
    Entry point for every dataset operation.

    Each `aX` coroutine has a blocking twin `X` generated by the metaclass,
    e.g. `app.featurize(manifest)` for `await app.afeaturize(manifest)`.
    """

    def __init__(
        self,
        config: MRPCENConfig,
        providers: MRPCENProviders,
        pipelines: MRPCENPipelines,
        run_manager: Optional[RunManager] = None,
    ):
        logging_connection = KVLoggingSingleton()
        run_manager = run_manager or RunManager(logging_connection)

        self.config = config
        self.providers = providers
        self.pipelines = pipelines
        self.logging_connection = logging_connection
        self.run_manager = run_manager

        self.dataset_service = DatasetService(
            config, providers, pipelines, run_manager, logging_connection
        )
        self.management_service = ManagementService(
            config, providers, pipelines, run_manager, logging_connection
        )

    # Dataset operations
    @syncable
    async def afeaturize(self, *args, **kwargs):
        return await self.dataset_service.featurize_dataset(*args, **kwargs)

    @syncable
    async def aaugment(self, *args, **kwargs):
        return await self.dataset_service.augment_dataset(*args, **kwargs)

    @syncable
    async def adetect(self, *args, **kwargs):
        return await self.dataset_service.detect_dataset(*args, **kwargs)

    @syncable
    async def aevaluate(self, *args, **kwargs):
        return await self.dataset_service.evaluate_run(*args, **kwargs)

    @syncable
    async def ainspect(self, *args, **kwargs):
        return await self.dataset_service.inspect(*args, **kwargs)

    # Management
    @syncable
    async def alogs(self, *args, **kwargs):
        return await self.management_service.alogs(*args, **kwargs)
