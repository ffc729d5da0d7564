import os
from abc import ABC
from typing import Optional

from mrpcen.core import KVLoggingSingleton, RunManager

from ..abstractions import MRPCENPipelines, MRPCENProviders
from ..assembly.config import MRPCENConfig

CACHE_DIR_ENV = "MRPCEN_CACHE_DIR"


class Service(ABC):
    def __init__(
        self,
        config: MRPCENConfig,
        providers: MRPCENProviders,
        pipelines: MRPCENPipelines,
        run_manager: RunManager,
        logging_connection: KVLoggingSingleton,
    ):
        self.config = config
        self.providers = providers
        self.pipelines = pipelines
        self.run_manager = run_manager
        self.logging_connection = logging_connection

    def resolve_out_dir(self, out_dir: Optional[str] = None) -> str:
        """`out_dir`, else `$MRPCEN_CACHE_DIR`, else `app.cache_dir`."""
        return (
            out_dir
            or os.getenv(CACHE_DIR_ENV)
            or self.config.app.get("cache_dir", "mrpcen_cache")
        )
