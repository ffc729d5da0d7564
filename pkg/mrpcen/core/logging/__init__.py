from .kv_logger import (
    KVLoggingSingleton,
    LocalKVLoggingProvider,
    LoggingConfig,
    RunInfo,
)
from .run_manager import RunManager, manage_run

__all__ = [
    "KVLoggingSingleton",
    "LocalKVLoggingProvider",
    "LoggingConfig",
    "RunInfo",
    "RunManager",
    "manage_run",
]
