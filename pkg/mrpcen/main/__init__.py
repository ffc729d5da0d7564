from .abstractions import (
    MRPCENLogsRequest,
    MRPCENPipelines,
    MRPCENPipes,
    MRPCENProviders,
)
from .app import MRPCENApp
from .assembly.builder import MRPCENAppBuilder
from .assembly.config import MRPCENConfig
from .assembly.factory import (
    MRPCENPipeFactory,
    MRPCENPipelineFactory,
    MRPCENProviderFactory,
)

__all__ = [
    "MRPCENLogsRequest",
    "MRPCENPipelines",
    "MRPCENPipes",
    "MRPCENProviders",
    "MRPCENApp",
    "MRPCENAppBuilder",
    "MRPCENConfig",
    "MRPCENPipeFactory",
    "MRPCENPipelineFactory",
    "MRPCENProviderFactory",
]
