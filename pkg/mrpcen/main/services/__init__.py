from .base import CACHE_DIR_ENV, Service
from .dataset_service import DatasetService
from .management_service import ManagementService

__all__ = [
    "CACHE_DIR_ENV",
    "Service",
    "DatasetService",
    "ManagementService",
]
