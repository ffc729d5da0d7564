from typing import Optional

from pydantic import BaseModel

from mrpcen.core import (
    AugmentationPipeline,
    AugmentationProvider,
    DetectionPipeline,
    EvalPipeline,
    EvalProvider,
    FeatureProvider,
    FeaturizationPipeline,
    LoggableAsyncPipe,
)


class MRPCENProviders(BaseModel):
    features: FeatureProvider
    augmentation: Optional[AugmentationProvider]
    eval: EvalProvider

    class Config:
        arbitrary_types_allowed = True


class MRPCENPipes(BaseModel):
    featurization_pipe: LoggableAsyncPipe
    augmentation_pipe: Optional[LoggableAsyncPipe]
    detection_pipe: LoggableAsyncPipe
    eval_pipe: LoggableAsyncPipe

    class Config:
        arbitrary_types_allowed = True


class MRPCENPipelines(BaseModel):
    featurization_pipeline: FeaturizationPipeline
    augmentation_pipeline: Optional[AugmentationPipeline]
    detection_pipeline: DetectionPipeline
    eval_pipeline: EvalPipeline

    class Config:
        arbitrary_types_allowed = True


class MRPCENLogsRequest(BaseModel):
    log_type_filter: Optional[str] = None
    max_runs_requested: int = 100
