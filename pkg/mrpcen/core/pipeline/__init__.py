from .base_pipeline import (
    AugmentationPipeline,
    DetectionPipeline,
    EvalPipeline,
    FeaturizationPipeline,
    Pipeline,
    PipelineTypes,
)

__all__ = [
    "Pipeline",
    "PipelineTypes",
    "FeaturizationPipeline",
    "AugmentationPipeline",
    "DetectionPipeline",
    "EvalPipeline",
]
