from .augmentation_pipe import AugmentationPipe
from .detection_pipe import DetectionPipe
from .eval_pipe import EvalPipe
from .featurization_pipe import FeaturizationPipe

__all__ = [
    "FeaturizationPipe",
    "AugmentationPipe",
    "DetectionPipe",
    "EvalPipe",
]
