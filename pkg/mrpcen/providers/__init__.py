from .augmentation import LocalAugmentationProvider
from .eval import SegmentEvalProvider
from .features import LogMelFeatureProvider, PcenFeatureProvider

__all__ = [
    # Features
    "LogMelFeatureProvider",
    "PcenFeatureProvider",
    # Augmentation
    "LocalAugmentationProvider",
    # Evaluation
    "SegmentEvalProvider",
]
