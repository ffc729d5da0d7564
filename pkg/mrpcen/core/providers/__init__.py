from .augmentation_provider import (
    AugmentationConfig,
    AugmentationProvider,
    ImpulseResponseSpec,
    pitch_suffix,
    reverb_suffix,
)
from .base_provider import Provider, ProviderConfig
from .eval_provider import (
    BootstrapConfig,
    EvalConfig,
    EvalProvider,
    EvaluationResult,
)
from .feature_provider import FeatureConfig, FeatureProvider

__all__ = [
    "Provider",
    "ProviderConfig",
    "FeatureConfig",
    "FeatureProvider",
    "AugmentationConfig",
    "AugmentationProvider",
    "ImpulseResponseSpec",
    "reverb_suffix",
    "pitch_suffix",
    "EvalConfig",
    "EvalProvider",
    "BootstrapConfig",
    "EvaluationResult",
]
