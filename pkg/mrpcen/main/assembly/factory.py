import logging
from typing import Any, Optional

from mrpcen.core import (
    AugmentationConfig,
    AugmentationPipeline,
    AugmentationProvider,
    DetectionPipeline,
    EvalConfig,
    EvalPipeline,
    EvalProvider,
    FeatureConfig,
    FeatureProvider,
    FeaturizationPipeline,
    FrameSpec,
    KVLoggingSingleton,
    LoggableAsyncPipe,
)

from ..abstractions import MRPCENPipelines, MRPCENPipes, MRPCENProviders
from .config import MRPCENConfig

logger = logging.getLogger(__name__)


class MRPCENProviderFactory:
    def __init__(self, config: MRPCENConfig):
        self.config = config

    def create_feature_provider(
        self, feature_config: FeatureConfig, spec: FrameSpec, *args, **kwargs
    ) -> FeatureProvider:
        feature_provider: Optional[FeatureProvider] = None
        if feature_config.provider == "logmel":
            from mrpcen.providers.features import LogMelFeatureProvider

            feature_provider = LogMelFeatureProvider(feature_config, spec)
        elif feature_config.provider in ("pcen", "mrpcen"):
            from mrpcen.providers.features import PcenFeatureProvider

            feature_provider = PcenFeatureProvider(feature_config, spec)
        else:
            raise ValueError(
                f"Feature provider {feature_config.provider} not supported"
            )
        return feature_provider

    def create_augmentation_provider(
        self, augmentation_config: AugmentationConfig, *args, **kwargs
    ) -> Optional[AugmentationProvider]:
        if augmentation_config.provider == "local":
            from mrpcen.providers.augmentation import (
                LocalAugmentationProvider,
            )

            return LocalAugmentationProvider(augmentation_config)
        elif augmentation_config.provider is None:
            return None
        else:
            raise ValueError(
                f"Augmentation provider {augmentation_config.provider} "
                "not supported."
            )

    def create_eval_provider(
        self, eval_config: EvalConfig, *args, **kwargs
    ) -> EvalProvider:
        if eval_config.provider == "segment":
            from mrpcen.providers.eval import SegmentEvalProvider

            return SegmentEvalProvider(eval_config)
        raise ValueError(
            f"Eval provider {eval_config.provider} not supported."
        )

    def create_providers(
        self,
        feature_provider_override: Optional[FeatureProvider] = None,
        augmentation_provider_override: Optional[AugmentationProvider] = None,
        eval_provider_override: Optional[EvalProvider] = None,
        *args,
        **kwargs,
    ) -> MRPCENProviders:
        return MRPCENProviders(
            features=feature_provider_override
            or self.create_feature_provider(
                self.config.features, self.config.audio, *args, **kwargs
            ),
            augmentation=augmentation_provider_override
            or self.create_augmentation_provider(
                self.config.augmentation, *args, **kwargs
            ),
            eval=eval_provider_override
            or self.create_eval_provider(
                self.config.evaluation, *args, **kwargs
            ),
        )


class MRPCENPipeFactory:
    def __init__(self, config: MRPCENConfig, providers: MRPCENProviders):
        self.config = config
        self.providers = providers

    def create_pipes(
        self,
        featurization_pipe_override: Optional[LoggableAsyncPipe] = None,
        augmentation_pipe_override: Optional[LoggableAsyncPipe] = None,
        detection_pipe_override: Optional[LoggableAsyncPipe] = None,
        eval_pipe_override: Optional[LoggableAsyncPipe] = None,
        *args,
        **kwargs,
    ) -> MRPCENPipes:
        return MRPCENPipes(
            featurization_pipe=featurization_pipe_override
            or self.create_featurization_pipe(*args, **kwargs),
            augmentation_pipe=augmentation_pipe_override
            or self.create_augmentation_pipe(*args, **kwargs),
            detection_pipe=detection_pipe_override
            or self.create_detection_pipe(*args, **kwargs),
            eval_pipe=eval_pipe_override
            or self.create_eval_pipe(*args, **kwargs),
        )

    def _jobs(self) -> int:
        return int(self.config.app.get("jobs", 1) or 1)

    def create_featurization_pipe(self, *args, **kwargs) -> Any:
        from mrpcen.pipes import FeaturizationPipe

        return FeaturizationPipe(
            feature_provider=self.providers.features,
            config=FeaturizationPipe.PipeConfig(
                name="featurization_pipe", jobs=self._jobs()
            ),
        )

    def create_augmentation_pipe(self, *args, **kwargs) -> Any:
        if self.providers.augmentation is None:
            return None

        from mrpcen.pipes import AugmentationPipe

        return AugmentationPipe(
            augmentation_provider=self.providers.augmentation,
            config=AugmentationPipe.PipeConfig(
                name="augmentation_pipe", jobs=self._jobs()
            ),
        )

    def create_detection_pipe(self, *args, **kwargs) -> Any:
        from mrpcen.pipes import DetectionPipe

        return DetectionPipe(
            eval_provider=self.providers.eval,
            config=DetectionPipe.PipeConfig(
                name="detection_pipe", jobs=self._jobs()
            ),
        )

    def create_eval_pipe(self, *args, **kwargs) -> Any:
        from mrpcen.pipes import EvalPipe

        return EvalPipe(
            eval_provider=self.providers.eval,
            config=EvalPipe.PipeConfig(name="eval_pipe"),
        )


class MRPCENPipelineFactory:
    def __init__(self, config: MRPCENConfig, pipes: MRPCENPipes):
        self.config = config
        self.pipes = pipes

    def create_featurization_pipeline(
        self, *args, **kwargs
    ) -> FeaturizationPipeline:
        featurization_pipeline = FeaturizationPipeline()
        featurization_pipeline.add_pipe(self.pipes.featurization_pipe)
        return featurization_pipeline

    def create_augmentation_pipeline(
        self, *args, **kwargs
    ) -> Optional[AugmentationPipeline]:
        # No augmentation provider, no pipeline
        if self.pipes.augmentation_pipe is None:
            return None
        augmentation_pipeline = AugmentationPipeline()
        augmentation_pipeline.add_pipe(self.pipes.augmentation_pipe)
        return augmentation_pipeline

    def create_detection_pipeline(self, *args, **kwargs) -> DetectionPipeline:
        detection_pipeline = DetectionPipeline()
        detection_pipeline.add_pipe(self.pipes.detection_pipe)
        return detection_pipeline

    def create_eval_pipeline(self, *args, **kwargs) -> EvalPipeline:
        eval_pipeline = EvalPipeline()
        eval_pipeline.add_pipe(self.pipes.eval_pipe)
        return eval_pipeline

    def create_pipelines(
        self,
        featurization_pipeline: Optional[FeaturizationPipeline] = None,
        augmentation_pipeline: Optional[AugmentationPipeline] = None,
        detection_pipeline: Optional[DetectionPipeline] = None,
        eval_pipeline: Optional[EvalPipeline] = None,
        *args,
        **kwargs,
    ) -> MRPCENPipelines:
        try:
            self.configure_logging()
        except Exception as e:
            logger.warning(f"Error configuring logging: {e}")
        return MRPCENPipelines(
            featurization_pipeline=featurization_pipeline
            or self.create_featurization_pipeline(*args, **kwargs),
            augmentation_pipeline=augmentation_pipeline
            or self.create_augmentation_pipeline(*args, **kwargs),
            detection_pipeline=detection_pipeline
            or self.create_detection_pipeline(*args, **kwargs),
            eval_pipeline=eval_pipeline
            or self.create_eval_pipeline(*args, **kwargs),
        )

    def configure_logging(self):
        # A process may build several apps; the latest config wins
        KVLoggingSingleton.configure(self.config.logging, force=True)
