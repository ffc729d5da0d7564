import os
from typing import Optional, Type

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

from ..app import MRPCENApp
from .config import MRPCENConfig
from .factory import (
    MRPCENPipeFactory,
    MRPCENPipelineFactory,
    MRPCENProviderFactory,
)


class MRPCENAppBuilder:
    current_file_path = os.path.dirname(__file__)
    config_root = os.path.join(
        current_file_path, "..", "..", "examples", "configs"
    )
    CONFIG_OPTIONS = {
        "default": None,
        "miniature": os.path.join(config_root, "miniature.json"),
        "logmel": os.path.join(config_root, "logmel.json"),
        "dry": os.path.join(config_root, "dry.json"),
        "realreverb": os.path.join(config_root, "realreverb.json"),
        "simreverb": os.path.join(config_root, "simreverb.json"),
    }

    @staticmethod
    def get_config(config_name: Optional[str] = None) -> MRPCENConfig:
        if config_name is None:
            return MRPCENConfig.from_json()
        if config_name in MRPCENAppBuilder.CONFIG_OPTIONS:
            return MRPCENConfig.from_json(
                MRPCENAppBuilder.CONFIG_OPTIONS[config_name]
            )
        raise ValueError(f"Invalid config name: {config_name}")

    def __init__(
        self,
        config: Optional[MRPCENConfig] = None,
        from_config: Optional[str] = None,
    ):
        if config and from_config:
            raise ValueError("Cannot specify both config and config_name")
        self.config = config or MRPCENAppBuilder.get_config(from_config)
        self.app_override: Optional[Type[MRPCENApp]] = None
        self.provider_factory_override: Optional[
            Type[MRPCENProviderFactory]
        ] = None
        self.pipe_factory_override: Optional[Type[MRPCENPipeFactory]] = None
        self.pipeline_factory_override: Optional[
            Type[MRPCENPipelineFactory]
        ] = None
        self.feature_provider_override: Optional[FeatureProvider] = None
        self.augmentation_provider_override: Optional[
            AugmentationProvider
        ] = None
        self.eval_provider_override: Optional[EvalProvider] = None
        self.featurization_pipe_override: Optional[LoggableAsyncPipe] = None
        self.augmentation_pipe_override: Optional[LoggableAsyncPipe] = None
        self.detection_pipe_override: Optional[LoggableAsyncPipe] = None
        self.eval_pipe_override: Optional[LoggableAsyncPipe] = None
        self.featurization_pipeline: Optional[FeaturizationPipeline] = None
        self.augmentation_pipeline: Optional[AugmentationPipeline] = None
        self.detection_pipeline: Optional[DetectionPipeline] = None
        self.eval_pipeline: Optional[EvalPipeline] = None

    def with_app(self, app: Type[MRPCENApp]):
        self.app_override = app
        return self

    def with_provider_factory(self, factory: Type[MRPCENProviderFactory]):
        self.provider_factory_override = factory
        return self

    def with_pipe_factory(self, factory: Type[MRPCENPipeFactory]):
        self.pipe_factory_override = factory
        return self

    def with_pipeline_factory(self, factory: Type[MRPCENPipelineFactory]):
        self.pipeline_factory_override = factory
        return self

    def with_feature_provider(self, provider: FeatureProvider):
        self.feature_provider_override = provider
        return self

    def with_augmentation_provider(self, provider: AugmentationProvider):
        self.augmentation_provider_override = provider
        return self

    def with_eval_provider(self, provider: EvalProvider):
        self.eval_provider_override = provider
        return self

    def with_featurization_pipe(self, pipe: LoggableAsyncPipe):
        self.featurization_pipe_override = pipe
        return self

    def with_augmentation_pipe(self, pipe: LoggableAsyncPipe):
        self.augmentation_pipe_override = pipe
        return self

    def with_detection_pipe(self, pipe: LoggableAsyncPipe):
        self.detection_pipe_override = pipe
        return self

    def with_eval_pipe(self, pipe: LoggableAsyncPipe):
        self.eval_pipe_override = pipe
        return self

    def with_featurization_pipeline(self, pipeline: FeaturizationPipeline):
        self.featurization_pipeline = pipeline
        return self

    def with_augmentation_pipeline(self, pipeline: AugmentationPipeline):
        self.augmentation_pipeline = pipeline
        return self

    def with_detection_pipeline(self, pipeline: DetectionPipeline):
        self.detection_pipeline = pipeline
        return self

    def with_eval_pipeline(self, pipeline: EvalPipeline):
        self.eval_pipeline = pipeline
        return self

    def build(self, *args, **kwargs) -> MRPCENApp:
        provider_factory = (
            self.provider_factory_override or MRPCENProviderFactory
        )
        pipe_factory = self.pipe_factory_override or MRPCENPipeFactory
        pipeline_factory = (
            self.pipeline_factory_override or MRPCENPipelineFactory
        )

        providers = provider_factory(self.config).create_providers(
            feature_provider_override=self.feature_provider_override,
            augmentation_provider_override=(
                self.augmentation_provider_override
            ),
            eval_provider_override=self.eval_provider_override,
            *args,
            **kwargs,
        )

        pipes = pipe_factory(self.config, providers).create_pipes(
            featurization_pipe_override=self.featurization_pipe_override,
            augmentation_pipe_override=self.augmentation_pipe_override,
            detection_pipe_override=self.detection_pipe_override,
            eval_pipe_override=self.eval_pipe_override,
            *args,
            **kwargs,
        )

        pipelines = pipeline_factory(self.config, pipes).create_pipelines(
            featurization_pipeline=self.featurization_pipeline,
            augmentation_pipeline=self.augmentation_pipeline,
            detection_pipeline=self.detection_pipeline,
            eval_pipeline=self.eval_pipeline,
            *args,
            **kwargs,
        )

        app = self.app_override or MRPCENApp
        return app(self.config, providers, pipelines)
