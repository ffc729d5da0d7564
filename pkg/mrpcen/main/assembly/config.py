import copy
import json
import logging
import os
from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, ValidationError

from ...core.abstractions.audio import FrameSpec
from ...core.logging.kv_logger import LoggingConfig
from ...core.providers.augmentation_provider import AugmentationConfig
from ...core.providers.base_provider import ProviderConfig
from ...core.providers.eval_provider import EvalConfig
from ...core.providers.feature_provider import FeatureConfig
from ...core.utils import canonical_json, config_hash

logger = logging.getLogger(__name__)

# Sections whose values determine the content of a feature file.
FEATURE_SECTIONS = ("audio", "features")


class MRPCENConfig:
    REQUIRED_KEYS: dict[str, list] = {
        "app": ["cache_dir", "jobs"],
        "audio": ["sample_rate", "window_length", "hop_length", "n_mels"],
        "features": ["provider"],
        "augmentation": ["provider"],
        "evaluation": ["provider", "segment_length"],
        "logging": ["provider", "log_table"],
    }
    app: dict[str, Any]
    audio: FrameSpec
    features: FeatureConfig
    augmentation: AugmentationConfig
    evaluation: EvalConfig
    logging: LoggingConfig

    def __init__(self, config_data: dict[str, Any]):
        default_config = self.load_default_config()

        for key in config_data:
            if key in default_config and isinstance(config_data[key], dict):
                default_config[key].update(config_data[key])
            else:
                default_config[key] = config_data[key]

        for section, keys in MRPCENConfig.REQUIRED_KEYS.items():
            if not isinstance(default_config.get(section), dict):
                raise ValueError(f"'{section}' config must be an object")
            # Keys are only required when a provider is set
            if default_config[section].get("provider") not in (None, "None"):
                self._validate_config_section(default_config, section, keys)
            setattr(self, section, default_config[section])
        self.extra_sections = {
            k: v
            for k, v in default_config.items()
            if k not in MRPCENConfig.REQUIRED_KEYS
        }

        self.app = self.app  # for type hinting
        self.audio = self._build(FrameSpec, "audio", self.audio)
        self.features = self._create(FeatureConfig, "features")
        self.augmentation = self._create(AugmentationConfig, "augmentation")
        self.evaluation = self._create(EvalConfig, "evaluation")
        self.logging = self._create(LoggingConfig, "logging")

    @staticmethod
    def _build(model: type[BaseModel], section: str, data: dict) -> Any:
        try:
            return model(**data)
        except ValidationError as e:
            raise ValueError(f"Invalid '{section}' config: {e}")

    def _create(
        self, config_cls: type[ProviderConfig], section: str
    ) -> ProviderConfig:
        try:
            instance = config_cls.create(**getattr(self, section))
            instance.validate()
        except ValueError as e:
            raise ValueError(f"Invalid '{section}' config: {e}")
        return instance

    def _validate_config_section(
        self, config_data: dict[str, Any], section: str, keys: list
    ):
        if section not in config_data:
            raise ValueError(f"Missing '{section}' section in config")
        missing = [key for key in keys if key not in config_data[section]]
        if missing:
            raise ValueError(
                f"Missing required keys {missing} in '{section}' config"
            )

    @classmethod
    def from_json(cls, config_path: Optional[str] = None) -> "MRPCENConfig":
        if config_path is None:
            return cls({})

        if not os.path.isfile(config_path):
            raise ValueError(f"Config file '{config_path}' does not exist.")
        with open(config_path) as f:
            try:
                config_data = json.load(f)
            except json.JSONDecodeError as e:
                raise ValueError(f"Config '{config_path}' is not JSON: {e}")
        if not isinstance(config_data, dict):
            raise ValueError(f"Config '{config_path}' must be a JSON object.")
        return cls(config_data)

    def to_dict(self) -> dict[str, Any]:
        config_data = {
            section: self._serialize_config(getattr(self, section))
            for section in MRPCENConfig.REQUIRED_KEYS.keys()
        }
        config_data.update(copy.deepcopy(self.extra_sections))
        return config_data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def config_hash(self, sections: tuple[str, ...] = FEATURE_SECTIONS) -> str:
        """SHA-256 over the canonical JSON of the given sections."""
        data = self.to_dict()
        return config_hash({section: data[section] for section in sections})

    def canonical(self, sections: tuple[str, ...] = FEATURE_SECTIONS) -> str:
        data = self.to_dict()
        return canonical_json({section: data[section] for section in sections})

    @classmethod
    def load_default_config(cls) -> dict:
        # Get the root directory of the project
        file_dir = os.path.dirname(os.path.abspath(__file__))
        default_config_path = os.path.join(
            file_dir, "..", "..", "..", "config.json"
        )
        # Load default configuration from JSON file
        with open(default_config_path) as f:
            return json.load(f)

    @staticmethod
    def _serialize_config(config_section: Any) -> dict:
        if isinstance(config_section, BaseModel):
            config_section = config_section.model_dump(mode="json")
            config_section.pop("extra_fields", None)
        filtered_result = {}
        for k, v in config_section.items():
            if isinstance(k, Enum):
                k = k.value
            if isinstance(v, Enum):
                v = v.value
            filtered_result[k] = v
        return filtered_result
