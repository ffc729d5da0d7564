from enum import Enum
from typing import Any, Optional

import numpy as np
from pydantic import BaseModel, field_validator

from .audio import as_frozen_array


class Representation(str, Enum):
    LOGMEL = "logmel"
    PCEN = "pcen"
    MRPCEN = "mrpcen"


class FeatureTensor(BaseModel):
    """A featurized clip, shaped [n_mels x n_frames x n_layers]."""

    values: np.ndarray
    representation: Representation
    frame_rate: float
    duration: float
    schedule: Optional[list[float]] = None

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @field_validator("values", mode="before")
    @classmethod
    def _validate_values(cls, value: Any) -> np.ndarray:
        return as_frozen_array(value, 3, "values")

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.values.shape

    @property
    def n_mels(self) -> int:
        return self.values.shape[0]

    @property
    def n_frames(self) -> int:
        return self.values.shape[1]


class FeatureSidecar(BaseModel):
    """Metadata written next to every feature file."""

    clip_id: str
    config_hash: str
    representation: Representation
    schedule: Optional[list[float]] = None
    frame_rate: float
    duration: float
    shape: list[int]


class LayerStats(BaseModel):
    layer: int
    rate: Optional[float] = None
    min: float
    mean: float
    max: float


class FeatureSummary(BaseModel):
    path: str
    shape: list[int]
    dtype: str
    config_hash: Optional[str] = None
    clip_id: Optional[str] = None
    layers: list[LayerStats]
