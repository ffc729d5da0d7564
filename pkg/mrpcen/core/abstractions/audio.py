"""Abstractions for audio clips, framing parameters and mel spectrograms."""

import logging
from typing import Any, Optional

import numpy as np
from pydantic import BaseModel, field_validator, model_validator

logger = logging.getLogger(__name__)


def as_frozen_array(value: Any, ndim: int, name: str) -> np.ndarray:
    array = np.array(value, dtype=np.float64, copy=True)
    if array.ndim != ndim:
        raise ValueError(
            f"`{name}` must have {ndim} dimension(s), got shape {array.shape}."
        )
    if not np.all(np.isfinite(array)):
        raise ValueError(f"`{name}` contains NaN or infinite values.")
    array.flags.writeable = False
    return array


class AudioClip(BaseModel):
    """A mono sample buffer and its sample rate."""

    samples: np.ndarray
    sample_rate: int

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @field_validator("samples", mode="before")
    @classmethod
    def _validate_samples(cls, value: Any) -> np.ndarray:
        return as_frozen_array(value, 1, "samples")

    @field_validator("sample_rate")
    @classmethod
    def _validate_sample_rate(cls, value: int) -> int:
        if value <= 0:
            raise ValueError(f"Sample rate must be positive, got {value}.")
        return value

    def __len__(self) -> int:
        return self.samples.shape[0]

    @property
    def duration(self) -> float:
        return len(self) / self.sample_rate

    @property
    def peak(self) -> float:
        return float(np.max(np.abs(self.samples))) if len(self) else 0.0


class FrameSpec(BaseModel):
    """Short-time framing and mel-band layout of a spectrogram."""

    sample_rate: int = 44100
    window_length: int = 1024
    hop_length: int = 512
    n_mels: int = 128
    fmin: float = 0.0
    fmax: Optional[float] = None

    class Config:
        frozen = True
        extra = "forbid"

    @model_validator(mode="after")
    def _validate_layout(self) -> "FrameSpec":
        if self.sample_rate <= 0:
            raise ValueError(
                f"Sample rate must be positive, got {self.sample_rate}."
            )
        if not 0 < self.hop_length <= self.window_length:
            raise ValueError(
                "Hop length must satisfy 0 < hop_length <= window_length, "
                f"got hop_length={self.hop_length}, "
                f"window_length={self.window_length}."
            )
        if self.n_mels < 1:
            raise ValueError(f"n_mels must be at least 1, got {self.n_mels}.")
        nyquist = self.sample_rate / 2
        if self.fmax is None:
            object.__setattr__(self, "fmax", float(nyquist))
        if self.fmax > nyquist:
            raise ValueError(
                f"fmax={self.fmax} Hz exceeds the Nyquist frequency "
                f"{nyquist} Hz."
            )
        if not 0 <= self.fmin < self.fmax:
            raise ValueError(
                f"Frequency range must satisfy 0 <= fmin < fmax, got "
                f"fmin={self.fmin}, fmax={self.fmax}."
            )
        return self

    @property
    def n_bins(self) -> int:
        return self.window_length // 2 + 1

    @property
    def frame_rate(self) -> float:
        """Frames per second; one frame is the smoother's time step."""
        return self.sample_rate / self.hop_length

    def n_frames(self, n_samples: int) -> int:
        """Frame count under centered framing."""
        return 1 + n_samples // self.hop_length


class MelSpectrogram(BaseModel):
    """Mel-band energies E(t, f), shaped [n_mels x n_frames]."""

    values: np.ndarray
    spec: FrameSpec

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @field_validator("values", mode="before")
    @classmethod
    def _validate_values(cls, value: Any) -> np.ndarray:
        array = as_frozen_array(value, 2, "values")
        if np.any(array < 0):
            raise ValueError("Mel spectrogram values must be nonnegative.")
        return array

    @model_validator(mode="after")
    def _validate_bands(self) -> "MelSpectrogram":
        if self.values.shape[0] != self.spec.n_mels:
            raise ValueError(
                f"Expected {self.spec.n_mels} mel bands, got "
                f"{self.values.shape[0]}."
            )
        return self

    @property
    def n_mels(self) -> int:
        return self.values.shape[0]

    @property
    def n_frames(self) -> int:
        return self.values.shape[1]

    @property
    def frame_rate(self) -> float:
        return self.spec.frame_rate


class ImpulseResponse(BaseModel):
    """The response h(t) of an acoustic environment, recorded or synthetic."""

    samples: np.ndarray
    sample_rate: int
    label: str

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @field_validator("samples", mode="before")
    @classmethod
    def _validate_samples(cls, value: Any) -> np.ndarray:
        array = as_frozen_array(value, 1, "samples")
        if array.size == 0:
            raise ValueError("An impulse response needs at least one sample.")
        return array

    @field_validator("sample_rate")
    @classmethod
    def _validate_sample_rate(cls, value: int) -> int:
        if value <= 0:
            raise ValueError(f"Sample rate must be positive, got {value}.")
        return value

    def __len__(self) -> int:
        return self.samples.shape[0]
