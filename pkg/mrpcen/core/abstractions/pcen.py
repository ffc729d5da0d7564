"""Abstractions for PCEN parameters, rate schedules and multi-rate stacks."""

import math
from typing import Any, Optional

import numpy as np
from pydantic import BaseModel, field_validator, model_validator

from ..exc import ArgError
from .audio import FrameSpec, as_frozen_array


class PcenParams(BaseModel):
    """
    Parameters of the PCEN transform.

    `T` is the rate parameter in frames. The smoothing weight `s` is always
    derived from `T` and cannot be set directly.
    """

    epsilon: float = 1e-6
    alpha: float = 0.98
    delta: float = 2.0
    r: float = 0.5
    T: float = 2.0

    class Config:
        frozen = True
        extra = "forbid"

    @model_validator(mode="after")
    def _validate_ranges(self) -> "PcenParams":
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}.")
        if not 0 <= self.alpha <= 1:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}.")
        if not self.delta > 0:
            raise ValueError(f"delta must be positive, got {self.delta}.")
        if not 0 < self.r <= 1:
            raise ValueError(f"r must lie in (0, 1], got {self.r}.")
        if not (math.isfinite(self.T) and self.T >= 1):
            raise ValueError(
                f"Rate parameter T must be at least 1 frame, got {self.T}."
            )
        return self

    @property
    def s(self) -> float:
        from ..dsp.pcen import smoothing_coefficient

        return smoothing_coefficient(self.T)

    @property
    def omega_c(self) -> float:
        """Cutoff in radians per frame, clamped to pi."""
        return min(2 * math.pi / self.T, math.pi)

    @property
    def clamped(self) -> bool:
        return 2 * math.pi / self.T > math.pi

    @property
    def floor(self) -> float:
        """The value every PCEN output stays strictly above."""
        return -(self.delta**self.r)

    def with_rate(self, T: float) -> "PcenParams":
        return self.__class__(**{**self.model_dump(), "T": T})


class RateSchedule(BaseModel):
    """An ordered list of rate parameters, one per MRPCEN layer."""

    rates: list[float]

    class Config:
        frozen = True
        extra = "forbid"

    @field_validator("rates")
    @classmethod
    def _validate_rates(cls, rates: list[float]) -> list[float]:
        if not rates:
            raise ValueError("A rate schedule needs at least one rate.")
        if any(not math.isfinite(rate) or rate < 1 for rate in rates):
            raise ValueError(f"All rates must be at least 1, got {rates}.")
        if any(b <= a for a, b in zip(rates, rates[1:])):
            raise ValueError(f"Rates must strictly increase, got {rates}.")
        return [float(rate) for rate in rates]

    def __len__(self) -> int:
        return len(self.rates)

    def index(self, rate: float) -> int:
        try:
            return self.rates.index(float(rate))
        except ValueError:
            raise ArgError(
                f"Rate {rate} is not part of the schedule {self.rates}."
            )

    @classmethod
    def powers_of_two(cls, k_min: int = 0, k_max: int = 9) -> "RateSchedule":
        if k_min < 0 or k_max < k_min:
            raise ValueError(
                f"Need 0 <= k_min <= k_max, got k_min={k_min}, k_max={k_max}."
            )
        return cls(rates=[2.0**k for k in range(k_min, k_max + 1)])

    @classmethod
    def contiguous_windows(
        cls, base: "RateSchedule", n_layers: Optional[int] = None
    ) -> list["RateSchedule"]:
        """
        Every contiguous run of `base`, shortest windows first.

        With `n_layers` set, only windows of exactly that many layers.
        """
        sizes = (
            range(1, len(base) + 1) if n_layers is None else [n_layers]
        )
        windows = []
        for size in sizes:
            if not 1 <= size <= len(base):
                raise ValueError(
                    f"Window size must lie in [1, {len(base)}], got {size}."
                )
            for start in range(len(base) - size + 1):
                windows.append(cls(rates=base.rates[start : start + size]))
        return windows


class SmootherState(BaseModel):
    """Per-band smoother memory M(t, f) of one PCEN stream."""

    n_mels: int
    m: Optional[np.ndarray] = None

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @field_validator("m", mode="before")
    @classmethod
    def _validate_m(cls, value: Any) -> Optional[np.ndarray]:
        if value is None:
            return None
        array = as_frozen_array(value, 1, "m")
        if np.any(array < 0):
            raise ValueError("Smoother state must be nonnegative.")
        return array

    @model_validator(mode="after")
    def _validate_shape(self) -> "SmootherState":
        if self.n_mels < 1:
            raise ValueError(f"n_mels must be at least 1, got {self.n_mels}.")
        if self.m is not None and self.m.shape[0] != self.n_mels:
            raise ValueError(
                f"Smoother state has {self.m.shape[0]} bands, "
                f"expected {self.n_mels}."
            )
        return self

    @property
    def initialized(self) -> bool:
        return self.m is not None


class MultiRateStack(BaseModel):
    """PCEN layers at several rates, shaped [n_mels x n_frames x n_rates]."""

    values: np.ndarray
    schedule: RateSchedule
    params: PcenParams
    spec: FrameSpec

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @field_validator("values", mode="before")
    @classmethod
    def _validate_values(cls, value: Any) -> np.ndarray:
        return as_frozen_array(value, 3, "values")

    @model_validator(mode="after")
    def _validate_layout(self) -> "MultiRateStack":
        n_mels, _, n_rates = self.values.shape
        if n_rates != len(self.schedule):
            raise ValueError(
                f"Stack has {n_rates} layers but the schedule has "
                f"{len(self.schedule)} rates."
            )
        if n_mels != self.spec.n_mels:
            raise ValueError(
                f"Stack has {n_mels} bands, expected {self.spec.n_mels}."
            )
        if self.values.size and not np.all(self.values > self.params.floor):
            raise ValueError(
                f"Stack values must exceed -delta^r = {self.params.floor}."
            )
        return self

    @property
    def n_frames(self) -> int:
        return self.values.shape[1]

    @property
    def frame_rate(self) -> float:
        return self.spec.frame_rate

    def layer(self, rate: float) -> np.ndarray:
        return self.values[:, :, self.schedule.index(rate)]

    def select(self, rates: list[float]) -> "MultiRateStack":
        """Restrict the stack to `rates`, given in increasing order."""
        indices = [self.schedule.index(rate) for rate in rates]
        if not indices or any(b <= a for a, b in zip(indices, indices[1:])):
            raise ArgError(
                "Select a nonempty, strictly increasing subset of "
                f"{self.schedule.rates}, got {list(rates)}."
            )
        return self.__class__(
            values=self.values[:, :, indices],
            schedule=RateSchedule(rates=list(rates)),
            params=self.params,
            spec=self.spec,
        )
