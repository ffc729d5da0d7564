import logging
from abc import abstractmethod
from typing import Optional

import numpy as np

from ..abstractions.audio import AudioClip, FrameSpec, MelSpectrogram
from ..abstractions.features import FeatureTensor, Representation
from ..abstractions.pcen import PcenParams, RateSchedule
from ..dsp.signal import DEFAULT_AMIN, DEFAULT_TOP_DB, mel_spectrogram
from .base_provider import Provider, ProviderConfig

logger = logging.getLogger(__name__)


class FeatureConfig(ProviderConfig):
    """
    A feature config; the provider names the representation.

    `rate` is the single PCEN rate parameter and `rates` the multi-rate
    schedule, both in frames.
    """

    provider: Optional[str] = Representation.MRPCEN.value
    epsilon: float = 1e-6
    alpha: float = 0.98
    delta: float = 2.0
    r: float = 0.5
    rate: float = 2.0
    rates: list[float] = [2.0**k for k in range(10)]
    amin: float = DEFAULT_AMIN
    top_db: Optional[float] = DEFAULT_TOP_DB

    def validate(self) -> None:
        self._check_provider()
        if not self.amin > 0:
            raise ValueError(f"amin must be positive, got {self.amin}.")
        # both raise ValueError on invalid values
        self.pcen_params
        self.schedule

    @property
    def supported_providers(self) -> list[Optional[str]]:
        return [representation.value for representation in Representation]

    @property
    def representation(self) -> Representation:
        return Representation(self.provider)

    @property
    def pcen_params(self) -> PcenParams:
        return PcenParams(
            epsilon=self.epsilon,
            alpha=self.alpha,
            delta=self.delta,
            r=self.r,
            T=self.rate,
        )

    @property
    def schedule(self) -> RateSchedule:
        return RateSchedule(rates=self.rates)


class FeatureProvider(Provider):
    """An abstract class turning audio clips into feature tensors."""

    def __init__(self, config: FeatureConfig, spec: FrameSpec):
        if not isinstance(config, FeatureConfig):
            raise ValueError(
                "FeatureProvider must be initialized with a `FeatureConfig`."
            )
        super().__init__(config)
        self.spec = spec

    @property
    def representation(self) -> Representation:
        return self.config.representation

    @property
    def schedule(self) -> Optional[list[float]]:
        """The rate parameter of each layer, None when layers have none."""
        return None

    def featurize(self, clip: AudioClip) -> FeatureTensor:
        mel = mel_spectrogram(clip, self.spec)
        values = self._featurize(mel)
        if values.ndim == 2:
            values = values[..., np.newaxis]
        return FeatureTensor(
            values=values,
            representation=self.representation,
            frame_rate=self.spec.frame_rate,
            duration=clip.duration,
            schedule=self.schedule,
        )

    @abstractmethod
    def _featurize(self, mel: MelSpectrogram) -> np.ndarray:
        pass
