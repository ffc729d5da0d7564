import logging
from typing import Optional

import numpy as np

from mrpcen.core import (
    FeatureConfig,
    FeatureProvider,
    FrameSpec,
    MelSpectrogram,
    Representation,
    multi_rate_pcen,
    pcen_transform,
)

logger = logging.getLogger(__name__)


class PcenFeatureProvider(FeatureProvider):
    """
    PCEN features.

    The `pcen` representation is one layer at the config's `rate`; the
    `mrpcen` representation stacks one layer per scheduled rate.
    """

    def __init__(self, config: FeatureConfig, spec: FrameSpec):
        super().__init__(config, spec)
        if config.representation == Representation.LOGMEL:
            raise ValueError("PcenFeatureProvider cannot compute log-mel.")
        self.params = config.pcen_params
        self.rate_schedule = config.schedule
        if self.params.clamped:
            logger.warning(
                f"Rate parameter T={self.params.T} puts the smoother cutoff "
                "above Nyquist; it is clamped to pi."
            )

    @property
    def multi_rate(self) -> bool:
        return self.representation == Representation.MRPCEN

    @property
    def schedule(self) -> Optional[list[float]]:
        if self.multi_rate:
            return list(self.rate_schedule.rates)
        return [self.params.T]

    def _featurize(self, mel: MelSpectrogram) -> np.ndarray:
        if self.multi_rate:
            return multi_rate_pcen(mel, self.rate_schedule, self.params).values
        return pcen_transform(mel, self.params)
