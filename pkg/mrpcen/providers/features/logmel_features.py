import numpy as np

from mrpcen.core import (
    FeatureConfig,
    FeatureProvider,
    FrameSpec,
    MelSpectrogram,
    Representation,
    log_compress,
)


class LogMelFeatureProvider(FeatureProvider):
    """Log-mel spectrogram in decibels as a single layer."""

    def __init__(self, config: FeatureConfig, spec: FrameSpec):
        super().__init__(config, spec)
        if config.representation != Representation.LOGMEL:
            raise ValueError(
                "LogMelFeatureProvider needs a `logmel` feature config."
            )

    def _featurize(self, mel: MelSpectrogram) -> np.ndarray:
        return log_compress(
            mel, amin=self.config.amin, top_db=self.config.top_db
        )
