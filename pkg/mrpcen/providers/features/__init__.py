from .logmel_features import LogMelFeatureProvider
from .pcen_features import PcenFeatureProvider

__all__ = ["LogMelFeatureProvider", "PcenFeatureProvider"]
