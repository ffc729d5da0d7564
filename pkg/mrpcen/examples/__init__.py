from .miniature import BAND_RANGES, VOCABULARY, build_miniature_dataset

__all__ = ["BAND_RANGES", "VOCABULARY", "build_miniature_dataset"]
