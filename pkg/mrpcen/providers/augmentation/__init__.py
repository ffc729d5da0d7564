from .local_augmentation import LocalAugmentationProvider

__all__ = ["LocalAugmentationProvider"]
