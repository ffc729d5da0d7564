import logging
from abc import abstractmethod
from typing import Optional

from pydantic import BaseModel, model_validator

from ..abstractions.audio import AudioClip
from ..dsp.augment import MAX_SEMITONES
from .base_provider import Provider, ProviderConfig

logger = logging.getLogger(__name__)


class ImpulseResponseSpec(BaseModel):
    """
    One reverb condition: a recorded IR file (`path`) or a synthetic one
    (`tau_c` in seconds).
    """

    label: str
    path: Optional[str] = None
    tau_c: Optional[float] = None
    duration: Optional[float] = None
    seed: int = 0

    @model_validator(mode="after")
    def _validate_source(self) -> "ImpulseResponseSpec":
        if (self.path is None) == (self.tau_c is None):
            raise ValueError(
                f"Impulse response '{self.label}' needs exactly one of "
                "`path` or `tau_c`."
            )
        if self.tau_c is not None and not self.tau_c > 0:
            raise ValueError(
                f"tau_c of '{self.label}' must be positive, got {self.tau_c}."
            )
        if not self.label or "__" in self.label or "/" in self.label:
            raise ValueError(
                f"Impulse response label '{self.label}' must be nonempty "
                "and contain neither '__' nor '/'."
            )
        return self

    @property
    def synthetic(self) -> bool:
        return self.tau_c is not None


class AugmentationConfig(ProviderConfig):
    """An augmentation plan: reverb conditions and pitch shifts."""

    provider: Optional[str] = "local"
    impulse_responses: list[ImpulseResponseSpec] = []
    pitch_shifts: list[float] = []
    keep_originals: bool = True

    def validate(self) -> None:
        self._check_provider()
        labels = [ir.label for ir in self.impulse_responses]
        if len(set(labels)) != len(labels):
            raise ValueError(f"Duplicate impulse response labels {labels}.")
        if len(set(self.pitch_shifts)) != len(self.pitch_shifts):
            raise ValueError(f"Duplicate pitch shifts {self.pitch_shifts}.")
        for semitones in self.pitch_shifts:
            if semitones == 0 or abs(semitones) > MAX_SEMITONES:
                raise ValueError(
                    "Pitch shifts must be nonzero and within "
                    f"+/-{MAX_SEMITONES:g} semitones, got {semitones}."
                )

    @property
    def supported_providers(self) -> list[Optional[str]]:
        return [None, "local"]


def reverb_suffix(label: str) -> str:
    return f"ir-{label}"


def pitch_suffix(semitones: float) -> str:
    return f"ps{semitones:+g}"


class AugmentationProvider(Provider):
    """An abstract class producing augmented duplicates of a clip."""

    def __init__(self, config: AugmentationConfig):
        if not isinstance(config, AugmentationConfig):
            raise ValueError(
                "AugmentationProvider must be initialized with an "
                "`AugmentationConfig`."
            )
        super().__init__(config)

    @property
    def variants(self) -> list[str]:
        """Clip-id suffixes of the duplicates, reverb conditions first."""
        return [
            reverb_suffix(ir.label) for ir in self.config.impulse_responses
        ] + [pitch_suffix(shift) for shift in self.config.pitch_shifts]

    def augment(self, clip: AudioClip, variant: str) -> AudioClip:
        if variant not in self.variants:
            raise ValueError(f"Unknown augmentation variant '{variant}'.")
        return self._augment(clip, variant)

    @abstractmethod
    def _augment(self, clip: AudioClip, variant: str) -> AudioClip:
        pass
