import logging
from abc import abstractmethod
from typing import Any, Optional

from pydantic import BaseModel, model_validator

from ..abstractions.events import (
    BootstrapSummary,
    EventList,
    MetricsReport,
    SegmentCounts,
)
from ..dsp.metrics import DEFAULT_SEGMENT_LENGTH, Features
from .base_provider import Provider, ProviderConfig

logger = logging.getLogger(__name__)


class BootstrapConfig(BaseModel):
    n_samples: int = 100
    n_reps: int = 100
    seed: int = 0

    @model_validator(mode="after")
    def _validate_sizes(self) -> "BootstrapConfig":
        if self.n_samples < 1 or self.n_reps < 1:
            raise ValueError(
                "Bootstrap n_samples and n_reps must be at least 1, got "
                f"{self.n_samples} and {self.n_reps}."
            )
        return self


class EvaluationResult(BaseModel):
    """Pooled metrics plus the bootstrap replicates and their summary."""

    overall: MetricsReport
    replicates: list[MetricsReport]
    summary: BootstrapSummary


class EvalConfig(ProviderConfig):
    """
    A base eval config class.

    `band_ranges` maps each class to the mel bands [lo, hi) the threshold
    detector averages over.
    """

    provider: Optional[str] = "segment"
    segment_length: float = DEFAULT_SEGMENT_LENGTH
    threshold: float = 0.5
    band_ranges: dict[str, list[int]] = {}
    bootstrap: BootstrapConfig = BootstrapConfig()

    def validate(self) -> None:
        self._check_provider()
        if not self.segment_length > 0:
            raise ValueError(
                "Segment length must be positive, got "
                f"{self.segment_length}."
            )
        for label, band_range in self.band_ranges.items():
            if len(band_range) != 2 or not 0 <= band_range[0] < band_range[1]:
                raise ValueError(
                    f"Band range for '{label}' must be [lo, hi) with "
                    f"0 <= lo < hi, got {band_range}."
                )

    @property
    def supported_providers(self) -> list[Optional[str]]:
        return ["segment"]


class EvalProvider(Provider):
    """An abstract class to provide a common interface for evaluation providers."""

    def __init__(self, config: EvalConfig):
        if not isinstance(config, EvalConfig):
            raise ValueError(
                "EvalProvider must be initialized with a `EvalConfig`."
            )

        super().__init__(config)

    def detect(
        self, features: Features, vocabulary: list[str], **kwargs: Any
    ) -> EventList:
        return self._detect(features, vocabulary, **kwargs)

    def score(self, ref: EventList, est: EventList) -> SegmentCounts:
        return self._score(ref, est)

    def evaluate(
        self,
        per_clip_counts: list[SegmentCounts],
        seed: Optional[int] = None,
    ) -> EvaluationResult:
        return self._evaluate(per_clip_counts, seed)

    @abstractmethod
    def _detect(
        self, features: Features, vocabulary: list[str], **kwargs: Any
    ) -> EventList:
        pass

    @abstractmethod
    def _score(self, ref: EventList, est: EventList) -> SegmentCounts:
        pass

    @abstractmethod
    def _evaluate(
        self, per_clip_counts: list[SegmentCounts], seed: Optional[int]
    ) -> EvaluationResult:
        pass
