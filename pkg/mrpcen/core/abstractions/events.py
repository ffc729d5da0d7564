"""Abstractions for annotated events, segment counts and metric reports."""

from typing import Any, Optional

import numpy as np
from pydantic import (
    BaseModel,
    ValidationInfo,
    field_validator,
    model_validator,
)

# Offsets may exceed the clip duration by rounding error in frame arithmetic.
DURATION_TOLERANCE = 1e-6


class Event(BaseModel):
    onset: float
    offset: float
    label: str

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _validate_interval(self) -> "Event":
        if not 0 <= self.onset < self.offset:
            raise ValueError(
                "Event must satisfy 0 <= onset < offset, got "
                f"onset={self.onset}, offset={self.offset}."
            )
        return self


class EventList(BaseModel):
    """The events annotated or detected in one clip."""

    events: list[Event] = []
    duration: float
    vocabulary: list[str]

    class Config:
        frozen = True

    @field_validator("vocabulary")
    @classmethod
    def _validate_vocabulary(cls, vocabulary: list[str]) -> list[str]:
        if len(set(vocabulary)) != len(vocabulary):
            raise ValueError(f"Duplicate class names in {vocabulary}.")
        return vocabulary

    @model_validator(mode="after")
    def _validate_events(self) -> "EventList":
        if not self.duration > 0:
            raise ValueError(
                f"Duration must be positive, got {self.duration}."
            )
        known = set(self.vocabulary)
        for event in self.events:
            if event.label not in known:
                raise ValueError(
                    f"Event label '{event.label}' is not in the vocabulary "
                    f"{self.vocabulary}."
                )
            if event.offset > self.duration + DURATION_TOLERANCE:
                raise ValueError(
                    f"Event offset {event.offset} exceeds the clip duration "
                    f"{self.duration}."
                )
        return self

    def __len__(self) -> int:
        return len(self.events)


def _count_array(value: Any, name: str) -> np.ndarray:
    array = np.asarray(value, dtype=np.int64)
    if array.ndim != 1:
        raise ValueError(f"`{name}` must be one-dimensional.")
    if np.any(array < 0):
        raise ValueError(f"`{name}` must be nonnegative.")
    array = array.copy()
    array.flags.writeable = False
    return array


class SegmentCounts(BaseModel):
    """
    Segment-level confusion counts.

    Class arrays are indexed by `classes`; segment arrays hold, for every
    segment, the false negatives, false positives and active reference and
    estimate classes summed over classes.
    """

    classes: list[str]
    tp: np.ndarray
    fp: np.ndarray
    fn: np.ndarray
    segment_fn: np.ndarray
    segment_fp: np.ndarray
    segment_n_ref: np.ndarray
    segment_n_est: np.ndarray
    segment_length: float

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @field_validator(
        "tp",
        "fp",
        "fn",
        "segment_fn",
        "segment_fp",
        "segment_n_ref",
        "segment_n_est",
        mode="before",
    )
    @classmethod
    def _validate_counts(
        cls, value: Any, info: ValidationInfo
    ) -> np.ndarray:
        return _count_array(value, info.field_name)

    @model_validator(mode="after")
    def _validate_shapes(self) -> "SegmentCounts":
        n_classes = len(self.classes)
        for name in ("tp", "fp", "fn"):
            if getattr(self, name).shape[0] != n_classes:
                raise ValueError(
                    f"`{name}` must have one entry per class ({n_classes})."
                )
        n_segments = self.segment_fn.shape[0]
        for name in ("segment_fp", "segment_n_ref", "segment_n_est"):
            if getattr(self, name).shape[0] != n_segments:
                raise ValueError(
                    f"`{name}` must have one entry per segment ({n_segments})."
                )
        if self.tp.sum() > self.segment_n_ref.sum():
            raise ValueError("True positives exceed the reference actives.")
        if not self.segment_length > 0:
            raise ValueError(
                f"Segment length must be positive, got {self.segment_length}."
            )
        return self

    @property
    def n_segments(self) -> int:
        return self.segment_fn.shape[0]

    @classmethod
    def merge(cls, counts: list["SegmentCounts"]) -> "SegmentCounts":
        """Pool clips: class counts add up, segment arrays concatenate."""
        if not counts:
            raise ValueError("Cannot merge an empty list of counts.")
        first = counts[0]
        for other in counts[1:]:
            if other.classes != first.classes:
                raise ValueError(
                    f"Cannot merge counts over {other.classes} into counts "
                    f"over {first.classes}."
                )
            if other.segment_length != first.segment_length:
                raise ValueError(
                    "Cannot merge counts with different segments."
                )
        return cls(
            classes=first.classes,
            tp=np.sum([c.tp for c in counts], axis=0),
            fp=np.sum([c.fp for c in counts], axis=0),
            fn=np.sum([c.fn for c in counts], axis=0),
            segment_fn=np.concatenate([c.segment_fn for c in counts]),
            segment_fp=np.concatenate([c.segment_fp for c in counts]),
            segment_n_ref=np.concatenate([c.segment_n_ref for c in counts]),
            segment_n_est=np.concatenate([c.segment_n_est for c in counts]),
            segment_length=first.segment_length,
        )


class ClassMetrics(BaseModel):
    precision: float
    recall: float
    f1: float
    support: int
    tp: int
    fp: int
    fn: int


class MetricsReport(BaseModel):
    """
    Per-class and micro-averaged segment metrics.

    `error_rate` and its components are None when no reference segment is
    active anywhere.
    """

    class_wise: dict[str, ClassMetrics]
    precision: float
    recall: float
    f1: float
    error_rate: Optional[float] = None
    substitution_rate: Optional[float] = None
    deletion_rate: Optional[float] = None
    insertion_rate: Optional[float] = None
    n_ref: int
    n_segments: int

    def flat(self) -> dict[str, Optional[float]]:
        """One row of named scalars, used for CSV summaries."""
        row: dict[str, Optional[float]] = {
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "error_rate": self.error_rate,
        }
        for label, metrics in self.class_wise.items():
            row[f"f1_{label}"] = metrics.f1
        return row


class MetricSummary(BaseModel):
    mean: float
    lower: float
    upper: float
    n: int


class BootstrapSummary(BaseModel):
    """Mean and 2.5/97.5 percentiles of each metric over replicates."""

    n_reps: int
    metrics: dict[str, MetricSummary]
