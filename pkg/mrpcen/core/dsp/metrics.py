"""
Segment-based sound event detection metrics.

Time is cut into fixed segments and each class is marked active in a
segment when any of its events overlaps it by a positive amount. Scores
compare the reference and estimated activity matrices; nothing else about
the event boundaries matters.
"""

import csv
import logging
import math
import os
from typing import Optional, Union

import numpy as np

from ..abstractions.events import (
    DURATION_TOLERANCE,
    BootstrapSummary,
    ClassMetrics,
    Event,
    EventList,
    MetricsReport,
    MetricSummary,
    SegmentCounts,
)
from ..abstractions.features import FeatureTensor
from ..abstractions.pcen import MultiRateStack
from ..exc import AnnotationFormatError, ArgError

logger = logging.getLogger(__name__)

DEFAULT_SEGMENT_LENGTH = 1.0
EVENT_CSV_HEADER = ["onset", "offset", "label"]

Features = Union[MultiRateStack, FeatureTensor, np.ndarray]


def _n_segments(duration: float, segment_length: float) -> int:
    # 0.3 / 0.1 must give 3 segments, not 4
    return max(1, math.ceil(duration / segment_length - 1e-9))


def _activity(
    events: list[Event],
    vocabulary: list[str],
    duration: float,
    segment_length: float,
) -> np.ndarray:
    if not segment_length > 0:
        raise ArgError(
            f"Segment length must be positive, got {segment_length}."
        )
    if not vocabulary:
        raise ArgError("Cannot segmentize events over an empty vocabulary.")
    n_segments = _n_segments(duration, segment_length)
    starts = np.arange(n_segments) * segment_length
    ends = starts + segment_length
    rows = {label: i for i, label in enumerate(vocabulary)}
    activity = np.zeros((len(vocabulary), starts.shape[0]), dtype=bool)
    for event in events:
        activity[rows[event.label]] |= (event.onset < ends) & (
            event.offset > starts
        )
    return activity


def segmentize(events: EventList, segment_length: float) -> np.ndarray:
    """Boolean activity matrix shaped [n_classes x n_segments]."""
    return _activity(
        events.events, events.vocabulary, events.duration, segment_length
    )


def segment_counts(
    ref: EventList,
    est: EventList,
    segment_length: float = DEFAULT_SEGMENT_LENGTH,
) -> SegmentCounts:
    if set(ref.vocabulary) != set(est.vocabulary):
        raise ArgError(
            f"Reference vocabulary {ref.vocabulary} does not match the "
            f"estimate's {est.vocabulary}."
        )
    if abs(ref.duration - est.duration) > DURATION_TOLERANCE:
        raise ArgError(
            f"Reference duration {ref.duration} s does not match the "
            f"estimate's {est.duration} s."
        )
    reference = segmentize(ref, segment_length)
    # rows follow the reference's class order
    estimate = _activity(
        est.events, ref.vocabulary, ref.duration, segment_length
    )
    missed = reference & ~estimate
    spurious = ~reference & estimate
    return SegmentCounts(
        classes=list(ref.vocabulary),
        tp=(reference & estimate).sum(axis=1),
        fp=spurious.sum(axis=1),
        fn=missed.sum(axis=1),
        segment_fn=missed.sum(axis=0),
        segment_fp=spurious.sum(axis=0),
        segment_n_ref=reference.sum(axis=0),
        segment_n_est=estimate.sum(axis=0),
        segment_length=segment_length,
    )


def _rates(tp: int, fp: int, fn: int) -> tuple[float, float, float]:
    precision = tp / (tp + fp) if tp + fp > 0 else 0.0
    recall = tp / (tp + fn) if tp + fn > 0 else 0.0
    # equals 2PR / (P + R), and is 0 exactly when P + R is
    f1 = 2 * tp / (2 * tp + fp + fn) if tp > 0 else 0.0
    return precision, recall, f1


def compute_metrics(counts: SegmentCounts) -> MetricsReport:
    class_wise = {}
    for i, label in enumerate(counts.classes):
        tp, fp, fn = int(counts.tp[i]), int(counts.fp[i]), int(counts.fn[i])
        precision, recall, f1 = _rates(tp, fp, fn)
        class_wise[label] = ClassMetrics(
            precision=precision,
            recall=recall,
            f1=f1,
            support=tp + fn,
            tp=tp,
            fp=fp,
            fn=fn,
        )
    precision, recall, f1 = _rates(
        int(counts.tp.sum()), int(counts.fp.sum()), int(counts.fn.sum())
    )

    substitutions = np.minimum(counts.segment_fn, counts.segment_fp).sum()
    deletions = np.maximum(0, counts.segment_fn - counts.segment_fp).sum()
    insertions = np.maximum(0, counts.segment_fp - counts.segment_fn).sum()
    n_ref = int(counts.segment_n_ref.sum())
    error_rates: dict[str, Optional[float]] = {
        "error_rate": None,
        "substitution_rate": None,
        "deletion_rate": None,
        "insertion_rate": None,
    }
    if n_ref > 0:
        error_rates = {
            "error_rate": float(substitutions + deletions + insertions)
            / n_ref,
            "substitution_rate": float(substitutions) / n_ref,
            "deletion_rate": float(deletions) / n_ref,
            "insertion_rate": float(insertions) / n_ref,
        }
    return MetricsReport(
        class_wise=class_wise,
        precision=precision,
        recall=recall,
        f1=f1,
        n_ref=n_ref,
        n_segments=counts.n_segments,
        **error_rates,
    )


def bootstrap_evaluate(
    per_clip_counts: list[SegmentCounts],
    n_samples: int = 100,
    n_reps: int = 100,
    seed: int = 0,
) -> list[MetricsReport]:
    """
    Score `n_reps` resamples of `n_samples` clips drawn with replacement.

    Every replicate draws from its own generator spawned from `seed`, so
    replicate k is the same whether or not the others are computed.
    """
    if not per_clip_counts:
        raise ArgError("Cannot bootstrap an empty set of clips.")
    if n_samples < 1 or n_reps < 1:
        raise ArgError(
            f"n_samples and n_reps must be at least 1, got {n_samples} and "
            f"{n_reps}."
        )
    reports = []
    for child in np.random.SeedSequence(seed).spawn(n_reps):
        picks = np.random.default_rng(child).integers(
            0, len(per_clip_counts), size=n_samples
        )
        pooled = SegmentCounts.merge([per_clip_counts[i] for i in picks])
        reports.append(compute_metrics(pooled))
    logger.debug(
        f"Bootstrapped {n_reps} replicates of {n_samples} clips from "
        f"{len(per_clip_counts)}"
    )
    return reports


def bootstrap_summary(reports: list[MetricsReport]) -> BootstrapSummary:
    if not reports:
        raise ArgError("Cannot summarize an empty list of replicates.")
    columns: dict[str, list[float]] = {}
    for report in reports:
        for name, value in report.flat().items():
            if value is not None:
                columns.setdefault(name, []).append(value)
    metrics = {}
    for name, values in columns.items():
        lower, upper = np.percentile(values, [2.5, 97.5])
        metrics[name] = MetricSummary(
            mean=float(np.mean(values)),
            lower=float(lower),
            upper=float(upper),
            n=len(values),
        )
    return BootstrapSummary(n_reps=len(reports), metrics=metrics)


def _feature_values(
    features: Features,
    frame_rate: Optional[float],
    duration: Optional[float],
) -> tuple[np.ndarray, float, float]:
    if isinstance(features, MultiRateStack):
        values, frame_rate = features.values, features.frame_rate
    elif isinstance(features, FeatureTensor):
        values, frame_rate = features.values, features.frame_rate
        duration = features.duration if duration is None else duration
    else:
        values = np.asarray(features, dtype=np.float64)
        if frame_rate is None:
            raise ArgError("A raw feature matrix needs a frame rate.")
    if values.ndim == 2:
        values = values[..., np.newaxis]
    if values.ndim != 3:
        raise ArgError(
            f"Expected [n_mels x n_frames] or [n_mels x n_frames x "
            f"n_layers] features, got shape {values.shape}."
        )
    if duration is None:
        duration = values.shape[1] / frame_rate
    return values, frame_rate, duration


def threshold_detector(
    features: Features,
    vocabulary: list[str],
    band_ranges: dict[str, tuple[int, int]],
    threshold: float,
    frame_rate: Optional[float] = None,
    duration: Optional[float] = None,
) -> EventList:
    """
    Mark a class active in every frame where the mean feature value over
    its mel band range, and over all layers, exceeds `threshold`.

    Each run of active frames becomes one event from the onset of its
    first frame to the end of its last, clipped to the clip duration.
    Classes without a band range are never detected.
    """
    values, frame_rate, duration = _feature_values(
        features, frame_rate, duration
    )
    n_mels = values.shape[0]
    events = []
    for label in vocabulary:
        if label not in band_ranges:
            continue
        lo, hi = band_ranges[label]
        if not 0 <= lo < hi <= n_mels:
            raise ArgError(
                f"Band range [{lo}, {hi}) for '{label}' does not fit in "
                f"{n_mels} mel bands."
            )
        active = values[lo:hi].mean(axis=(0, 2)) > threshold
        edges = np.flatnonzero(
            np.diff(np.concatenate(([0], active.astype(np.int8), [0])))
        )
        for start, stop in zip(edges[0::2], edges[1::2]):
            onset = float(start / frame_rate)
            offset = float(min(stop / frame_rate, duration))
            if onset < offset:
                events.append(
                    Event(onset=onset, offset=offset, label=label)
                )
    events.sort(key=lambda event: (event.onset, event.label))
    return EventList(events=events, duration=duration, vocabulary=vocabulary)


def read_event_csv(
    path: str, vocabulary: list[str], duration: float
) -> EventList:
    """Parse an `onset,offset,label` CSV with a header row."""
    if not os.path.isfile(path):
        raise AnnotationFormatError(f"Event file '{path}' does not exist.")
    events = []
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header is None or [c.strip() for c in header] != EVENT_CSV_HEADER:
            raise AnnotationFormatError(
                f"'{path}' must start with the header "
                f"{','.join(EVENT_CSV_HEADER)}, got {header}."
            )
        for line_number, row in enumerate(reader, start=2):
            if not row or not "".join(row).strip():
                continue
            if len(row) != 3:
                raise AnnotationFormatError(
                    f"{path}:{line_number}: expected 3 fields, got "
                    f"{len(row)}."
                )
            try:
                events.append(
                    Event(
                        onset=float(row[0]),
                        offset=float(row[1]),
                        label=row[2].strip(),
                    )
                )
            except ValueError as e:
                raise AnnotationFormatError(f"{path}:{line_number}: {e}")
    try:
        return EventList(
            events=events, duration=duration, vocabulary=vocabulary
        )
    except ValueError as e:
        raise AnnotationFormatError(f"Invalid events in '{path}': {e}")


def write_event_csv(path: str, events: EventList) -> None:
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(EVENT_CSV_HEADER)
        for event in events.events:
            onset, offset = float(event.onset), float(event.offset)
            writer.writerow([repr(onset), repr(offset), event.label])


def write_replicates_csv(path: str, reports: list[MetricsReport]) -> None:
    """One row per bootstrap replicate, one column per metric."""
    rows = [report.flat() for report in reports]
    fieldnames = list(rows[0]) if rows else ["precision", "recall", "f1"]
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(
                {k: "" if v is None else repr(v) for k, v in row.items()}
            )
