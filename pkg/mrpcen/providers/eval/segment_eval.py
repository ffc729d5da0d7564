import logging
from typing import Any, Optional

from mrpcen.core import (
    EvalProvider,
    EvaluationResult,
    EventList,
    SegmentCounts,
    bootstrap_evaluate,
    bootstrap_summary,
    compute_metrics,
    segment_counts,
    threshold_detector,
)
from mrpcen.core.dsp.metrics import Features

logger = logging.getLogger(__name__)


class SegmentEvalProvider(EvalProvider):
    """Threshold detection and segment-based scoring with bootstrap."""

    def _detect(
        self, features: Features, vocabulary: list[str], **kwargs: Any
    ) -> EventList:
        missing = [c for c in vocabulary if c not in self.config.band_ranges]
        if missing:
            logger.debug(f"No band range for {missing}; never detected")
        return threshold_detector(
            features,
            vocabulary,
            {c: tuple(r) for c, r in self.config.band_ranges.items()},
            self.config.threshold,
            **kwargs,
        )

    def _score(self, ref: EventList, est: EventList) -> SegmentCounts:
        return segment_counts(ref, est, self.config.segment_length)

    def _evaluate(
        self, per_clip_counts: list[SegmentCounts], seed: Optional[int]
    ) -> EvaluationResult:
        bootstrap = self.config.bootstrap
        overall = compute_metrics(SegmentCounts.merge(per_clip_counts))
        replicates = bootstrap_evaluate(
            per_clip_counts,
            n_samples=bootstrap.n_samples,
            n_reps=bootstrap.n_reps,
            seed=bootstrap.seed if seed is None else seed,
        )
        return EvaluationResult(
            overall=overall,
            replicates=replicates,
            summary=bootstrap_summary(replicates),
        )
