from .async_sync_meta import AsyncSyncMeta, syncable
from .audio import AudioClip, FrameSpec, ImpulseResponse, MelSpectrogram
from .events import (
    BootstrapSummary,
    ClassMetrics,
    Event,
    EventList,
    MetricsReport,
    MetricSummary,
    SegmentCounts,
)
from .features import (
    FeatureSidecar,
    FeatureSummary,
    FeatureTensor,
    LayerStats,
    Representation,
)
from .manifest import Manifest, ManifestEntry
from .pcen import MultiRateStack, PcenParams, RateSchedule, SmootherState
from .run import ClipResult, ClipStatus, RunSummary

__all__ = [
    "AsyncSyncMeta",
    "syncable",
    "AudioClip",
    "FrameSpec",
    "ImpulseResponse",
    "MelSpectrogram",
    "BootstrapSummary",
    "ClassMetrics",
    "Event",
    "EventList",
    "MetricsReport",
    "MetricSummary",
    "SegmentCounts",
    "FeatureSidecar",
    "FeatureSummary",
    "FeatureTensor",
    "LayerStats",
    "Representation",
    "Manifest",
    "ManifestEntry",
    "MultiRateStack",
    "PcenParams",
    "RateSchedule",
    "SmootherState",
    "ClipResult",
    "ClipStatus",
    "RunSummary",
]
