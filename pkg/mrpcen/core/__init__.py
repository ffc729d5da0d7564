from .abstractions import (
    AsyncSyncMeta,
    AudioClip,
    BootstrapSummary,
    ClassMetrics,
    ClipResult,
    ClipStatus,
    Event,
    EventList,
    FeatureSidecar,
    FeatureSummary,
    FeatureTensor,
    FrameSpec,
    ImpulseResponse,
    LayerStats,
    Manifest,
    ManifestEntry,
    MelSpectrogram,
    MetricsReport,
    MetricSummary,
    MultiRateStack,
    PcenParams,
    RateSchedule,
    Representation,
    RunSummary,
    SegmentCounts,
    SmootherState,
    syncable,
)
from .dsp import (
    ar1_frequency_response,
    ar1_gain_db,
    ar1_smooth,
    bootstrap_evaluate,
    bootstrap_summary,
    brown_noise,
    compute_metrics,
    convolve_reverb,
    cutoff_frequency,
    feature_paths,
    gaussianization_score,
    inspect_features,
    is_current,
    load_impulse_response,
    load_wav,
    log_compress,
    measure_cutoff,
    mel_filterbank,
    mel_spectrogram,
    multi_rate_pcen,
    pcen_stream_step,
    pcen_transform,
    pitch_shift,
    read_array,
    read_event_csv,
    read_features,
    read_sidecar,
    segment_counts,
    segmentize,
    smoothing_coefficient,
    stft_magnitude,
    synth_impulse_response,
    threshold_detector,
    wav_duration,
    white_noise,
    write_event_csv,
    write_features,
    write_replicates_csv,
    write_wav,
)
from .exc import (
    AnnotationFormatError,
    ArgError,
    AudioFileNotFound,
    AudioFormatError,
    FeatureFormatError,
    ManifestError,
    MRPCENException,
    SampleRateMismatch,
    UnsupportedCodec,
)
from .logging.kv_logger import (
    KVLoggingSingleton,
    LocalKVLoggingProvider,
    LoggingConfig,
    RunInfo,
)
from .logging.run_manager import RunManager, manage_run
from .pipeline.base_pipeline import (
    AugmentationPipeline,
    DetectionPipeline,
    EvalPipeline,
    FeaturizationPipeline,
    Pipeline,
    PipelineTypes,
)
from .pipes.base_pipe import AsyncPipe, AsyncState, PipeType
from .pipes.clip_pipe import CLIP_ERRORS, ClipPipe
from .pipes.loggable_pipe import LoggableAsyncPipe
from .providers.augmentation_provider import (
    AugmentationConfig,
    AugmentationProvider,
    ImpulseResponseSpec,
    pitch_suffix,
    reverb_suffix,
)
from .providers.base_provider import Provider, ProviderConfig
from .providers.eval_provider import (
    BootstrapConfig,
    EvalConfig,
    EvalProvider,
    EvaluationResult,
)
from .providers.feature_provider import FeatureConfig, FeatureProvider
from .utils import (
    canonical_json,
    config_hash,
    derived_clip_id,
    generate_run_id,
    to_async_generator,
)

__all__ = [
    # Logging
    "LoggingConfig",
    "LocalKVLoggingProvider",
    "KVLoggingSingleton",
    "RunInfo",
    "RunManager",
    "manage_run",
    "AsyncSyncMeta",
    "syncable",
    # Exceptions
    "MRPCENException",
    "ArgError",
    "SampleRateMismatch",
    "AudioFileNotFound",
    "AudioFormatError",
    "UnsupportedCodec",
    "FeatureFormatError",
    "ManifestError",
    "AnnotationFormatError",
    # Abstractions
    "AudioClip",
    "FrameSpec",
    "MelSpectrogram",
    "ImpulseResponse",
    "PcenParams",
    "RateSchedule",
    "SmootherState",
    "MultiRateStack",
    "Event",
    "EventList",
    "SegmentCounts",
    "ClassMetrics",
    "MetricsReport",
    "MetricSummary",
    "BootstrapSummary",
    "Representation",
    "FeatureTensor",
    "FeatureSidecar",
    "FeatureSummary",
    "LayerStats",
    "Manifest",
    "ManifestEntry",
    "ClipResult",
    "ClipStatus",
    "RunSummary",
    "AsyncPipe",
    "PipeType",
    "AsyncState",
    "LoggableAsyncPipe",
    "ClipPipe",
    "CLIP_ERRORS",
    # Signal processing
    "load_wav",
    "write_wav",
    "stft_magnitude",
    "mel_filterbank",
    "mel_spectrogram",
    "log_compress",
    "wav_duration",
    "smoothing_coefficient",
    "cutoff_frequency",
    "measure_cutoff",
    "ar1_frequency_response",
    "ar1_gain_db",
    "ar1_smooth",
    "pcen_transform",
    "multi_rate_pcen",
    "pcen_stream_step",
    "gaussianization_score",
    "load_impulse_response",
    "convolve_reverb",
    "synth_impulse_response",
    "pitch_shift",
    "brown_noise",
    "white_noise",
    # Metrics
    "segmentize",
    "segment_counts",
    "compute_metrics",
    "bootstrap_evaluate",
    "bootstrap_summary",
    "threshold_detector",
    "read_event_csv",
    "write_event_csv",
    "write_replicates_csv",
    # Feature files
    "feature_paths",
    "write_features",
    "read_array",
    "read_sidecar",
    "read_features",
    "is_current",
    "inspect_features",
    # Pipelines
    "Pipeline",
    "PipelineTypes",
    "FeaturizationPipeline",
    "AugmentationPipeline",
    "DetectionPipeline",
    "EvalPipeline",
    # Providers
    "Provider",
    "ProviderConfig",
    "FeatureConfig",
    "FeatureProvider",
    "AugmentationConfig",
    "AugmentationProvider",
    "ImpulseResponseSpec",
    "reverb_suffix",
    "pitch_suffix",
    "EvalConfig",
    "EvalProvider",
    "BootstrapConfig",
    "EvaluationResult",
    # Other
    "to_async_generator",
    "generate_run_id",
    "canonical_json",
    "config_hash",
    "derived_clip_id",
]
