import logging

# Keep '*' imports for enhanced development velocity
# corresponding flake8 error codes are F403, F405
from .core import *
from .main import *
from .pipes import *
from .providers import *

logger = logging.getLogger("mrpcen")
logger.setLevel(logging.INFO)

# Create a console handler and set the level to info
ch = logging.StreamHandler()
ch.setLevel(logging.INFO)

formatter = logging.Formatter(
    "%(asctime)s - %(levelname)s - %(name)s - %(message)s"
)
ch.setFormatter(formatter)

logger.addHandler(ch)

# Keep library output off the root logger
logger.propagate = False

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
    # Pipes
    "FeaturizationPipe",
    "AugmentationPipe",
    "DetectionPipe",
    "EvalPipe",
    # Concrete providers
    "LogMelFeatureProvider",
    "PcenFeatureProvider",
    "LocalAugmentationProvider",
    "SegmentEvalProvider",
    # App
    "MRPCENLogsRequest",
    "MRPCENPipelines",
    "MRPCENPipes",
    "MRPCENProviders",
    "MRPCENApp",
    "MRPCENAppBuilder",
    "MRPCENConfig",
    "MRPCENPipeFactory",
    "MRPCENPipelineFactory",
    "MRPCENProviderFactory",
]
