from .augment import (
    brown_noise,
    convolve_reverb,
    load_impulse_response,
    pitch_shift,
    synth_impulse_response,
    white_noise,
)
from .features import (
    feature_paths,
    inspect_features,
    is_current,
    read_array,
    read_features,
    read_sidecar,
    write_features,
)
from .metrics import (
    bootstrap_evaluate,
    bootstrap_summary,
    compute_metrics,
    read_event_csv,
    segment_counts,
    segmentize,
    threshold_detector,
    write_event_csv,
    write_replicates_csv,
)
from .pcen import (
    ar1_frequency_response,
    ar1_gain_db,
    ar1_smooth,
    cutoff_frequency,
    gaussianization_score,
    measure_cutoff,
    multi_rate_pcen,
    pcen_stream_step,
    pcen_transform,
    smoothing_coefficient,
)
from .signal import (
    load_wav,
    log_compress,
    mel_filterbank,
    mel_spectrogram,
    stft_magnitude,
    wav_duration,
    write_wav,
)

__all__ = [
    # Signal
    "load_wav",
    "write_wav",
    "stft_magnitude",
    "mel_filterbank",
    "mel_spectrogram",
    "log_compress",
    "wav_duration",
    # PCEN
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
    # Augmentation
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
]
