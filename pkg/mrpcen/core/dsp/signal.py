"""WAV ingestion and the mel-spectrogram front-end."""

import logging
import os

import librosa
import numpy as np
import soundfile as sf

from ..abstractions.audio import AudioClip, FrameSpec, MelSpectrogram
from ..exc import (
    ArgError,
    AudioFileNotFound,
    AudioFormatError,
    SampleRateMismatch,
    UnsupportedCodec,
)

logger = logging.getLogger(__name__)

WAV_FORMATS = ("WAV", "WAVEX")
SUPPORTED_SUBTYPES = ("PCM_16", "PCM_24", "PCM_32", "FLOAT")

DEFAULT_AMIN = 1e-10
DEFAULT_TOP_DB = 80.0


def load_wav(path: str) -> AudioClip:
    """
    Read a RIFF/WAVE file into a mono clip.

    Channels are averaged; integer PCM is scaled by 1/2^(bits-1), so the
    16-bit value -32768 maps to exactly -1.0.
    """
    if not os.path.isfile(path):
        raise AudioFileNotFound(f"Audio file '{path}' does not exist.")
    try:
        info = sf.info(path)
    except RuntimeError as e:
        raise AudioFormatError(
            f"'{path}' is not a readable RIFF/WAVE file: {e}"
        )
    if info.format not in WAV_FORMATS:
        raise AudioFormatError(
            f"'{path}' is a {info.format} file, expected RIFF/WAVE."
        )
    if info.subtype not in SUPPORTED_SUBTYPES:
        raise UnsupportedCodec(
            f"'{path}' uses the {info.subtype} encoding; supported encodings "
            f"are {', '.join(SUPPORTED_SUBTYPES)}."
        )
    try:
        samples, sample_rate = sf.read(path, dtype="float64", always_2d=True)
    except RuntimeError as e:
        raise AudioFormatError(f"Failed to decode '{path}': {e}")
    return AudioClip(samples=samples.mean(axis=1), sample_rate=sample_rate)


def write_wav(path: str, clip: AudioClip, subtype: str = "FLOAT") -> None:
    if subtype not in SUPPORTED_SUBTYPES:
        raise UnsupportedCodec(f"Cannot write WAV with encoding {subtype}.")
    sf.write(
        path, clip.samples, clip.sample_rate, subtype=subtype, format="WAV"
    )


def _check_framing(clip: AudioClip, spec: FrameSpec) -> None:
    if clip.sample_rate != spec.sample_rate:
        raise SampleRateMismatch(
            f"Clip sample rate {clip.sample_rate} Hz does not match the "
            f"frame spec's {spec.sample_rate} Hz."
        )
    if len(clip) == 0:
        raise ArgError("Cannot compute a spectrogram of an empty clip.")
    window = spec.window_length
    if window & (window - 1):
        raise ArgError(
            f"Window length must be a power of two, got {window}."
        )


def stft_magnitude(clip: AudioClip, spec: FrameSpec) -> np.ndarray:
    """|STFT| with a Hann window and centered, reflect-padded frames."""
    _check_framing(clip, spec)
    stft = librosa.stft(
        np.array(clip.samples),
        n_fft=spec.window_length,
        hop_length=spec.hop_length,
        win_length=spec.window_length,
        window="hann",
        center=True,
        pad_mode="reflect",
    )
    return np.abs(stft)


def mel_filterbank(spec: FrameSpec) -> np.ndarray:
    """Slaney-scale triangular filters with area normalization."""
    weights = librosa.filters.mel(
        sr=spec.sample_rate,
        n_fft=spec.window_length,
        n_mels=spec.n_mels,
        fmin=spec.fmin,
        fmax=spec.fmax,
        htk=False,
        norm="slaney",
        dtype=np.float64,
    )
    dead = np.flatnonzero(weights.max(axis=1) <= 0)
    if dead.size:
        logger.warning(
            f"{dead.size} of {spec.n_mels} mel filters cover no FFT bin "
            f"(bands {dead.tolist()}); n_mels is too large for a "
            f"{spec.window_length}-sample window."
        )
    return weights


def mel_spectrogram(clip: AudioClip, spec: FrameSpec) -> MelSpectrogram:
    magnitude = stft_magnitude(clip, spec)
    return MelSpectrogram(values=mel_filterbank(spec) @ magnitude, spec=spec)


def log_compress(
    mel: MelSpectrogram,
    amin: float = DEFAULT_AMIN,
    top_db: float = DEFAULT_TOP_DB,
) -> np.ndarray:
    """Decibels relative to the matrix maximum, floored `top_db` below it."""
    if not amin > 0:
        raise ArgError(f"amin must be positive, got {amin}.")
    if top_db is not None and top_db < 0:
        raise ArgError(f"top_db must be nonnegative, got {top_db}.")
    return librosa.power_to_db(
        np.asarray(mel.values), ref=np.max, amin=amin, top_db=top_db
    )


def wav_duration(path: str) -> float:
    """Duration in seconds from the WAV header alone."""
    if not os.path.isfile(path):
        raise AudioFileNotFound(f"Audio file '{path}' does not exist.")
    try:
        info = sf.info(path)
    except RuntimeError as e:
        raise AudioFormatError(
            f"'{path}' is not a readable RIFF/WAVE file: {e}"
        )
    return info.frames / info.samplerate
