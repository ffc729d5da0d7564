"""Reverb, impulse-response synthesis, pitch shifting and noise generators."""

import logging
import os
from fractions import Fraction
from typing import Optional

import librosa
import numpy as np
from scipy import signal

from ..abstractions.audio import AudioClip, ImpulseResponse
from ..exc import ArgError, SampleRateMismatch
from .signal import load_wav

logger = logging.getLogger(__name__)

MAX_SEMITONES = 12.0
BROWN_NOISE_PEAK = 0.9

# Phase vocoder framing used for pitch shifting.
VOCODER_N_FFT = 1024
VOCODER_HOP = 256


def load_impulse_response(
    path: str, label: Optional[str] = None
) -> ImpulseResponse:
    clip = load_wav(path)
    if len(clip) == 0:
        raise ArgError(f"Impulse response '{path}' is empty.")
    return ImpulseResponse(
        samples=clip.samples,
        sample_rate=clip.sample_rate,
        label=label or os.path.splitext(os.path.basename(path))[0],
    )


def convolve_reverb(
    clip: AudioClip, ir: ImpulseResponse, normalize: bool = True
) -> AudioClip:
    """
    Full linear convolution with `ir`, truncated to the clip's length.

    With `normalize` the output peak is rescaled to the input peak.
    """
    if clip.sample_rate != ir.sample_rate:
        raise SampleRateMismatch(
            f"Impulse response '{ir.label}' is sampled at {ir.sample_rate} "
            f"Hz, the clip at {clip.sample_rate} Hz."
        )
    n_samples = len(clip)
    if n_samples == 0:
        return clip
    wet = signal.fftconvolve(clip.samples, ir.samples, mode="full")[
        :n_samples
    ]
    if normalize:
        peak_out = np.max(np.abs(wet))
        if peak_out > 0:
            wet = wet / peak_out * clip.peak
    return AudioClip(samples=wet, sample_rate=clip.sample_rate)


def synth_impulse_response(
    tau_c: float,
    duration: Optional[float] = None,
    sample_rate: int = 44100,
    seed: int = 0,
    label: Optional[str] = None,
) -> ImpulseResponse:
    """
    Standard-normal white noise under the envelope exp(-t / tau_c).

    The duration defaults to five time constants.
    """
    if not tau_c > 0:
        raise ArgError(f"tau_c must be positive, got {tau_c}.")
    duration = 5.0 * tau_c if duration is None else duration
    if not duration > 0:
        raise ArgError(f"Duration must be positive, got {duration}.")
    n_samples = max(1, int(round(duration * sample_rate)))
    rng = np.random.default_rng(seed)
    envelope = np.exp(-(np.arange(n_samples) / sample_rate) / tau_c)
    return ImpulseResponse(
        samples=rng.standard_normal(n_samples) * envelope,
        sample_rate=sample_rate,
        label=label or f"tau{tau_c:g}",
    )


def pitch_shift(clip: AudioClip, semitones: float) -> AudioClip:
    """
    Shift pitch by `semitones`, keeping duration and sample rate.

    The clip is time-stretched by 2^(semitones/12) with a phase vocoder,
    then resampled by the inverse factor.
    """
    if abs(semitones) > MAX_SEMITONES:
        raise ArgError(
            f"Pitch shifts are limited to +/-{MAX_SEMITONES:g} semitones, "
            f"got {semitones}."
        )
    n_samples = len(clip)
    if semitones == 0 or n_samples == 0:
        return clip
    factor = 2.0 ** (semitones / 12.0)
    stft = librosa.stft(
        np.array(clip.samples),
        n_fft=VOCODER_N_FFT,
        hop_length=VOCODER_HOP,
        window="hann",
    )
    stretched = librosa.phase_vocoder(
        stft, rate=1.0 / factor, hop_length=VOCODER_HOP
    )
    longer = librosa.istft(
        stretched,
        hop_length=VOCODER_HOP,
        window="hann",
        length=int(round(n_samples * factor)),
    )
    ratio = Fraction(1.0 / factor).limit_denominator(1000)
    shifted = signal.resample_poly(
        longer, up=ratio.numerator, down=ratio.denominator
    )
    return AudioClip(
        samples=librosa.util.fix_length(shifted, size=n_samples),
        sample_rate=clip.sample_rate,
    )


def brown_noise(
    duration: float, sample_rate: int = 44100, seed: int = 0
) -> AudioClip:
    """Integrated white noise, mean-removed, with peak amplitude 0.9."""
    if not duration > 0:
        raise ArgError(f"Duration must be positive, got {duration}.")
    rng = np.random.default_rng(seed)
    walk = np.cumsum(rng.standard_normal(int(round(duration * sample_rate))))
    walk -= walk.mean()
    peak = np.max(np.abs(walk)) if walk.size else 0.0
    if peak > 0:
        walk = walk / peak * BROWN_NOISE_PEAK
    return AudioClip(samples=walk, sample_rate=sample_rate)


def white_noise(
    duration: float, sample_rate: int = 44100, seed: int = 0
) -> AudioClip:
    if not duration > 0:
        raise ArgError(f"Duration must be positive, got {duration}.")
    rng = np.random.default_rng(seed)
    return AudioClip(
        samples=rng.standard_normal(int(round(duration * sample_rate))),
        sample_rate=sample_rate,
    )
