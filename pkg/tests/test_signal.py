import os
import warnings
from unittest import mock

import numpy as np
import pytest
import soundfile as sf

from mrpcen import (
    AudioClip,
    AudioFileNotFound,
    AudioFormatError,
    FrameSpec,
    MelSpectrogram,
    SampleRateMismatch,
    UnsupportedCodec,
    brown_noise,
    load_wav,
    log_compress,
    mel_filterbank,
    mel_spectrogram,
    stft_magnitude,
    wav_duration,
    white_noise,
    write_wav,
)
from mrpcen.core.dsp import signal as signal_module


def _sine(freq: float, duration: float, sample_rate: int) -> AudioClip:
    t = np.arange(int(duration * sample_rate)) / sample_rate
    return AudioClip(
        samples=0.5 * np.sin(2 * np.pi * freq * t), sample_rate=sample_rate
    )


def test_wav_roundtrip(tmp_path):
    clip = _sine(440.0, 0.5, 22050)
    path = os.path.join(tmp_path, "sine.wav")
    write_wav(path, clip)
    loaded = load_wav(path)
    assert loaded.sample_rate == 22050
    assert len(loaded) == len(clip)
    np.testing.assert_allclose(loaded.samples, clip.samples, atol=1e-7)
    assert wav_duration(path) == pytest.approx(0.5)


def test_pcm16_full_scale(tmp_path):
    path = os.path.join(tmp_path, "pcm16.wav")
    sf.write(
        path,
        np.array([-32768, 0, 16384], dtype=np.int16),
        8000,
        subtype="PCM_16",
    )
    loaded = load_wav(path)
    np.testing.assert_array_equal(loaded.samples, [-1.0, 0.0, 0.5])


def test_stereo_is_averaged(tmp_path):
    path = os.path.join(tmp_path, "stereo.wav")
    frames = np.stack([np.full(100, 0.5), np.full(100, -0.25)], axis=1)
    sf.write(path, frames, 8000, subtype="FLOAT")
    np.testing.assert_allclose(load_wav(path).samples, 0.125)


def test_missing_file(tmp_path):
    with pytest.raises(AudioFileNotFound):
        load_wav(os.path.join(tmp_path, "nope.wav"))


def test_not_a_wav(tmp_path):
    path = os.path.join(tmp_path, "junk.wav")
    with open(path, "wb") as f:
        f.write(b"this is not audio" * 10)
    with pytest.raises(AudioFormatError):
        load_wav(path)


def test_unsupported_encoding(tmp_path):
    path = os.path.join(tmp_path, "ulaw.wav")
    sf.write(path, np.zeros(100), 8000, subtype="ULAW", format="WAV")
    with pytest.raises(UnsupportedCodec):
        load_wav(path)


def test_frame_spec_defaults():
    spec = FrameSpec()
    assert spec.fmax == 22050.0
    assert spec.n_bins == 513
    assert spec.frame_rate == pytest.approx(86.1328125)
    assert spec.n_frames(441000) == 862
    with pytest.raises(ValueError):
        FrameSpec(hop_length=2048)
    with pytest.raises(ValueError):
        FrameSpec(fmax=30000.0)


def test_mel_spectrogram_shape():
    clip = white_noise(10.0, 44100, seed=0)
    spec = FrameSpec()
    assert stft_magnitude(clip, spec).shape == (513, 862)
    mel = mel_spectrogram(clip, spec)
    assert mel.values.shape == (128, 862)
    assert np.all(mel.values >= 0)


def test_mel_filterbank_places_tone():
    spec = FrameSpec(sample_rate=22050)
    mel = mel_spectrogram(_sine(1000.0, 1.0, 22050), spec)
    peak_band = int(np.argmax(mel.values.mean(axis=1)))
    weights = mel_filterbank(spec)
    fft_bin = int(round(1000.0 * spec.window_length / spec.sample_rate))
    assert weights[peak_band, fft_bin] > 0


def test_sample_rate_mismatch():
    with pytest.raises(SampleRateMismatch):
        mel_spectrogram(_sine(440.0, 0.1, 22050), FrameSpec())


def test_log_compress_range():
    mel = mel_spectrogram(white_noise(1.0, 44100, seed=3), FrameSpec())
    db = log_compress(mel)
    assert db.max() == pytest.approx(0.0)
    assert db.min() >= -80.0


def test_dead_mel_filters_are_reported():
    spec = FrameSpec(window_length=256, hop_length=128, n_mels=128)
    with mock.patch.object(signal_module.logger, "warning") as warning:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            weights = mel_filterbank(spec)
    assert weights.shape == (128, 129)
    warning.assert_called_once()
    assert "mel filters cover no FFT bin" in warning.call_args[0][0]


def test_stft_of_silence():
    clip = AudioClip(samples=np.zeros(441000), sample_rate=44100)
    magnitude = stft_magnitude(clip, FrameSpec())
    assert magnitude.shape == (513, 862)
    assert np.all(magnitude == 0.0)


def test_stft_bin_centered_sine_peaks_in_its_bin():
    clip = _sine(100 * 44100 / 1024, 1.0, 44100)
    magnitude = stft_magnitude(clip, FrameSpec())
    assert np.all(np.argmax(magnitude[:, 1:-1], axis=0) == 100)


def test_default_filterbank_has_no_dead_filters():
    weights = mel_filterbank(FrameSpec())
    assert weights.shape == (128, 513)
    assert np.all(weights @ np.ones(513) > 0)


def test_log_compress_reference_values():
    mel = MelSpectrogram(
        values=np.array([[1.0, 0.1], [0.0, 1.0]]), spec=FrameSpec(n_mels=2)
    )
    np.testing.assert_allclose(
        log_compress(mel), [[0.0, -10.0], [-80.0, 0.0]], atol=1e-9
    )


@pytest.mark.parametrize("k", [0.25, 3.0])
def test_mel_stage_is_linear_in_amplitude(k):
    clip = white_noise(1.0, 44100, seed=5)
    louder = AudioClip(samples=k * clip.samples, sample_rate=44100)
    np.testing.assert_allclose(
        mel_spectrogram(louder, FrameSpec()).values,
        k * mel_spectrogram(clip, FrameSpec()).values,
        rtol=1e-9,
        atol=1e-12,
    )


def test_white_noise_stft_energy_grows_with_duration():
    spec = FrameSpec(sample_rate=16000, n_mels=40)
    for seed in range(20):
        energies = [
            np.sum(stft_magnitude(white_noise(d, 16000, seed=seed), spec) ** 2)
            for d in (1.0, 2.0, 4.0)
        ]
        assert energies[1] / energies[0] == pytest.approx(2.0, rel=0.1)
        assert energies[2] / energies[0] == pytest.approx(4.0, rel=0.1)


def test_brown_noise_mel_energy_falls_with_frequency():
    spec = FrameSpec()
    profile = np.zeros(spec.n_mels)
    for seed in range(50):
        mel = mel_spectrogram(brown_noise(2.0, 44100, seed=seed), spec)
        profile += mel.values.mean(axis=1)
    quarters = profile.reshape(4, -1).mean(axis=1)
    assert np.all(np.diff(quarters) < 0)
    slope, _ = np.polyfit(np.arange(spec.n_mels), np.log(profile), 1)
    assert slope < 0
