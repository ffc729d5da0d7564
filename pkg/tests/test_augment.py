import os

import numpy as np
import pytest
from scipy import signal

from mrpcen import (
    ArgError,
    AudioClip,
    ImpulseResponse,
    SampleRateMismatch,
    brown_noise,
    convolve_reverb,
    load_impulse_response,
    pitch_shift,
    synth_impulse_response,
    white_noise,
    write_wav,
)


def _sine(freq: float, duration: float, sample_rate: int) -> AudioClip:
    t = np.arange(int(duration * sample_rate)) / sample_rate
    return AudioClip(
        samples=0.5 * np.sin(2 * np.pi * freq * t), sample_rate=sample_rate
    )


def _dominant_frequency(clip: AudioClip) -> float:
    spectrum = np.abs(np.fft.rfft(clip.samples * np.hanning(len(clip))))
    freqs = np.fft.rfftfreq(len(clip), d=1.0 / clip.sample_rate)
    return float(freqs[np.argmax(spectrum)])


def test_unit_impulse_is_identity():
    clip = white_noise(0.5, 16000, seed=0)
    ir = ImpulseResponse(samples=[1.0], sample_rate=16000, label="dirac")
    wet = convolve_reverb(clip, ir)
    assert len(wet) == len(clip)
    np.testing.assert_allclose(wet.samples, clip.samples, atol=1e-9)


def test_reverb_keeps_length_and_peak():
    clip = _sine(440.0, 1.0, 16000)
    ir = synth_impulse_response(0.1, sample_rate=16000, seed=1)
    wet = convolve_reverb(clip, ir)
    assert len(wet) == len(clip)
    assert wet.peak == pytest.approx(clip.peak)
    raw = convolve_reverb(clip, ir, normalize=False)
    assert raw.peak != pytest.approx(clip.peak)


def test_reverb_sample_rate_mismatch():
    clip = white_noise(0.1, 16000)
    ir = synth_impulse_response(0.05, sample_rate=8000)
    with pytest.raises(SampleRateMismatch):
        convolve_reverb(clip, ir)


def test_synthetic_ir_decays():
    tau, sample_rate = 0.1, 8000
    ir = synth_impulse_response(tau, sample_rate=sample_rate, seed=2)
    assert len(ir) == int(5 * tau * sample_rate)
    assert ir.label == "tau0.1"
    window = int(tau * sample_rate)
    energy = np.asarray(ir.samples) ** 2
    ratio = energy[:window].sum() / energy[window : 2 * window].sum()
    # power decays as exp(-2t / tau)
    assert ratio == pytest.approx(np.exp(2.0), rel=0.2)


@pytest.mark.parametrize("tau", [0.1, 0.3, 0.5])
def test_synthetic_ir_log_rms_slope(tau):
    sample_rate, window = 44100, 441
    for seed in range(20):
        ir = synth_impulse_response(tau, sample_rate=sample_rate, seed=seed)
        n_windows = len(ir) // window
        frames = np.asarray(ir.samples)[: n_windows * window]
        rms = np.sqrt(np.mean(frames.reshape(n_windows, window) ** 2, axis=1))
        times = (np.arange(n_windows) + 0.5) * window / sample_rate
        slope, _ = np.polyfit(times, np.log(rms), 1)
        assert slope == pytest.approx(-1.0 / tau, rel=0.05), seed


def test_synthetic_ir_is_seeded():
    a = synth_impulse_response(0.05, seed=7)
    b = synth_impulse_response(0.05, seed=7)
    c = synth_impulse_response(0.05, seed=8)
    np.testing.assert_array_equal(a.samples, b.samples)
    assert not np.array_equal(a.samples, c.samples)
    with pytest.raises(ArgError):
        synth_impulse_response(0.0)


def test_load_impulse_response(tmp_path):
    path = os.path.join(tmp_path, "hall.wav")
    write_wav(path, white_noise(0.2, 16000, seed=4))
    ir = load_impulse_response(path)
    assert ir.label == "hall"
    assert ir.sample_rate == 16000


def test_octave_shift_doubles_frequency():
    clip = _sine(440.0, 2.0, 22050)
    shifted = pitch_shift(clip, 12)
    assert len(shifted) == len(clip)
    assert shifted.sample_rate == clip.sample_rate
    assert _dominant_frequency(shifted) == pytest.approx(880.0, rel=0.02)


def test_shift_down():
    clip = _sine(880.0, 2.0, 22050)
    shifted = pitch_shift(clip, -12)
    assert _dominant_frequency(shifted) == pytest.approx(440.0, rel=0.02)


def test_shift_limits():
    clip = _sine(440.0, 0.1, 22050)
    assert pitch_shift(clip, 0) is clip
    with pytest.raises(ArgError):
        pitch_shift(clip, 13)


def test_brown_noise():
    noise = brown_noise(2.0, 22050, seed=5)
    assert len(noise) == 44100
    assert noise.peak == pytest.approx(0.9)
    assert abs(float(np.mean(noise.samples))) < 1e-9
    # most energy sits in the lowest frequencies
    spectrum = np.abs(np.fft.rfft(noise.samples)) ** 2
    low = spectrum[: len(spectrum) // 100].sum()
    assert low > 0.5 * spectrum.sum()
    np.testing.assert_array_equal(
        noise.samples, brown_noise(2.0, 22050, seed=5).samples
    )


def test_one_sample_delay():
    clip = white_noise(0.1, 16000, seed=2)
    ir = ImpulseResponse(samples=[0.0, 1.0], sample_rate=16000, label="d1")
    wet = convolve_reverb(clip, ir, normalize=False)
    expected = np.concatenate(([0.0], clip.samples[:-1]))
    np.testing.assert_allclose(wet.samples, expected, atol=1e-12)


def test_fft_convolution_matches_direct():
    clip = white_noise(0.05, 8000, seed=3)
    ir = synth_impulse_response(0.01, sample_rate=8000, seed=4)
    wet = convolve_reverb(clip, ir, normalize=False)
    direct = np.convolve(clip.samples, ir.samples)[: len(clip)]
    np.testing.assert_allclose(wet.samples, direct, atol=1e-10)


def test_semitone_shift():
    clip = _sine(440.0, 2.0, 22050)
    shifted = pitch_shift(clip, 1)
    expected = 440.0 * 2 ** (1 / 12)
    assert expected == pytest.approx(466.16, abs=0.01)
    assert _dominant_frequency(shifted) == pytest.approx(expected, abs=2.0)


def test_shift_round_trip_restores_pitch():
    clip = _sine(440.0, 2.0, 22050)
    restored = pitch_shift(pitch_shift(clip, 2), -2)
    assert len(restored) == len(clip)
    assert _dominant_frequency(restored) == pytest.approx(440.0, abs=2.0)


def test_reverb_is_linear_before_normalization():
    x = white_noise(0.25, 16000, seed=1)
    y = brown_noise(0.25, 16000, seed=2)
    ir = synth_impulse_response(0.02, sample_rate=16000, seed=3)
    mixed = AudioClip(
        samples=2.0 * x.samples - 0.5 * y.samples, sample_rate=16000
    )
    wet = convolve_reverb(mixed, ir, normalize=False)
    expected = (
        2.0 * convolve_reverb(x, ir, normalize=False).samples
        - 0.5 * convolve_reverb(y, ir, normalize=False).samples
    )
    np.testing.assert_allclose(wet.samples, expected, atol=1e-9)


def test_brown_noise_spectrum_falls_20_db_per_decade():
    noise = brown_noise(10.0, 44100, seed=11)
    freqs, psd = signal.welch(noise.samples, fs=44100, nperseg=8192)
    band = (freqs >= 50) & (freqs <= 5000)
    slope, _ = np.polyfit(np.log10(freqs[band]), 10 * np.log10(psd[band]), 1)
    assert slope == pytest.approx(-20.0, abs=3.0)
