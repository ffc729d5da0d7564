"""
A small synthetic sound event dataset.

Every clip is Brownian background noise with a few foreground events from
three classes, each confined to its own part of the spectrum:

    tone         1 kHz sine
    chirp        linear sweep from 3 to 6 kHz
    noise_burst  white noise high-passed at 8 kHz

The clips, annotations and manifest are fully determined by the seed.
"""

import logging
import os

import fire
import numpy as np
from scipy import signal

from mrpcen.core import (
    AudioClip,
    Event,
    EventList,
    Manifest,
    ManifestEntry,
    brown_noise,
    write_event_csv,
    write_wav,
)

logger = logging.getLogger(__name__)

VOCABULARY = ["tone", "chirp", "noise_burst"]
# Mel bands [lo, hi) each class occupies at the default frame spec
BAND_RANGES = {
    "tone": [29, 35],
    "chirp": [64, 89],
    "noise_burst": [95, 128],
}
SAMPLE_RATE = 44100
BACKGROUND_PEAK = 0.05
EVENT_AMPLITUDE = 0.5
FADE = 0.01
MIN_EVENT, MAX_EVENT = 0.5, 1.0
MAX_EVENTS = 3


def _tone(t: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    return np.sin(2 * np.pi * 1000.0 * t)


def _chirp(t: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    return signal.chirp(t, f0=3000.0, t1=t[-1], f1=6000.0)


def _noise_burst(t: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    sos = signal.butter(
        6, 8000.0, btype="highpass", fs=SAMPLE_RATE, output="sos"
    )
    burst = signal.sosfilt(sos, rng.standard_normal(t.shape[0]))
    return burst / np.max(np.abs(burst))


SOURCES = {"tone": _tone, "chirp": _chirp, "noise_burst": _noise_burst}


def _envelope(n: int) -> np.ndarray:
    ramp = min(int(FADE * SAMPLE_RATE), n // 2)
    envelope = np.ones(n)
    if ramp > 0:
        envelope[:ramp] = np.linspace(0.0, 1.0, ramp)
        envelope[-ramp:] = np.linspace(1.0, 0.0, ramp)
    return envelope


def synth_clip(
    duration: float, seed: int
) -> tuple[AudioClip, EventList]:
    """One clip and its annotation. The first event is always a tone."""
    rng = np.random.default_rng(seed)
    samples = brown_noise(duration, SAMPLE_RATE, seed=seed).samples.copy()
    samples *= BACKGROUND_PEAK / np.max(np.abs(samples))

    n_events = int(rng.integers(1, MAX_EVENTS + 1))
    labels = ["tone"] + [
        str(label) for label in rng.choice(VOCABULARY, size=n_events - 1)
    ]
    events = []
    for label in labels:
        length = round(float(rng.uniform(MIN_EVENT, MAX_EVENT)), 3)
        onset = round(float(rng.uniform(0.0, duration - length)), 3)
        start = int(round(onset * SAMPLE_RATE))
        stop = min(int(round((onset + length) * SAMPLE_RATE)), len(samples))
        t = np.arange(stop - start) / SAMPLE_RATE
        source = SOURCES[label](t, rng)
        samples[start:stop] += EVENT_AMPLITUDE * source * _envelope(len(t))
        events.append(
            Event(
                onset=start / SAMPLE_RATE,
                offset=stop / SAMPLE_RATE,
                label=label,
            )
        )
    events.sort(key=lambda event: (event.onset, event.label))
    clip = AudioClip(samples=samples, sample_rate=SAMPLE_RATE)
    return clip, EventList(
        events=events, duration=clip.duration, vocabulary=VOCABULARY
    )


def build_miniature_dataset(
    out_dir: str,
    n_clips: int = 10,
    duration: float = 4.0,
    seed: int = 0,
) -> Manifest:
    """Write `n_clips` clips, their annotations and `manifest.json`."""
    if duration <= MAX_EVENT:
        raise ValueError(
            f"Clips must be longer than {MAX_EVENT} s, got {duration}."
        )
    audio_dir = os.path.join(out_dir, "audio")
    annotation_dir = os.path.join(out_dir, "annotations")
    os.makedirs(audio_dir, exist_ok=True)
    os.makedirs(annotation_dir, exist_ok=True)

    entries = []
    for i, child in enumerate(np.random.SeedSequence(seed).spawn(n_clips)):
        clip_id = f"clip-{i:03d}"
        clip, events = synth_clip(
            duration, int(child.generate_state(1)[0])
        )
        write_wav(os.path.join(audio_dir, f"{clip_id}.wav"), clip)
        write_event_csv(
            os.path.join(annotation_dir, f"{clip_id}.csv"), events
        )
        entries.append(
            ManifestEntry(
                clip_id=clip_id,
                audio_path=os.path.join("audio", f"{clip_id}.wav"),
                annotation_path=os.path.join(
                    "annotations", f"{clip_id}.csv"
                ),
            )
        )
    manifest = Manifest(
        vocabulary=VOCABULARY,
        entries=entries,
        root=os.path.abspath(out_dir),
    )
    manifest.to_json(os.path.join(out_dir, "manifest.json"))
    logger.info(f"Wrote {n_clips} miniature clips to {out_dir}")
    return manifest


if __name__ == "__main__":
    fire.Fire(build_miniature_dataset)
