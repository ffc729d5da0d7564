"""
Per-channel energy normalization.

The smoother runs one first-order recursion per mel band,

    M(t, f) = s * E(t, f) + (1 - s) * M(t - 1, f),    M(0, f) = E(0, f)

and the transform applies adaptive gain followed by root compression,

    PCEN(t, f) = (E / (epsilon + M)^alpha + delta)^r - delta^r.

The weight `s` comes from the rate parameter `T` (in frames) through the
filter's half-power cutoff, omega_c = min(2 pi / T, pi).
"""

import logging
import math
from typing import Any, Optional, Union

import numpy as np
from scipy import optimize, stats

from ..abstractions.audio import MelSpectrogram
from ..abstractions.pcen import (
    MultiRateStack,
    PcenParams,
    RateSchedule,
    SmootherState,
)
from ..exc import ArgError

logger = logging.getLogger(__name__)

Energies = Union[MelSpectrogram, np.ndarray]


def smoothing_coefficient(T: float) -> float:
    """
    Smoothing weight whose half-power cutoff sits at min(2 pi / T, pi).

    Solves s^2 + 2(1 - c)s - 2(1 - c) = 0 for its positive root, where
    c = cos(omega_c).
    """
    if not (math.isfinite(T) and T >= 1):
        raise ArgError(f"Rate parameter T must be at least 1, got {T}.")
    omega_c = min(2 * math.pi / T, math.pi)
    # 1 - cos(w) without cancellation for large T
    b = 2.0 * math.sin(omega_c / 2.0) ** 2
    return -b + math.sqrt(b * b + 2.0 * b)


def cutoff_frequency(s: float) -> float:
    """The half-power cutoff, arccos(1 - s^2 / (2(1 - s))), in rad/frame."""
    _check_weight(s)
    return float(np.arccos(np.clip(1.0 - s * s / (2.0 * (1.0 - s)), -1, 1)))


def ar1_frequency_response(
    s: float, omega: Union[float, np.ndarray]
) -> np.ndarray:
    """Complex response s / (1 - (1 - s) e^{-j omega}) of the smoother."""
    _check_weight(s)
    return s / (1.0 - (1.0 - s) * np.exp(-1j * np.asarray(omega)))


def ar1_gain_db(s: float, omega: Union[float, np.ndarray]) -> np.ndarray:
    """Smoother gain in decibels; the filtered signal is an energy."""
    return 10.0 * np.log10(np.abs(ar1_frequency_response(s, omega)))


def measure_cutoff(s: float) -> float:
    """Locate the half-power point of the smoother numerically."""

    def excess_power(omega: float) -> float:
        return float(np.abs(ar1_frequency_response(s, omega)) ** 2 - 0.5)

    if excess_power(math.pi) >= 0:
        return math.pi
    return optimize.brentq(excess_power, 0.0, math.pi, xtol=1e-14)


def _check_weight(s: float) -> None:
    if not 0 < s < 1:
        raise ArgError(f"Smoothing weight must lie in (0, 1), got {s}.")


def _energies(E: Energies) -> np.ndarray:
    values = E.values if isinstance(E, MelSpectrogram) else E
    values = np.asarray(values, dtype=np.float64)
    if values.ndim != 2:
        raise ArgError(
            f"Expected a [n_mels x n_frames] matrix, got shape {values.shape}."
        )
    return values


def _smooth_time_major(energies: np.ndarray, s: float) -> np.ndarray:
    # rows are frames; each row update matches one streaming step
    smoothed = np.empty_like(energies)
    if energies.shape[0] == 0:
        return smoothed
    smoothed[0] = energies[0]
    for t in range(1, energies.shape[0]):
        smoothed[t] = s * energies[t] + (1 - s) * smoothed[t - 1]
    return smoothed


def _gain_and_compress(
    energies: np.ndarray, smoothed: np.ndarray, params: PcenParams
) -> np.ndarray:
    gain = np.power(params.epsilon + smoothed, params.alpha)
    return np.power(energies / gain + params.delta, params.r) - (
        params.delta**params.r
    )


def ar1_smooth(E: Energies, s: float) -> np.ndarray:
    _check_weight(s)
    time_major = np.ascontiguousarray(_energies(E).T)
    return np.ascontiguousarray(_smooth_time_major(time_major, s).T)


def pcen_transform(E: Energies, params: PcenParams) -> np.ndarray:
    energies = _energies(E)
    if np.any(energies < 0):
        raise ArgError("PCEN input energies must be nonnegative.")
    time_major = np.ascontiguousarray(energies.T)
    smoothed = _smooth_time_major(time_major, params.s)
    output = _gain_and_compress(time_major, smoothed, params)
    return np.ascontiguousarray(output.T)


def multi_rate_pcen(
    E: MelSpectrogram, schedule: RateSchedule, params: PcenParams
) -> MultiRateStack:
    """One PCEN layer per scheduled rate, stacked along the last axis."""
    layers = [
        pcen_transform(E, params.with_rate(rate)) for rate in schedule.rates
    ]
    logger.debug(
        f"Computed {len(layers)} PCEN layers for rates {schedule.rates}"
    )
    return MultiRateStack(
        values=np.stack(layers, axis=-1),
        schedule=schedule,
        params=params,
        spec=E.spec,
    )


def pcen_stream_step(
    frame: np.ndarray, state: SmootherState, params: PcenParams
) -> tuple[np.ndarray, SmootherState]:
    """
    Process one spectrogram column.

    Feeding the columns of a spectrogram in order reproduces
    `pcen_transform` bit for bit.
    """
    frame = np.ascontiguousarray(frame, dtype=np.float64)
    if frame.ndim != 1 or frame.shape[0] != state.n_mels:
        raise ArgError(
            f"Frame of shape {frame.shape} does not match a state over "
            f"{state.n_mels} bands."
        )
    if np.any(frame < 0):
        raise ArgError("PCEN input energies must be nonnegative.")
    s = params.s
    if state.initialized:
        smoothed = s * frame + (1 - s) * state.m
    else:
        smoothed = frame.copy()
    output = _gain_and_compress(frame, smoothed, params)
    return output, SmootherState(n_mels=state.n_mels, m=smoothed)


def gaussianization_score(
    values: np.ndarray, axis: Optional[int] = None
) -> tuple[Any, Any]:
    """
    Sample skewness and excess kurtosis.

    With `axis` None the values are flattened first and two floats come
    back; otherwise one score per slice along `axis`.
    """
    array = np.asarray(values, dtype=np.float64)
    if axis is None:
        array = array.ravel()
        axis = 0
    if array.shape[axis] < 2 or np.any(
        np.all(array == np.take(array, [0], axis=axis), axis=axis)
    ):
        raise ArgError(
            "Skewness and kurtosis need at least two distinct values."
        )
    skewness = stats.skew(array, axis=axis)
    kurtosis = stats.kurtosis(array, axis=axis, fisher=True)
    if np.ndim(skewness) == 0:
        return float(skewness), float(kurtosis)
    return skewness, kurtosis
