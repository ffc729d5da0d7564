"""
Feature tensor files.

Each clip is stored as `{clip_id}.npy`, an NPY version 1.0 array of
little-endian float32 in C order shaped (n_mels, n_frames, n_layers), next
to a `{clip_id}.json` sidecar describing how it was computed.
"""

import json
import logging
import os
from typing import Optional

import numpy as np

from ..abstractions.features import (
    FeatureSidecar,
    FeatureSummary,
    FeatureTensor,
    LayerStats,
)
from ..exc import FeatureFormatError

logger = logging.getLogger(__name__)

FEATURE_DTYPE = np.dtype("<f4")
NPY_VERSION = (1, 0)


def feature_paths(directory: str, clip_id: str) -> tuple[str, str]:
    stem = os.path.join(directory, clip_id)
    return f"{stem}.npy", f"{stem}.json"


def write_features(
    directory: str, clip_id: str, tensor: FeatureTensor, config_hash: str
) -> tuple[str, str]:
    array_path, sidecar_path = feature_paths(directory, clip_id)
    values = np.ascontiguousarray(tensor.values, dtype=FEATURE_DTYPE)
    with open(array_path, "wb") as f:
        np.lib.format.write_array(
            f, values, version=NPY_VERSION, allow_pickle=False
        )
    sidecar = FeatureSidecar(
        clip_id=clip_id,
        config_hash=config_hash,
        representation=tensor.representation,
        schedule=tensor.schedule,
        frame_rate=tensor.frame_rate,
        duration=tensor.duration,
        shape=list(values.shape),
    )
    with open(sidecar_path, "w", encoding="utf-8") as f:
        json.dump(sidecar.model_dump(mode="json"), f, indent=2, sort_keys=True)
        f.write("\n")
    return array_path, sidecar_path


def read_array(path: str) -> np.ndarray:
    """
    Read an NPY file, checking its header against the bytes that follow.

    A truncated or padded file raises FeatureFormatError naming the
    expected and actual payload lengths.
    """
    if not os.path.isfile(path):
        raise FeatureFormatError(f"Feature file '{path}' does not exist.")
    with open(path, "rb") as f:
        try:
            version = np.lib.format.read_magic(f)
            if version == (1, 0):
                header = np.lib.format.read_array_header_1_0(f)
            else:
                header = np.lib.format.read_array_header_2_0(f)
        except ValueError as e:
            raise FeatureFormatError(
                f"'{path}' is not a valid NPY file: {e}"
            )
        shape, fortran_order, dtype = header
        if dtype.hasobject:
            raise FeatureFormatError(f"'{path}' holds Python objects.")
        expected = int(np.prod(shape, dtype=np.int64)) * dtype.itemsize
        payload = f.read()
    if len(payload) != expected:
        raise FeatureFormatError(
            f"'{path}' header declares shape {shape} of {dtype}, i.e. "
            f"{expected} data bytes, but the file holds {len(payload)}."
        )
    order = "F" if fortran_order else "C"
    return np.frombuffer(payload, dtype=dtype).reshape(shape, order=order)


def read_sidecar(path: str) -> Optional[FeatureSidecar]:
    if not os.path.isfile(path):
        return None
    try:
        with open(path, encoding="utf-8") as f:
            return FeatureSidecar(**json.load(f))
    except (json.JSONDecodeError, TypeError, ValueError) as e:
        raise FeatureFormatError(f"Malformed sidecar '{path}': {e}")


def read_features(directory: str, clip_id: str) -> FeatureTensor:
    array_path, sidecar_path = feature_paths(directory, clip_id)
    values = read_array(array_path)
    sidecar = read_sidecar(sidecar_path)
    if sidecar is None:
        raise FeatureFormatError(
            f"Feature file '{array_path}' has no sidecar '{sidecar_path}'."
        )
    if list(values.shape) != sidecar.shape:
        raise FeatureFormatError(
            f"'{array_path}' has shape {list(values.shape)}, its sidecar "
            f"declares {sidecar.shape}."
        )
    return FeatureTensor(
        values=values,
        representation=sidecar.representation,
        frame_rate=sidecar.frame_rate,
        duration=sidecar.duration,
        schedule=sidecar.schedule,
    )


def is_current(directory: str, clip_id: str, config_hash: str) -> bool:
    """Whether a clip's features exist and were computed under this hash."""
    array_path, sidecar_path = feature_paths(directory, clip_id)
    if not os.path.isfile(array_path):
        return False
    try:
        sidecar = read_sidecar(sidecar_path)
    except FeatureFormatError:
        return False
    return sidecar is not None and sidecar.config_hash == config_hash


def inspect_features(path: str) -> FeatureSummary:
    values = read_array(path)
    if values.ndim == 2:
        values = values[..., np.newaxis]
    if values.ndim != 3:
        raise FeatureFormatError(
            f"'{path}' holds a {values.ndim}-d array, expected "
            f"[n_mels x n_frames x n_layers]."
        )
    sidecar = read_sidecar(os.path.splitext(path)[0] + ".json")
    schedule = sidecar.schedule if sidecar else None
    layers = []
    for i in range(values.shape[2]):
        layer = values[:, :, i].astype(np.float64)
        empty = layer.size == 0
        layers.append(
            LayerStats(
                layer=i,
                rate=schedule[i] if schedule and i < len(schedule) else None,
                min=0.0 if empty else float(layer.min()),
                mean=0.0 if empty else float(layer.mean()),
                max=0.0 if empty else float(layer.max()),
            )
        )
    return FeatureSummary(
        path=path,
        shape=list(values.shape),
        dtype=str(values.dtype),
        config_hash=sidecar.config_hash if sidecar else None,
        clip_id=sidecar.clip_id if sidecar else None,
        layers=layers,
    )
