import json
import os

import numpy as np
import pytest

from mrpcen import (
    FeatureFormatError,
    FeatureTensor,
    Representation,
    inspect_features,
    is_current,
    read_array,
    read_features,
    write_features,
)


@pytest.fixture
def tensor():
    rng = np.random.default_rng(0)
    return FeatureTensor(
        values=rng.uniform(0.0, 2.0, size=(8, 20, 3)),
        representation=Representation.MRPCEN,
        frame_rate=86.1328125,
        duration=0.23,
        schedule=[1.0, 2.0, 4.0],
    )


def test_write_and_read(tmp_path, tensor):
    array_path, sidecar_path = write_features(
        tmp_path, "clip-000", tensor, "abc123"
    )
    assert array_path.endswith("clip-000.npy")
    stored = np.load(array_path)
    assert stored.dtype == np.dtype("<f4")
    assert stored.shape == (8, 20, 3)
    with open(sidecar_path) as f:
        sidecar = json.load(f)
    assert sidecar["config_hash"] == "abc123"
    assert sidecar["representation"] == "mrpcen"
    assert sidecar["shape"] == [8, 20, 3]

    loaded = read_features(tmp_path, "clip-000")
    assert loaded.schedule == [1.0, 2.0, 4.0]
    np.testing.assert_allclose(loaded.values, tensor.values, rtol=1e-6)


def test_is_current(tmp_path, tensor):
    assert not is_current(tmp_path, "clip-000", "abc123")
    write_features(tmp_path, "clip-000", tensor, "abc123")
    assert is_current(tmp_path, "clip-000", "abc123")
    assert not is_current(tmp_path, "clip-000", "def456")


def test_truncated_file_names_byte_counts(tmp_path, tensor):
    array_path, _ = write_features(tmp_path, "clip-000", tensor, "abc123")
    with open(array_path, "rb") as f:
        data = f.read()
    with open(array_path, "wb") as f:
        f.write(data[:-10])
    expected = 8 * 20 * 3 * 4
    with pytest.raises(FeatureFormatError) as excinfo:
        read_array(array_path)
    message = str(excinfo.value)
    assert str(expected) in message
    assert str(expected - 10) in message


def test_not_an_npy_file(tmp_path):
    path = os.path.join(tmp_path, "junk.npy")
    with open(path, "wb") as f:
        f.write(b"definitely not numpy")
    with pytest.raises(FeatureFormatError):
        read_array(path)
    with pytest.raises(FeatureFormatError):
        read_array(os.path.join(tmp_path, "missing.npy"))


def test_missing_sidecar(tmp_path, tensor):
    _, sidecar_path = write_features(tmp_path, "clip-000", tensor, "abc")
    os.remove(sidecar_path)
    with pytest.raises(FeatureFormatError):
        read_features(tmp_path, "clip-000")


def test_inspect_zero_tensor(tmp_path):
    zeros = FeatureTensor(
        values=np.zeros((4, 10, 2)),
        representation=Representation.PCEN,
        frame_rate=10.0,
        duration=1.0,
        schedule=[2.0, 8.0],
    )
    array_path, _ = write_features(tmp_path, "clip-001", zeros, "h")
    summary = inspect_features(array_path)
    assert summary.shape == [4, 10, 2]
    assert summary.dtype == "float32"
    assert summary.clip_id == "clip-001"
    assert summary.config_hash == "h"
    assert [layer.rate for layer in summary.layers] == [2.0, 8.0]
    for layer in summary.layers:
        assert layer.min == layer.mean == layer.max == 0.0


def test_inspect_without_sidecar(tmp_path):
    path = os.path.join(tmp_path, "bare.npy")
    np.save(path, np.ones((3, 5), dtype="<f4"))
    summary = inspect_features(path)
    assert summary.shape == [3, 5, 1]
    assert summary.config_hash is None
    assert summary.layers[0].mean == 1.0
