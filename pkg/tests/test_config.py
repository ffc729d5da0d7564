import json
import os

import pytest

from mrpcen import (
    FrameSpec,
    MRPCENAppBuilder,
    MRPCENConfig,
    Representation,
)


@pytest.fixture
def write_config(tmp_path):
    def _write(data) -> str:
        path = os.path.join(tmp_path, "config.json")
        with open(path, "w") as f:
            json.dump(data, f)
        return path

    return _write


def test_default_config():
    config = MRPCENConfig.from_json()
    assert isinstance(config.audio, FrameSpec)
    assert config.audio.fmax == 22050.0
    assert config.features.representation == Representation.MRPCEN
    assert config.features.schedule.rates == [2.0**k for k in range(10)]
    assert config.evaluation.bootstrap.n_reps == 100
    assert config.app["jobs"] == 1


def test_sections_merge_over_defaults(write_config):
    config = MRPCENConfig.from_json(
        write_config(
            {
                "audio": {"n_mels": 64},
                "features": {"provider": "pcen", "rate": 16},
            }
        )
    )
    assert config.audio.n_mels == 64
    assert config.audio.hop_length == 512
    assert config.features.pcen_params.T == 16
    assert config.features.epsilon == 1e-6


def test_none_provider(write_config):
    config = MRPCENConfig.from_json(
        write_config({"augmentation": {"provider": "None"}})
    )
    assert config.augmentation.provider is None


def test_unknown_provider(write_config):
    with pytest.raises(ValueError, match="features"):
        MRPCENConfig.from_json(write_config({"features": {"provider": "x"}}))


def test_invalid_frame_spec(write_config):
    with pytest.raises(ValueError, match="audio"):
        MRPCENConfig.from_json(write_config({"audio": {"hop_length": 0}}))


def test_invalid_pcen_values(write_config):
    with pytest.raises(ValueError):
        MRPCENConfig.from_json(write_config({"features": {"r": 2.0}}))
    with pytest.raises(ValueError):
        MRPCENConfig.from_json(
            write_config({"features": {"rates": [4, 2, 1]}})
        )


def test_invalid_augmentation(write_config):
    with pytest.raises(ValueError):
        MRPCENConfig.from_json(
            write_config({"augmentation": {"pitch_shifts": [0]}})
        )
    with pytest.raises(ValueError):
        MRPCENConfig.from_json(
            write_config(
                {"augmentation": {"impulse_responses": [{"label": "x"}]}}
            )
        )


def test_section_must_be_an_object(write_config):
    with pytest.raises(ValueError, match="evaluation"):
        MRPCENConfig.from_json(write_config({"evaluation": "segment"}))


def test_bad_files(tmp_path, write_config):
    with pytest.raises(ValueError):
        MRPCENConfig.from_json(os.path.join(tmp_path, "missing.json"))
    with pytest.raises(ValueError):
        MRPCENConfig.from_json(write_config([1, 2, 3]))
    path = os.path.join(tmp_path, "broken.json")
    with open(path, "w") as f:
        f.write("{not json")
    with pytest.raises(ValueError):
        MRPCENConfig.from_json(path)


def test_extra_sections_survive(write_config):
    config = MRPCENConfig.from_json(write_config({"notes": {"a": 1}}))
    assert config.to_dict()["notes"] == {"a": 1}


def test_serialization_roundtrip(write_config):
    config = MRPCENConfig.from_json(
        write_config({"evaluation": {"band_ranges": {"tone": [29, 35]}}})
    )
    data = json.loads(config.to_json())
    assert data["evaluation"]["band_ranges"] == {"tone": [29, 35]}
    assert "extra_fields" not in data["features"]
    reloaded = MRPCENConfig.from_json(write_config(data))
    assert reloaded.config_hash() == config.config_hash()


def test_config_hash_tracks_feature_sections(write_config):
    base = MRPCENConfig.from_json()
    other_eval = MRPCENConfig.from_json(
        write_config({"evaluation": {"threshold": 0.9}})
    )
    other_rate = MRPCENConfig.from_json(
        write_config({"features": {"rate": 4.0}})
    )
    assert len(base.config_hash()) == 64
    assert base.config_hash() == other_eval.config_hash()
    assert base.config_hash() != other_rate.config_hash()
    assert base.config_hash(("evaluation",)) != other_eval.config_hash(
        ("evaluation",)
    )
    assert json.loads(base.canonical())["audio"]["n_mels"] == 128


@pytest.mark.parametrize(
    "name", [n for n in MRPCENAppBuilder.CONFIG_OPTIONS if n is not None]
)
def test_bundled_configs_load(name):
    config = MRPCENConfig.from_json(MRPCENAppBuilder.CONFIG_OPTIONS[name])
    assert config.evaluation.provider == "segment"
