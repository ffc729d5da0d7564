from .base_utils import (
    canonical_json,
    config_hash,
    derived_clip_id,
    generate_run_id,
    to_async_generator,
)

__all__ = [
    "to_async_generator",
    "generate_run_id",
    "canonical_json",
    "config_hash",
    "derived_clip_id",
]
