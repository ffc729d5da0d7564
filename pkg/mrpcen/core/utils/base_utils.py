import hashlib
import json
import uuid
from typing import Any, AsyncGenerator, Iterable


def generate_run_id() -> uuid.UUID:
    return uuid.uuid4()


async def to_async_generator(
    iterable: Iterable[Any],
) -> AsyncGenerator[Any, None]:
    for item in iterable:
        yield item


def canonical_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def config_hash(sections: dict[str, Any]) -> str:
    """SHA-256 of the canonical JSON of `sections`."""
    return hashlib.sha256(canonical_json(sections).encode("utf-8")).hexdigest()


def derived_clip_id(clip_id: str, suffix: str) -> str:
    return f"{clip_id}__{suffix}"
