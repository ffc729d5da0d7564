"""Per-clip outcomes and run summaries of dataset operations."""

import json
from enum import Enum
from typing import Optional

from pydantic import BaseModel

from .manifest import ManifestEntry


class ClipStatus(str, Enum):
    OK = "ok"
    SKIPPED = "skipped"
    FAILED = "failed"


class ClipResult(BaseModel):
    """
    The outcome of one clip (or one augmented duplicate).

    `outputs` are file names relative to the run's output directory.
    `entry` is the manifest entry an augmentation produced.
    """

    clip_id: str
    status: ClipStatus
    shape: Optional[list[int]] = None
    outputs: list[str] = []
    error: Optional[str] = None
    entry: Optional[ManifestEntry] = None


class RunSummary(BaseModel):
    operation: str
    config_hash: Optional[str] = None
    clips: list[ClipResult] = []

    def _count(self, status: ClipStatus) -> int:
        return sum(1 for clip in self.clips if clip.status == status)

    @property
    def n_ok(self) -> int:
        return self._count(ClipStatus.OK)

    @property
    def n_skipped(self) -> int:
        return self._count(ClipStatus.SKIPPED)

    @property
    def n_failed(self) -> int:
        return self._count(ClipStatus.FAILED)

    @property
    def failures(self) -> list[ClipResult]:
        return [c for c in self.clips if c.status == ClipStatus.FAILED]

    def to_json(self, path: str) -> None:
        """Write the run manifest; identical runs give identical bytes."""
        data = self.model_dump(
            mode="json", exclude={"clips": {"__all__": {"entry"}}}
        )
        data["counts"] = {
            "ok": self.n_ok,
            "skipped": self.n_skipped,
            "failed": self.n_failed,
        }
        with open(path, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2, sort_keys=True)
            f.write("\n")
