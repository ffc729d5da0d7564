"""Abstractions for dataset manifests."""

import json
import logging
import os
from typing import Optional

from pydantic import BaseModel, ValidationError, model_validator

from ..exc import ManifestError

logger = logging.getLogger(__name__)


class ManifestEntry(BaseModel):
    clip_id: str
    audio_path: str
    annotation_path: Optional[str] = None

    class Config:
        frozen = True
        extra = "forbid"


class Manifest(BaseModel):
    """
    A dataset listing: one entry per clip plus the class vocabulary.

    Relative paths are resolved against `root`, which is the directory of
    the manifest file when loaded with `from_json`.
    """

    vocabulary: list[str]
    entries: list[ManifestEntry] = []
    root: Optional[str] = None

    class Config:
        frozen = True
        extra = "forbid"

    @model_validator(mode="after")
    def _validate_ids(self) -> "Manifest":
        seen = set()
        for entry in self.entries:
            if entry.clip_id in seen:
                raise ValueError(f"Duplicate clip_id '{entry.clip_id}'.")
            seen.add(entry.clip_id)
        if len(set(self.vocabulary)) != len(self.vocabulary):
            raise ValueError(f"Duplicate class names in {self.vocabulary}.")
        return self

    def __len__(self) -> int:
        return len(self.entries)

    def resolve(self, path: Optional[str]) -> Optional[str]:
        if path is None or os.path.isabs(path) or self.root is None:
            return path
        return os.path.join(self.root, path)

    def audio_path(self, entry: ManifestEntry) -> str:
        return self.resolve(entry.audio_path)

    def annotation_path(self, entry: ManifestEntry) -> Optional[str]:
        return self.resolve(entry.annotation_path)

    def resolved(self) -> list[ManifestEntry]:
        """Entries with every path resolved against `root`."""
        return [
            ManifestEntry(
                clip_id=entry.clip_id,
                audio_path=self.audio_path(entry),
                annotation_path=self.annotation_path(entry),
            )
            for entry in self.entries
        ]

    def missing_files(self) -> list[str]:
        """Referenced files that do not exist right now."""
        missing = []
        for entry in self.entries:
            for path in (self.audio_path(entry), self.annotation_path(entry)):
                if path is not None and not os.path.exists(path):
                    missing.append(path)
        return missing

    def extend(self, entries: list[ManifestEntry]) -> "Manifest":
        return self.__class__(
            vocabulary=self.vocabulary,
            entries=[*self.entries, *entries],
            root=self.root,
        )

    @classmethod
    def from_json(cls, path: str) -> "Manifest":
        if not os.path.exists(path):
            raise ManifestError(f"Manifest file '{path}' does not exist.")
        try:
            with open(path) as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ManifestError(f"Manifest '{path}' is not valid JSON: {e}")
        if not isinstance(data, dict):
            raise ManifestError(f"Manifest '{path}' must be a JSON object.")
        data.setdefault("root", os.path.dirname(os.path.abspath(path)))
        try:
            return cls(**data)
        except ValidationError as e:
            raise ManifestError(f"Invalid manifest '{path}': {e}")

    def to_json(self, path: str) -> None:
        """Write the manifest with paths relative to the file's directory."""
        directory = os.path.dirname(os.path.abspath(path))
        entries = []
        for entry in self.entries:
            annotation = self.annotation_path(entry)
            entries.append(
                {
                    "clip_id": entry.clip_id,
                    "audio_path": _relative(self.audio_path(entry), directory),
                    "annotation_path": (
                        _relative(annotation, directory)
                        if annotation is not None
                        else None
                    ),
                }
            )
        with open(path, "w") as f:
            json.dump(
                {"vocabulary": self.vocabulary, "entries": entries},
                f,
                indent=2,
            )


def _relative(path: str, directory: str) -> str:
    return os.path.relpath(os.path.abspath(path), directory)
