import logging
import os
import shutil
from typing import Any, Optional

from mrpcen.core import (
    CLIP_ERRORS,
    AugmentationProvider,
    ClipPipe,
    ClipResult,
    ClipStatus,
    KVLoggingSingleton,
    ManifestEntry,
    PipeType,
    derived_clip_id,
    load_wav,
    write_wav,
)

logger = logging.getLogger(__name__)

AUDIO_DIR = "audio"
ANNOTATION_DIR = "annotations"


class AugmentationPipe(ClipPipe):
    """
    Writes every configured duplicate of each clip.

    Annotations are copied unchanged: reverb keeps the clip length and
    pitch shifting keeps its duration, so event times stay valid.
    """

    def __init__(
        self,
        augmentation_provider: AugmentationProvider,
        pipe_logger: Optional[KVLoggingSingleton] = None,
        type: PipeType = PipeType.AUGMENTER,
        config: Optional[ClipPipe.PipeConfig] = None,
        *args,
        **kwargs,
    ):
        self.augmentation_provider = augmentation_provider
        super().__init__(
            pipe_logger=pipe_logger,
            type=type,
            config=config
            or ClipPipe.PipeConfig(name="default_augmentation_pipe"),
            *args,
            **kwargs,
        )

    def _process(
        self,
        entry: ManifestEntry,
        out_dir: str,
        keep_originals: bool = True,
        **kwargs: Any,
    ) -> list[ClipResult]:
        results = []
        if keep_originals:
            results.append(
                ClipResult(
                    clip_id=entry.clip_id, status=ClipStatus.OK, entry=entry
                )
            )
        variants = self.augmentation_provider.variants
        if not variants:
            return results

        clip = load_wav(entry.audio_path)
        for variant in variants:
            clip_id = derived_clip_id(entry.clip_id, variant)
            try:
                augmented = self.augmentation_provider.augment(clip, variant)
            except CLIP_ERRORS as e:
                logger.warning(f"Augmentation '{clip_id}' failed: {e}")
                results.append(
                    ClipResult(
                        clip_id=clip_id,
                        status=ClipStatus.FAILED,
                        error=str(e),
                    )
                )
                continue
            audio_name = os.path.join(AUDIO_DIR, f"{clip_id}.wav")
            write_wav(os.path.join(out_dir, audio_name), augmented)
            outputs = [audio_name]
            annotation_path = None
            if entry.annotation_path is not None:
                annotation_name = os.path.join(
                    ANNOTATION_DIR, f"{clip_id}.csv"
                )
                annotation_path = os.path.join(out_dir, annotation_name)
                shutil.copyfile(entry.annotation_path, annotation_path)
                outputs.append(annotation_name)
            results.append(
                ClipResult(
                    clip_id=clip_id,
                    status=ClipStatus.OK,
                    shape=[len(augmented)],
                    outputs=outputs,
                    entry=ManifestEntry(
                        clip_id=clip_id,
                        audio_path=os.path.abspath(
                            os.path.join(out_dir, audio_name)
                        ),
                        annotation_path=(
                            os.path.abspath(annotation_path)
                            if annotation_path
                            else None
                        ),
                    ),
                )
            )
        return results
