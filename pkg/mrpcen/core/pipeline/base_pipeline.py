"""Base pipeline class for running a sequence of pipes."""

import logging
from enum import Enum
from typing import Any, AsyncGenerator, Optional

from ..logging.kv_logger import KVLoggingSingleton
from ..logging.run_manager import RunManager, manage_run
from ..pipes.base_pipe import AsyncPipe, AsyncState

logger = logging.getLogger(__name__)


class PipelineTypes(Enum):
    FEATURIZATION = "featurization"
    AUGMENTATION = "augmentation"
    DETECTION = "detection"
    EVAL = "eval"
    OTHER = "other"


class Pipeline:
    """
    Pipeline class for running a sequence of pipes.

    Each pipe consumes the output stream of the one before it; the first
    pipe consumes the pipeline input.
    """

    pipeline_type: str = "other"

    def __init__(
        self,
        pipe_logger: Optional[KVLoggingSingleton] = None,
        run_manager: Optional[RunManager] = None,
    ):
        self.pipes: list[AsyncPipe] = []
        self.pipe_logger = pipe_logger or KVLoggingSingleton()
        self.run_manager = run_manager or RunManager(self.pipe_logger)
        self.state: Optional[AsyncState] = None

    def add_pipe(self, pipe: AsyncPipe) -> None:
        logger.debug(
            f"Adding pipe {pipe.config.name} to the {self.pipeline_type} "
            "pipeline"
        )
        if any(p.config.name == pipe.config.name for p in self.pipes):
            raise ValueError(
                f"A pipe named {pipe.config.name} is already in the pipeline."
            )
        self.pipes.append(pipe)

    async def run(
        self,
        input: AsyncGenerator[Any, None],
        state: Optional[AsyncState] = None,
        stream: bool = False,
        run_manager: Optional[RunManager] = None,
        log_run_info: bool = True,
        *args: Any,
        **kwargs: Any,
    ):
        """Run the pipeline; keyword arguments reach every pipe."""
        run_manager = run_manager or self.run_manager

        try:
            PipelineTypes(self.pipeline_type)
        except ValueError:
            raise ValueError(
                f"Invalid pipeline type: {self.pipeline_type}, must be one "
                f"of {[t.value for t in PipelineTypes]}"
            )
        if not self.pipes:
            raise ValueError(f"The {self.pipeline_type} pipeline is empty.")

        self.state = state or AsyncState()
        current_input = input
        async with manage_run(run_manager, self.pipeline_type):
            if log_run_info:
                await run_manager.log_run_info(
                    key="pipeline_type",
                    value=self.pipeline_type,
                    is_info_log=True,
                )
            try:
                for pipe in self.pipes:
                    current_input = await pipe.run(
                        pipe.Input(message=current_input),
                        self.state,
                        run_manager,
                        *args,
                        **kwargs,
                    )
                if stream:
                    return current_input
                return await self._consume_all(current_input)
            except Exception as error:
                logger.error(f"Pipeline failed with error: {error}")
                raise error

    async def _consume_all(self, gen: AsyncGenerator) -> list[Any]:
        result = []
        async for item in gen:
            if hasattr(item, "__aiter__"):
                result.extend(await self._consume_all(item))
            else:
                result.append(item)
        return result


class FeaturizationPipeline(Pipeline):
    """Audio clips in, feature files and per-clip results out."""

    pipeline_type: str = "featurization"


class AugmentationPipeline(Pipeline):
    pipeline_type: str = "augmentation"


class DetectionPipeline(Pipeline):
    pipeline_type: str = "detection"


class EvalPipeline(Pipeline):
    """Reference and predicted events in, a metrics report out."""

    pipeline_type: str = "eval"
